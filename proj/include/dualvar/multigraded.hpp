#ifndef DUALVAR_MULTIGRADED_HPP
#define DUALVAR_MULTIGRADED_HPP

#include <utility>
#include <vector>

#include "dualvar/field.hpp"

namespace dualvar::multigraded {

/// Complete intersection in P^m x P^n cut by divisors of the given bidegrees.
struct CISpec {
  int m = 0, n = 0;
  std::vector<std::pair<int, int>> divisors;

  void validate() const;
};

/// Exact bigraded Hilbert series prod(1 - u^a v^b) / ((1-u)^{m+1}(1-v)^{n+1}),
/// held as a truncated coefficient table.
class BigradedSeries {
 public:
  BigradedSeries(CISpec spec, int window);

  long long value(int a, int b) const;
  int window() const { return window_; }
  const CISpec& spec() const { return spec_; }

 private:
  CISpec spec_;
  int window_;
  std::vector<std::vector<long long>> table_;
};

/// Coefficient of u^a v^b in the series of spec.
long long ci_hilbert_value(const CISpec& spec, int a, int b);

struct CurveInvariants {
  long long d1 = 0, d2 = 0, g = 0;
  bool operator==(const CurveInvariants&) const = default;
};

/// Unique (d1, d2, g) with value(a, b) = d1 a + d2 b + 1 - g across the whole
/// window [3..6]^2; errors if the spec does not cut a curve or no exact
/// affine fit exists in the window.
CurveInvariants ci_curve_invariants(const CISpec& spec);

/// Riemann-Roch count d - g + 1 for a line bundle of degree d > 2g - 2.
long long rr_h0(long long d, long long g);

/// Quadrics through a canonical genus-g curve: g(g+1)/2 - 3g + 3, valid for
/// g >= 5 non-hyperelliptic curves.
long long canonical_quadric_count(long long g);

}  // namespace dualvar::multigraded

#endif
