#include "dualvar/multigraded.hpp"

namespace dualvar::multigraded {

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void CISpec::validate() const {
  if (m < 0 || n < 0) throw error("ambient dimensions must be nonnegative");
  if (static_cast<int>(divisors.size()) > m + n)
    throw error("too many cutting divisors");
  for (auto [a, b] : divisors) {
    if (a < 0 || b < 0) throw error("bidegrees must be nonnegative");
    if (a == 0 && b == 0) throw error("divisor of bidegree (0,0)");
  }
}

BigradedSeries::BigradedSeries(CISpec spec, int window)
    : spec_(std::move(spec)), window_(window) {
  spec_.validate();
  table_.assign(window + 1, std::vector<long long>(window + 1, 0));
  for (int a = 0; a <= window; ++a)
    for (int b = 0; b <= window; ++b)
      table_[a][b] = binom(a + spec_.m, spec_.m) * binom(b + spec_.n, spec_.n);
  // Multiply by (1 - u^{ai} v^{bi}) one divisor at a time.
  for (auto [ai, bi] : spec_.divisors)
    for (int a = window; a >= 0; --a)
      for (int b = window; b >= 0; --b)
        if (a >= ai && b >= bi) table_[a][b] -= table_[a - ai][b - bi];
}

long long BigradedSeries::value(int a, int b) const {
  if (a < 0 || b < 0) throw error("series index must be nonnegative");
  if (a > window_ || b > window_) throw error("index beyond table window");
  return table_[a][b];
}

long long ci_hilbert_value(const CISpec& spec, int a, int b) {
  if (a < 0 || b < 0) throw error("series index must be nonnegative");
  BigradedSeries s(spec, std::max(a, b));
  return s.value(a, b);
}

CurveInvariants ci_curve_invariants(const CISpec& spec) {
  spec.validate();
  if (spec.m + spec.n - static_cast<int>(spec.divisors.size()) != 1)
    throw error("spec does not cut a curve");
  BigradedSeries s(spec, 6);
  CurveInvariants ci;
  ci.d1 = s.value(4, 3) - s.value(3, 3);
  ci.d2 = s.value(3, 4) - s.value(3, 3);
  ci.g = 1 - (s.value(3, 3) - 3 * ci.d1 - 3 * ci.d2);
  for (int a = 3; a <= 6; ++a)
    for (int b = 3; b <= 6; ++b)
      if (s.value(a, b) != ci.d1 * a + ci.d2 * b + 1 - ci.g)
        throw error("no exact affine fit on the window; enlarge window");
  return ci;
}

long long rr_h0(long long d, long long g) {
  if (g < 0) throw error("genus must be nonnegative");
  if (d <= 2 * g - 2) throw error("degree not above 2g - 2; divisor may be special");
  return d - g + 1;
}

long long canonical_quadric_count(long long g) {
  if (g < 5) throw error("count valid only for genus >= 5");
  return g * (g + 1) / 2 - 3 * g + 3;
}

}  // namespace dualvar::multigraded
