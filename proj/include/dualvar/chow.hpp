#ifndef DUALVAR_CHOW_HPP
#define DUALVAR_CHOW_HPP

#include <memory>
#include <string>
#include <vector>

#include "dualvar/field.hpp"

namespace dualvar::chow {

class ChowRing;
using ChowRingPtr = std::shared_ptr<const ChowRing>;

/// Finitely presented intersection ring: an integer basis per codimension, a
/// full multiplication table on basis classes, and an integration functional
/// on the top codimension.  Construction validates commutativity,
/// associativity on all basis triples, and a unit integral on the point class.
class ChowRing : public std::enable_shared_from_this<ChowRing> {
 public:
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  int basis_size(int codim) const {
    return (codim < 0 || codim > dim_) ? 0
                                       : static_cast<int>(basis_[codim].size());
  }
  const std::string& label(int codim, int i) const { return basis_[codim][i]; }

  /// Structure constants of basis(ca)[i] * basis(cb)[j] over basis(ca+cb);
  /// empty when the product lands beyond the dimension.
  const std::vector<long long>& product(int ca, int i, int cb, int j) const;

  long long integral(int i) const { return integral_[i]; }

  class Builder;

 private:
  std::string name_;
  int dim_ = 0;
  std::vector<std::vector<std::string>> basis_;
  // table_[ca][cb][i][j] -> coefficients over basis(ca+cb)
  std::vector<std::vector<std::vector<std::vector<std::vector<long long>>>>>
      table_;
  std::vector<long long> integral_;
  std::vector<long long> empty_;

  void validate() const;
  friend class Builder;
};

class ChowRing::Builder {
 public:
  Builder(std::string name, int dim);
  Builder& basis(int codim, std::vector<std::string> labels);
  /// Sets basis(ca)[i] * basis(cb)[j] (and the transpose) to coeffs.
  Builder& product(int ca, int i, int cb, int j, std::vector<long long> coeffs);
  Builder& integral(std::vector<long long> values);
  ChowRingPtr build();

 private:
  std::shared_ptr<ChowRing> r_;
};

/// Pure-codimension element of a ChowRing as integer coordinates over the
/// codimension's basis; codim > dim means zero.
struct ChowClass {
  ChowRingPtr ring;
  int codim = 0;
  std::vector<long long> coeff;

  static ChowClass zero(ChowRingPtr ring, int codim);
  static ChowClass unit(ChowRingPtr ring);
  static ChowClass basis(ChowRingPtr ring, int codim, int i);

  bool is_zero() const;
  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator*(const ChowClass& o) const;
  ChowClass operator*(long long k) const;
  ChowClass operator-() const { return *this * -1; }
  bool operator==(const ChowClass& o) const;

  /// Degree against the integration functional; requires codim == dim.
  long long integrate() const;

  std::string str() const;
};

/// Truncated total Chern class c_0 = 1, c_1, ..., up to min(rank, dim).
struct ChernPoly {
  ChowRingPtr ring;
  int rank = 0;
  std::vector<ChowClass> c;

  const ChowClass& at(int i) const;  // zero class beyond stored entries
  bool operator==(const ChernPoly& o) const;
  std::string str() const;
};

ChernPoly chern_trivial(ChowRingPtr ring, int rank);
ChernPoly chern_line(const ChowClass& c1);

/// Whitney product of total classes, truncated at the base dimension.
ChernPoly chern_whitney(const ChernPoly& a, const ChernPoly& b);

/// Dual bundle: c_i flips sign in odd codimension.
ChernPoly chern_dual(const ChernPoly& a);

/// Twist by a line bundle: c_k(E ox L) = sum_i C(r-i, k-i) c_i(E) c1(L)^{k-i}.
ChernPoly chern_twist(const ChernPoly& a, const ChowClass& line_c1);

/// Truncated multiplicative inverse of the total class (Segre series),
/// entries s_0 = 1, s_1, ..., s_dim.
std::vector<ChowClass> segre_series(const ChernPoly& a);

/// Rank-n tangent-twist class c(T_{P^n}(-1)) pulled back: 1 + h t + ... with
/// h the given hyperplane class, truncated at the base dimension.
ChernPoly chern_tangent_twist(const ChowClass& hyperplane, int rank);

/// Projectivized-bundle data for one case: the base ring, the bundle rank,
/// the total Chern class of the DUAL bundle (the globally generated side),
/// and the dimension of the section space for ambient bookkeeping.
struct BundleSpec {
  ChowRingPtr base;
  int rank = 0;
  ChernPoly dual_chern;
  int section_space_dim = 0;
};

/// Degree of the image of P(F) under its tautological system: the integral
/// of the codim-(dim base) Segre class of F itself, i.e. dualize the stored
/// dual-side Chern class, invert, extract, integrate.
long long pushforward_degree(const BundleSpec& b);

struct CanonicalClass {
  int taut_coeff = 0;
  ChowClass base_class;
  bool operator==(const CanonicalClass& o) const {
    return taut_coeff == o.taut_coeff && base_class == o.base_class;
  }
};

/// -K_{P(F)} = rank(F) H + pi^*(c1(F) - K_S), returned as the tautological
/// coefficient and the base class c1(F) + (-K_S).
CanonicalClass canonical_class(const BundleSpec& b, const ChowClass& minus_KS);

// The intersection rings in play.
ChowRingPtr projective_space(int n);
ChowRingPtr b5_ring();    // quintic del Pezzo threefold: H^2 = 5l, Hl = pt
ChowRingPtr b6_ring();    // flag threefold in P^2 x P^2: h1^2 + h2^2 = h1h2
ChowRingPtr q3_ring();    // quadric threefold: h^2 = 2l, hl = pt
ChowRingPtr ac_hat_ring();  // del Pezzo fourfold blown up along a plane

}  // namespace dualvar::chow

#endif
