#ifndef DUALVAR_POLYNOMIAL_HPP
#define DUALVAR_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualvar/ring.hpp"

namespace dualvar {

struct Term {
  Monomial m;
  Scalar c;
};

/// Exact multivariate polynomial in canonical form: terms strictly descending
/// under the ring's monomial order, no zero coefficients stored.  Two equal
/// polynomials are structurally identical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Builds the canonical form from an arbitrary term list (merges duplicate
  /// monomials, drops zeros, sorts).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  /// Trusted constructor: terms must already be canonical (strictly
  /// descending, nonzero coefficients).
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(ring); }
  static Polynomial constant(RingPtr ring, Scalar c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }

  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;
  std::uint32_t degree() const;  // total degree; 0 for the zero polynomial

  bool is_homogeneous() const;
  /// Bidegree under the ring's grading split; requires bihomogeneity.
  std::pair<std::uint32_t, std::uint32_t> bidegree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// f minus c * m * g in one merge pass; the workhorse of reduction.
  static Polynomial axpy(const Polynomial& f, const Scalar& c,
                         const Monomial& m, const Polynomial& g);

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact value of f at point (one scalar per ring variable, same field).
Scalar poly_eval(const Polynomial& f, const std::vector<Scalar>& point);

/// Exact formal partial derivative with respect to variable var_index.
Polynomial poly_diff(const Polynomial& f, int var_index);

/// Composes f with the given images of its variables; assignment[i] is the
/// image of variable i and all images must live in a common ring.
Polynomial poly_subst(const Polynomial& f,
                      const std::vector<Polynomial>& assignment);

/// Name-keyed substitution into target_ring; variables absent from the map
/// must exist in target_ring under the same name and map to themselves.
Polynomial poly_subst(const Polynomial& f, const RingPtr& target_ring,
                      const std::map<std::string, Polynomial>& assignment);

/// Gröbner input normalization: monic over F_p; over Q, content-free integer
/// coefficients with positive leading coefficient.
Polynomial normalize_generator(const Polynomial& f);

}  // namespace dualvar

#endif
