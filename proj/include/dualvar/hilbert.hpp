#ifndef DUALVAR_HILBERT_HPP
#define DUALVAR_HILBERT_HPP

#include "dualvar/groebner.hpp"

namespace dualvar {

/// Hilbert series of a homogeneous quotient R/I, derived invariants attached.
/// The series is numerator(t) / (1-t)^nvars; reduced(t) is the numerator after
/// cancelling every factor of (1-t), so reduced(1) != 0.
struct HilbertData {
  int nvars = 0;
  std::vector<mpz_class> numerator;
  std::vector<mpz_class> reduced;
  int cone_dim = 0;   // pole order at t = 1 (Krull dimension of the cone)
  int proj_dim = -1;  // cone_dim - 1; -1 means the empty projective scheme
  mpz_class degree;   // reduced(1)
  int span_defect = 0;  // independent degree-1 forms in the ideal
  std::vector<mpq_class> hilbert_poly;  // coefficients, constant term first
};

/// Hilbert numerator of a monomial ideal via pivot recursion; exposed so
/// tests can drive it on hand-made ideals.
std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, int nvars);

/// Series and invariants of R/I through the leading-term ideal of gb.
HilbertData hilbert_data(const GroebnerBasis& gb);

/// Hilbert function value (coefficient of t^d in the series).
mpz_class hilbert_function(const HilbertData& hd, int d);

/// Value of the Hilbert polynomial at integer t.
mpq_class hilbert_poly_value(const HilbertData& hd, long t);

}  // namespace dualvar

#endif
