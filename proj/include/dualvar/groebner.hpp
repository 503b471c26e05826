#ifndef DUALVAR_GROEBNER_HPP
#define DUALVAR_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "dualvar/polynomial.hpp"

namespace dualvar {

struct GroebnerLimits {
  std::uint32_t max_pair_degree = 30;
  std::size_t max_basis = 20000;
};

/// Thrown when a Buchberger run exceeds its resource caps; carries the state
/// reached so a claim can report status "limit" instead of a silent truncation.
class limit_error : public error {
 public:
  limit_error(std::uint32_t degree, std::size_t pairs, std::size_t basis)
      : error("groebner limit exceeded: S-pair degree " +
              std::to_string(degree) + " after " + std::to_string(pairs) +
              " pairs, basis size " + std::to_string(basis)),
        degree_reached(degree),
        pairs_processed(pairs),
        basis_size(basis) {}
  std::uint32_t degree_reached;
  std::size_t pairs_processed;
  std::size_t basis_size;
};

/// Reduced Gröbner basis: auto-reduced, normalized generators sorted by
/// ascending leading monomial, plus a fingerprint of the input ideal.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::uint64_t ideal_fingerprint = 0;
};

/// Buchberger with normal (degree-by-degree) selection and Gebauer-Moeller
/// pair elimination; deterministic for fixed inputs.  Generators must be
/// homogeneous, nonzero, and share a ring.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const GroebnerLimits& limits = {});

/// Same, but under an explicit order (the generators are converted).
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order,
                         const GroebnerLimits& limits = {});

/// Unique remainder of f modulo the basis; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens);

/// S-polynomial of two normalized generators (exposed for the certificate).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Post-hoc certificate: every S-polynomial of basis pairs and every original
/// generator reduces to zero.  Returns true when the certificate holds.
bool verify_groebner_certificate(const GroebnerBasis& gb,
                                 const std::vector<Polynomial>& originals);

/// Rank over the base field of the Jacobian matrix (dg_i/dx_j) at the point.
/// The point must be nonzero and every generator must vanish on it.
int jacobian_rank_at(const std::vector<Polynomial>& generators,
                     const std::vector<Scalar>& point);

}  // namespace dualvar

#endif
