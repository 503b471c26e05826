#ifndef DUALVAR_VARIETIES_HPP
#define DUALVAR_VARIETIES_HPP

#include <optional>

#include "dualvar/chow.hpp"
#include "dualvar/groebner.hpp"
#include "dualvar/hilbert.hpp"
#include "dualvar/multigraded.hpp"
#include "dualvar/subspace.hpp"

namespace dualvar::varieties {

/// The five cases: genus 4, genus 5, genus 6 Q-type, genus 6 C-type, genus 8.
enum class CaseId { G4, G5, G6Q, G6C, G8 };

std::string case_name(CaseId c);
std::optional<CaseId> case_from_name(const std::string& s);

/// Hypersurface/ideal model of the dual image inside its coordinate space.
struct DualModel {
  CaseId c;
  RingPtr ring;
  std::vector<Polynomial> gens;  // empty for G8 (the image is all of P^11)
  std::string notes;
};

/// Defining equations per case.
///   G4: 3 + 3 + 9 quadrics (row/column incidences and the adjugate of the
///       3x3 block) plus the trace linear form, in 15 coordinates.
///   G5: the 18 rank-two minors of the 4x3 block plus 3 bilinear forms, in
///       16 coordinates.
///   G6C: one cubic in 13 coordinates.
/// G6Q and G8 are errors (no equations at this level).
DualModel build_dual_ideal(CaseId c, Field field);

/// Chern data of the two projectivized bundles per case (E side, then the
/// orthogonal side), assembled from Euler-sequence pieces on the base ring.
std::pair<chow::BundleSpec, chow::BundleSpec> bundle_chern_data(CaseId c);

/// -K of the base ring of the case, as a codim-1 class.
chow::ChowClass base_minus_canonical(CaseId c,
                                     const chow::ChowRingPtr& ring);

/// One sampled fiber of the orthogonal bundle: the fiber subspace, its
/// partner on the E side, and a sampled image point that must satisfy the
/// dual ideal.  Supported cases: G4, G5, G8.
struct FiberPoint {
  CaseId c;
  int section_space_dim = 0;      // dim V_E bookkeeping
  Subspace E_s;                   // fiber of E, in V_E coordinates
  Subspace E_s_perp;              // fiber of the orthogonal bundle
  std::vector<Scalar> ambient_point;
};

FiberPoint fiber_sample(CaseId c, Field field, std::uint64_t seed);

/// Evaluates every ideal generator at N sampled points; returns the number
/// of failures (0 on success).  Cases G4, G5.
int containment_check(CaseId c, Field field, int N, std::uint64_t seed);

/// Symbolic check that the incidence pairing of the parametrizing vector
/// against (p, r) expands to exactly the G6C cubic.
bool cubic_identity_check();

/// Symbolic check that the given singular-component parametrization
/// ("q=0" or "S_F") kills every partial derivative of the G6C cubic.
bool sing_gradient_check(const std::string& component);

struct SectionInvariants {
  int proj_dim = 0;
  mpz_class degree;
  std::vector<mpq_class> hilbert_poly;
  bool operator==(const SectionInvariants&) const = default;
};

/// Invariants of the intersection with codim random hyperplanes.
SectionInvariants linear_section_invariants(CaseId c, int codim, Field field,
                                            std::uint64_t seed,
                                            const GroebnerLimits& limits = {});

/// Translation of a (1,2) form and three (1,1) forms on P^2 x P^3 into a
/// linear section of the G5 dual model; the forms live in a ring with
/// variables x1..x3, y1..y4 and grading split 3.
DualModel cor46_section(const std::vector<Polynomial>& eta,
                        const Polynomial& xi);

/// Random inputs for the translation, drawn over the field.
std::pair<std::vector<Polynomial>, Polynomial> random_cor46_input(
    Field field, std::uint64_t seed);

struct Cor63Result {
  mpz_class sing_count;
  bool on_q0_component = false;
  int hessian_rank = 0;
};

/// Restricts the G6C cubic to a random P^5, computes its singular scheme,
/// and reports (number of singular points, whether the point lies on the
/// q = 0 component, rank of the quadratic part at the point).
Cor63Result cor63_probe(Field field, std::uint64_t seed,
                        const GroebnerLimits& limits = {});

/// Same probe on an explicit subspace, given as 13 rows of 6 parameter
/// coefficients (coordinate i restricts to sum_k rows[i][k] s_k).  A
/// non-finite singular scheme is an error.
Cor63Result cor63_probe_at(Field field,
                           const std::vector<std::vector<Scalar>>& rows,
                           const GroebnerLimits& limits = {});

enum class Lemma42Kind { line2, plane3 };

struct Lemma42Result {
  bool contained = false;  // the linear space lies inside the Segre variety
  mpz_class degree;        // degree of the intersection scheme otherwise
};

Lemma42Result lemma42_probe(Lemma42Kind kind, Field field, std::uint64_t seed);

/// Intersection of the line through two explicit Segre points (x1 ox y1),
/// (x2 ox y2) with the Segre variety of P^2 x P^3.
Lemma42Result lemma42_line(const std::vector<Scalar>& x1,
                           const std::vector<Scalar>& y1,
                           const std::vector<Scalar>& x2,
                           const std::vector<Scalar>& y2);

/// dim P(E) = dim S + rank E - 1 per case.
int projectivization_dim(CaseId c);

}  // namespace dualvar::varieties

#endif
