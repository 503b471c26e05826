#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualvar/hilbert.hpp"
#include "dualvar/parse.hpp"
#include "dualvar/rng.hpp"
#include "dualvar/varieties.hpp"

using namespace dualvar;
using namespace dualvar::varieties;

namespace {

const Field Fp = GF(32003);

int count_of_degree(const std::vector<Polynomial>& gens, std::uint32_t d) {
  int n = 0;
  for (const auto& g : gens)
    if (g.degree() == d) ++n;
  return n;
}

}  // namespace

TEST_CASE("case ids round-trip") {
  for (CaseId c : {CaseId::G4, CaseId::G5, CaseId::G6Q, CaseId::G6C, CaseId::G8})
    CHECK(case_from_name(case_name(c)) == c);
  CHECK_FALSE(case_from_name("G7").has_value());
}

TEST_CASE("genus-4 model: generator inventory") {
  auto dm = build_dual_ideal(CaseId::G4, Fp);
  CHECK(dm.ring->nvars() == 15);
  CHECK(dm.gens.size() == 16);
  CHECK(count_of_degree(dm.gens, 2) == 15);
  CHECK(count_of_degree(dm.gens, 1) == 1);
  for (const auto& g : dm.gens) CHECK(g.is_homogeneous());
  // Adjugate (1,1) entry.
  Polynomial adj11 = dm.gens[6];
  CHECK(adj11 == parse_poly("d22*d33 - d23*d32", dm.ring));
  // Trace generator.
  CHECK(dm.gens.back() == parse_poly("d11 + d22 + d33", dm.ring));
}

TEST_CASE("genus-5 model: 18 minors plus 3 bilinear forms") {
  auto dm = build_dual_ideal(CaseId::G5, Fp);
  CHECK(dm.ring->nvars() == 16);
  CHECK(dm.gens.size() == 21);
  CHECK(count_of_degree(dm.gens, 2) == 21);
  int minors = 0;
  for (const auto& g : dm.gens)
    if (g.nterms() == 2) ++minors;
  CHECK(minors == 18);
}

TEST_CASE("genus-6 C-type model: one cubic in thirteen coordinates") {
  auto dm = build_dual_ideal(CaseId::G6C, Fp);
  CHECK(dm.ring->nvars() == 13);  // 3 + 5 + 5
  REQUIRE(dm.gens.size() == 1);
  CHECK(dm.gens[0].degree() == 3);
  CHECK(dm.gens[0].nterms() == 11);
  CHECK(dm.gens[0].is_homogeneous());
}

TEST_CASE("cases without equation-level models are errors") {
  CHECK_THROWS_AS(build_dual_ideal(CaseId::G6Q, Fp), error);
  CHECK_THROWS_AS(build_dual_ideal(CaseId::G8, Fp), error);
}

TEST_CASE("incidence identity: the cubic is the pairing against x") {
  CHECK(cubic_identity_check());

  // Numeric spot-check of the same identity at random points.
  auto dm = build_dual_ideal(CaseId::G6C, Fp);
  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    auto pt = rng.vector(Fp, 13);
    auto q = [&](int i) { return pt[8 + i - 1]; };
    auto p = [&](int i) { return pt[i - 1]; };
    auto r = [&](int i) { return pt[3 + i - 1]; };
    Scalar lhs = p(1) * (q(2) * q(2) - q(1) * q(3)) +
                 p(2) * (q(1) * q(4) - q(2) * q(3)) +
                 p(3) * (q(3) * q(3) - q(2) * q(4)) +
                 q(5) * (r(1) * q(1) + r(2) * q(2) + r(3) * q(3) +
                         r(4) * q(4) + r(5) * q(5));
    CHECK(lhs == poly_eval(dm.gens[0], pt));
    // Both sides vanish on the q = 0 slice.
    for (int i = 8; i < 13; ++i) pt[i] = Scalar::zero(Fp);
    CHECK(poly_eval(dm.gens[0], pt).is_zero());
  }
}

TEST_CASE("hand fiber: rank-one block from marked covector and vector") {
  // y = e1*, x = e2, p = e2 + e3, q = e1 + e3 kills all sixteen generators.
  auto dm = build_dual_ideal(CaseId::G4, QQ());
  std::vector<Scalar> pt(15, Scalar::zero(QQ()));
  pt[1] = pt[2] = Scalar::one(QQ());      // p = e2 + e3
  pt[3] = pt[5] = Scalar::one(QQ());      // q = e1 + e3
  pt[6 + 3 * 0 + 1] = Scalar::one(QQ());  // D = e1 (x) e2 -> d12 = 1
  for (const auto& g : dm.gens) CHECK(poly_eval(g, pt).is_zero());
}

TEST_CASE("hand fiber: genus-5 rank-one block") {
  // u = e1, w = (1,1,1), p = e2*: the row covector kills the only row.
  auto dm = build_dual_ideal(CaseId::G5, QQ());
  std::vector<Scalar> pt(16, Scalar::zero(QQ()));
  for (int j = 0; j < 3; ++j) pt[j] = Scalar::one(QQ());  // d1j = 1
  pt[13] = Scalar::one(QQ());                             // p2 = 1
  for (const auto& g : dm.gens) CHECK(poly_eval(g, pt).is_zero());
}

TEST_CASE("sampled fibers: dims, orthogonality, membership") {
  for (CaseId c : {CaseId::G4, CaseId::G5, CaseId::G8}) {
    auto [E, Ep] = bundle_chern_data(c);
    for (int i = 0; i < 25; ++i) {
      auto fp = fiber_sample(c, Fp, derive_seed(900, i));
      CHECK(fp.E_s.dim() == E.rank);
      CHECK(fp.E_s_perp.dim() == fp.section_space_dim - E.rank);
      for (const auto& a : fp.E_s.basis())
        for (const auto& b : fp.E_s_perp.basis()) {
          Scalar dot = Scalar::zero(Fp);
          for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
          CHECK(dot.is_zero());
        }
    }
  }
  CHECK(containment_check(CaseId::G4, Fp, 100, 1) == 0);
  CHECK(containment_check(CaseId::G5, Fp, 100, 1) == 0);
  CHECK(containment_check(CaseId::G5, Fp, 0, 1) == 0);  // vacuous
  CHECK_THROWS_AS(fiber_sample(CaseId::G6C, Fp, 1), error);
}

TEST_CASE("gradient parametrizations of the singular components") {
  CHECK(sing_gradient_check("q=0"));
  CHECK(sing_gradient_check("S_F"));
  CHECK_THROWS_AS(sing_gradient_check("bogus"), error);

  // A generic image point (solve for r5 with q5 = 1) has nonzero gradient.
  auto dm = build_dual_ideal(CaseId::G6C, Fp);
  Rng rng(23);
  for (int t = 0; t < 5; ++t) {
    auto pt = rng.vector(Fp, 13);
    pt[12] = Scalar::one(Fp);  // q5 = 1
    pt[7] = Scalar::zero(Fp);  // clear r5, then solve
    pt[7] = -poly_eval(dm.gens[0], pt);
    REQUIRE(poly_eval(dm.gens[0], pt).is_zero());
    bool nonzero = false;
    for (int v = 0; v < 13; ++v)
      if (!poly_eval(poly_diff(dm.gens[0], v), pt).is_zero()) nonzero = true;
    CHECK(nonzero);
  }
}

TEST_CASE("cone over the twisted cubic dies along the S_F parametrization") {
  RingPtr R = build_dual_ideal(CaseId::G6C, QQ()).ring;
  RingPtr T = make_ring({"q2", "p3", "r2", "r3", "r4", "r5"}, QQ());
  std::map<std::string, Polynomial> im;
  Polynomial q2 = Polynomial::variable(T, 0);
  im["q1"] = Polynomial::constant(T, Scalar::one(QQ()));
  im["q3"] = q2 * q2;
  im["q4"] = q2 * q2 * q2;
  im["q5"] = Polynomial::zero(T);
  im["p1"] = q2 * q2 * Polynomial::variable(T, 1);
  im["p2"] = q2 * Polynomial::variable(T, 1);
  im["r1"] = -(q2 * Polynomial::variable(T, 2)) -
             (q2 * q2 * Polynomial::variable(T, 3)) -
             (q2 * q2 * q2 * Polynomial::variable(T, 4));
  for (const char* eq : {"q2^2 - q1*q3", "q1*q4 - q2*q3", "q3^2 - q2*q4", "q5"})
    CHECK(poly_subst(parse_poly(eq, R), T, im).is_zero());
}

TEST_CASE("linear sections reproduce the curve and threefold invariants") {
  // Genus-4 case, codim 6: canonical genus-8 curve of degree 14.
  auto s4 = linear_section_invariants(CaseId::G4, 6, Fp, 42);
  CHECK(s4.proj_dim == 1);
  CHECK(s4.degree == 14);
  REQUIRE(s4.hilbert_poly.size() == 2);
  CHECK(s4.hilbert_poly[0] == -7);
  CHECK(s4.hilbert_poly[1] == 14);

  // Genus-5 case, codim 7: canonical genus-9 curve of degree 16.
  auto s5 = linear_section_invariants(CaseId::G5, 7, Fp, 43);
  CHECK(s5.proj_dim == 1);
  CHECK(s5.degree == 16);
  CHECK(s5.hilbert_poly[0] == -8);
  CHECK(s5.hilbert_poly[1] == 16);

  // C-type cubic, codim 8: a cubic threefold.
  auto s6 = linear_section_invariants(CaseId::G6C, 8, Fp, 44);
  CHECK(s6.proj_dim == 3);
  CHECK(s6.degree == 3);

  // Stability across seeds.
  for (std::uint64_t seed : {7ull, 8ull}) {
    auto r = linear_section_invariants(CaseId::G4, 6, Fp, seed);
    CHECK(r == s4);
  }
}

TEST_CASE("successive hyperplanes keep the degree and drop the dimension") {
  for (CaseId c : {CaseId::G4, CaseId::G5}) {
    auto base = build_dual_ideal(c, Fp);
    auto hd0 = hilbert_data(buchberger(base.gens));
    for (int codim = 1; codim <= hd0.proj_dim - 1; ++codim) {
      auto si = linear_section_invariants(c, codim, Fp, 1000 + codim);
      CHECK(si.proj_dim == hd0.proj_dim - codim);
      CHECK(si.degree == hd0.degree);
    }
  }
}

TEST_CASE("coordinate-change invariance of the hilbert data") {
  auto dm = build_dual_ideal(CaseId::G4, Fp);
  auto hd0 = hilbert_data(buchberger(dm.gens));
  Rng rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    int n = dm.ring->nvars();
    Matrix A;
    do {
      A.clear();
      for (int i = 0; i < n; ++i) A.push_back(rng.vector(Fp, n));
    } while (matrix_rank(A, Fp) != n);
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) {
      std::vector<Term> ts;
      for (int j = 0; j < n; ++j)
        if (!A[i][j].is_zero()) ts.push_back({Monomial::var(n, j), A[i][j]});
      images.push_back(Polynomial::from_terms(dm.ring, std::move(ts)));
    }
    std::vector<Polynomial> moved;
    for (const auto& g : dm.gens) moved.push_back(poly_subst(g, images));
    auto hd = hilbert_data(buchberger(moved));
    CHECK(hd.proj_dim == hd0.proj_dim);
    CHECK(hd.degree == hd0.degree);
    CHECK(hd.span_defect == hd0.span_defect);
  }
}

TEST_CASE("curve section from a (1,2) form and three (1,1) forms") {
  auto [eta, xi] = random_cor46_input(Fp, 271828);
  auto dm = cor46_section(eta, xi);
  CHECK(dm.ring->nvars() == 16);
  CHECK(dm.gens.size() == 21 + 4 + 3);
  auto hd = hilbert_data(buchberger(dm.gens));
  CHECK(hd.proj_dim == 1);
  CHECK(hd.degree == 16);
  REQUIRE(hd.hilbert_poly.size() == 2);
  CHECK(hd.hilbert_poly[0] == -8);
  CHECK(hd.hilbert_poly[1] == 16);

  // Consistency with the product-side invariants: same degree and genus.
  auto ci =
      multigraded::ci_curve_invariants({2, 3, {{1, 1}, {1, 1}, {1, 1}, {1, 2}}});
  CHECK(ci.d1 + ci.d2 == 16);
  mpq_class genus = 1 - hd.hilbert_poly[0];
  CHECK(genus == mpq_class(static_cast<long>(ci.g)));

  // A repeated form degenerates the section: not a curve.
  auto bad_eta = eta;
  bad_eta[1] = bad_eta[0];
  auto dm_bad = cor46_section(bad_eta, xi);
  auto hd_bad = hilbert_data(buchberger(dm_bad.gens));
  CHECK(hd_bad.proj_dim != 1);
}

TEST_CASE("cubic fourfold probe: one double point on the q = 0 plane") {
  for (std::uint64_t seed : {1ull, 2ull}) {
    auto r = cor63_probe(Fp, seed);
    CHECK(r.sing_count == 1);
    CHECK(r.on_q0_component);
    CHECK(r.hessian_rank == 5);
  }

  // A subspace inside {q5 = 0} is not general: the singular scheme blows up.
  Rng rng(5);
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < 13; ++i) rows.push_back(rng.vector(Fp, 6));
  for (auto& v : rows[12]) v = Scalar::zero(Fp);  // q5 restricts to zero
  CHECK_THROWS_AS(cor63_probe_at(Fp, rows), error);
}

TEST_CASE("line and plane sections of the Segre fourfold") {
  for (int i = 0; i < 10; ++i) {
    auto l = lemma42_probe(Lemma42Kind::line2, Fp, derive_seed(60, i));
    CHECK_FALSE(l.contained);
    CHECK(l.degree == 2);
    auto p = lemma42_probe(Lemma42Kind::plane3, Fp, derive_seed(61, i));
    CHECK_FALSE(p.contained);
    CHECK(p.degree == 3);
  }

  // Two points on one fiber span a line inside the variety.
  Rng rng(99);
  auto x = rng.nonzero_vector(Fp, 3);
  auto y1 = rng.nonzero_vector(Fp, 4);
  auto y2 = rng.nonzero_vector(Fp, 4);
  auto r = lemma42_line(x, y1, x, y2);
  CHECK(r.contained);
}

TEST_CASE("G8 chern data carries the frozen dual-side classes") {
  auto [E, Ep] = bundle_chern_data(CaseId::G8);
  auto R = Ep.base;
  using chow::ChowClass;
  CHECK(Ep.rank == 9);
  CHECK(Ep.dual_chern.at(1) == ChowClass::basis(R, 1, 0) * 2);
  CHECK(Ep.dual_chern.at(2) == ChowClass::basis(R, 2, 0) * 13);
  CHECK(Ep.dual_chern.at(3) == ChowClass::basis(R, 3, 0) * 14);
  CHECK(E.rank + Ep.rank == Ep.section_space_dim);
}

TEST_CASE("G5 chern data against the direct expansion") {
  auto [E, Ep] = bundle_chern_data(CaseId::G5);
  auto R = Ep.base;
  using chow::ChowClass;
  ChowClass h = ChowClass::basis(R, 1, 0);
  CHECK(Ep.dual_chern.at(1) == h * 4);
  CHECK(Ep.dual_chern.at(2) == h * h * 7);
  CHECK(Ep.dual_chern.at(3) == h * h * h * 8);
}

TEST_CASE("Q-type sides swap into each other") {
  auto [E, Ep] = bundle_chern_data(CaseId::G6Q);
  CHECK(E.rank == Ep.rank);
  CHECK(E.dual_chern == Ep.dual_chern);
  CHECK(E.section_space_dim == Ep.section_space_dim);
}
