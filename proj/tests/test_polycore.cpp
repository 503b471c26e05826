#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualvar/parse.hpp"
#include "dualvar/rng.hpp"
#include "dualvar/varieties.hpp"

using namespace dualvar;

namespace {

Polynomial random_poly(const RingPtr& R, Rng& rng, int maxterms = 6,
                       int maxexp = 3) {
  std::vector<Term> ts;
  int n = 1 + static_cast<int>(rng.below(maxterms));
  for (int t = 0; t < n; ++t) {
    std::vector<std::uint16_t> e(R->nvars());
    for (int i = 0; i < R->nvars(); ++i)
      e[i] = static_cast<std::uint16_t>(rng.below(maxexp + 1));
    ts.push_back({Monomial(std::move(e)), rng.scalar(R->field)});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and field-strict") {
  Scalar a = Scalar::rational(mpq_class(2, 4));
  CHECK(a.rat() == mpq_class(1, 2));  // always lowest terms
  Scalar b = Scalar::residue(7, 15);
  CHECK(b.res() == 1);
  CHECK_THROWS_AS(a + b, error);  // never a coercion
  CHECK((Scalar::residue(32003, 5).inverse() * Scalar::residue(32003, 5))
            .is_one());
  CHECK_THROWS_AS(Scalar::zero(QQ()).inverse(), error);
}

TEST_CASE("parse: twisted-cubic quadric") {
  RingPtr R = make_ring({"y1", "y2", "y3", "y4"}, QQ());
  Polynomial f = parse_poly("y2^2 - y1*y3", R);
  CHECK(f.nterms() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 2);
}

TEST_CASE("parse: zero and the binomial identity") {
  RingPtr R = make_ring({"x", "y"}, QQ());
  CHECK(parse_poly("0", R).is_zero());
  CHECK(parse_poly("(x+y)^2 - x^2 - 2*x*y - y^2", R).is_zero());
}

TEST_CASE("parse errors carry a position") {
  RingPtr R = make_ring({"x", "y"}, QQ());
  CHECK_THROWS_AS(parse_poly("x + ", R), parse_error);
  CHECK_THROWS_AS(parse_poly("x * z", R), parse_error);  // unknown variable
  CHECK_THROWS_AS(parse_poly("x^70000", R), parse_error);
  try {
    parse_poly("x + z*y", R);
  } catch (const parse_error& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("eval: point on the twisted cubic and a residue product") {
  RingPtr R = make_ring({"y1", "y2", "y3", "y4"}, QQ());
  Polynomial f = parse_poly("y2^2 - y1*y3", R);
  std::vector<Scalar> pt = {Scalar(QQ(), 1), Scalar(QQ(), 2), Scalar(QQ(), 4),
                            Scalar(QQ(), 8)};
  CHECK(poly_eval(f, pt).is_zero());

  RingPtr R7 = make_ring({"x", "y"}, GF(7));
  Polynomial g = parse_poly("x*y", R7);
  CHECK(poly_eval(g, {Scalar::residue(7, 3), Scalar::residue(7, 5)}).is_one());

  CHECK_THROWS_AS(poly_eval(f, {Scalar(QQ(), 1)}), error);
}

TEST_CASE("diff: basic rules and the cubic's p1 partial") {
  RingPtr R = make_ring({"y1", "y2", "y3", "y4"}, QQ());
  Polynomial f = parse_poly("y2^2 - y1*y3", R);
  CHECK(poly_diff(f, 1) == parse_poly("2*y2", R));
  CHECK(poly_diff(parse_poly("5", R), 0).is_zero());
  CHECK_THROWS_AS(poly_diff(f, 9), error);

  auto dm = varieties::build_dual_ideal(varieties::CaseId::G6C, QQ());
  Polynomial cubic = dm.gens[0];
  CHECK(poly_diff(cubic, 0) == parse_poly("q2^2 - q1*q3", dm.ring));
}

TEST_CASE("subst: parametrization, identity, incidence form") {
  RingPtr R = make_ring({"q1", "q2", "q3", "q4", "q5"}, QQ());
  Polynomial f = parse_poly("q2^2 - q1*q3", R);
  RingPtr T = make_ring({"q2"}, QQ());
  std::map<std::string, Polynomial> images;
  images["q1"] = Polynomial::constant(T, Scalar::one(QQ()));
  images["q3"] = parse_poly("q2^2", T);
  images["q4"] = parse_poly("q2^3", T);
  images["q5"] = Polynomial::zero(T);
  CHECK(poly_subst(f, T, images).is_zero());

  // Identity substitution.
  std::vector<Polynomial> id;
  for (int i = 0; i < R->nvars(); ++i) id.push_back(Polynomial::variable(R, i));
  CHECK(poly_subst(f, id) == f);

  // tr D under d_ij := y_i x_j becomes the incidence form sum y_i x_i.
  RingPtr D = make_ring({"d11", "d22", "d33"}, QQ());
  RingPtr XY = make_ring({"y1", "y2", "y3", "x1", "x2", "x3"}, QQ());
  std::map<std::string, Polynomial> seg;
  seg["d11"] = parse_poly("y1*x1", XY);
  seg["d22"] = parse_poly("y2*x2", XY);
  seg["d33"] = parse_poly("y3*x3", XY);
  Polynomial tr = parse_poly("d11 + d22 + d33", D);
  CHECK(poly_subst(tr, XY, seg) == parse_poly("y1*x1 + y2*x2 + y3*x3", XY));
}

TEST_CASE("ring axioms as properties") {
  for (Field f : {QQ(), GF(32003)}) {
    RingPtr R = make_ring({"x", "y", "z"}, f);
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial a = random_poly(R, rng);
      Polynomial b = random_poly(R, rng);
      Polynomial c = random_poly(R, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      auto pt = rng.vector(f, 3);
      CHECK(poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt));
      CHECK(poly_eval(a + b, pt) == poly_eval(a, pt) + poly_eval(b, pt));
    }
  }
}

TEST_CASE("parse then format is the identity on canonical forms") {
  for (Field f : {QQ(), GF(32003)}) {
    RingPtr R = make_ring({"x", "y", "z"}, f);
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial a = random_poly(R, rng);
      CHECK(parse_poly(a.str(), R) == a);
    }
  }
}

TEST_CASE("Leibniz rule on random pairs") {
  RingPtr R = make_ring({"x", "y", "z"}, GF(32003));
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(R, rng);
    Polynomial b = random_poly(R, rng);
    int v = static_cast<int>(rng.below(3));
    CHECK(poly_diff(a * b, v) == poly_diff(a, v) * b + a * poly_diff(b, v));
  }
}

TEST_CASE("homogeneous times homogeneous adds (bi)degrees") {
  RingPtr R = make_ring({"x1", "x2", "y1", "y2"}, QQ(),
                        MonomialOrder::degrevlex(), 2);
  Polynomial a = parse_poly("x1*y1 + x2*y2", R);
  Polynomial b = parse_poly("x1*y2^2 - x2*y1*y2", R);
  CHECK(a.bidegree() == std::pair<std::uint32_t, std::uint32_t>{1, 1});
  CHECK(b.bidegree() == std::pair<std::uint32_t, std::uint32_t>{1, 2});
  CHECK((a * b).bidegree() == std::pair<std::uint32_t, std::uint32_t>{2, 3});
  CHECK((a * b).is_homogeneous());
  CHECK_FALSE((a + Polynomial::constant(R, Scalar::one(QQ()))).is_homogeneous());
}

TEST_CASE("monomial exponent overflow is a hard error") {
  RingPtr R = make_ring({"x"}, QQ());
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial big = x.pow(60000);
  CHECK_THROWS_AS(big * big, error);
}
