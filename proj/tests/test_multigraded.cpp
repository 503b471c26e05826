#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualvar/multigraded.hpp"

using namespace dualvar;
using namespace dualvar::multigraded;

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent oracle: inclusion-exclusion over subsets of the divisors.
long long value_by_subsets(const CISpec& s, int a, int b) {
  int m = static_cast<int>(s.divisors.size());
  long long total = 0;
  for (int mask = 0; mask < (1 << m); ++mask) {
    int aa = a, bb = b, bits = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) {
        aa -= s.divisors[i].first;
        bb -= s.divisors[i].second;
        ++bits;
      }
    if (aa < 0 || bb < 0) continue;
    long long term = binom(aa + s.m, s.m) * binom(bb + s.n, s.n);
    total += (bits % 2 == 0) ? term : -term;
  }
  return total;
}

const CISpec genus9{2, 3, {{1, 1}, {1, 1}, {1, 1}, {1, 2}}};
const CISpec genus8{2, 2, {{1, 1}, {2, 1}, {1, 2}}};

}  // namespace

TEST_CASE("series values: frozen points and the subset oracle") {
  CISpec empty{2, 3, {}};
  CHECK(ci_hilbert_value(empty, 1, 1) == 12);
  CHECK(ci_hilbert_value(genus9, 4, 4) == 56);
  CHECK(ci_hilbert_value(genus8, 4, 4) == 49);
  CHECK(49 == 7 * 4 + 7 * 4 + 1 - 8);

  for (const CISpec& s : {empty, genus9, genus8})
    for (int a = 0; a <= 7; ++a)
      for (int b = 0; b <= 7; ++b)
        CHECK(ci_hilbert_value(s, a, b) == value_by_subsets(s, a, b));
}

TEST_CASE("empty spec is a product of binomials on the window") {
  CISpec empty{3, 2, {}};
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      CHECK(ci_hilbert_value(empty, a, b) ==
            binom(a + 3, 3) * binom(b + 2, 2));
}

TEST_CASE("curve invariants of the named intersections") {
  CHECK(ci_curve_invariants(genus9) == CurveInvariants{7, 9, 9});
  CHECK(ci_curve_invariants(genus8) == CurveInvariants{7, 7, 8});
  CISpec rational{1, 1, {{1, 1}}};
  CHECK(ci_curve_invariants(rational) == CurveInvariants{1, 1, 0});
}

TEST_CASE("canonical restriction: d1 + d2 = 2g - 2") {
  for (const CISpec& s : {genus9, genus8}) {
    auto ci = ci_curve_invariants(s);
    CHECK(ci.d1 + ci.d2 == 2 * ci.g - 2);
  }
}

TEST_CASE("non-curve specs are rejected") {
  CISpec surface{2, 2, {{1, 1}, {1, 1}}};
  CHECK_THROWS_AS(ci_curve_invariants(surface), error);
  CISpec bad{2, 2, {{0, 0}}};
  CHECK_THROWS_AS(bad.validate(), error);
  CISpec toomany{1, 1, {{1, 1}, {1, 1}, {1, 1}}};
  CHECK_THROWS_AS(toomany.validate(), error);
}

TEST_CASE("series table agrees with on-demand values") {
  BigradedSeries s(genus9, 8);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      CHECK(s.value(a, b) == ci_hilbert_value(genus9, a, b));
  CHECK_THROWS_AS(s.value(9, 0), error);
}

TEST_CASE("riemann-roch counts") {
  CHECK(rr_h0(25, 9) == 17);
  CHECK(rr_h0(0, 0) == 1);
  CHECK(rr_h0(17, 8) == 10);
  CHECK_THROWS_AS(rr_h0(16, 9), error);   // not above 2g - 2
  CHECK_THROWS_AS(rr_h0(10, -1), error);
}

TEST_CASE("quadrics through a canonical curve") {
  CHECK(canonical_quadric_count(9) == 21);
  CHECK(canonical_quadric_count(5) == 3);
  CHECK(canonical_quadric_count(8) == 15);
  CHECK_THROWS_AS(canonical_quadric_count(4), error);
}
