#include "dualvar/piclattice.hpp"

namespace dualvar::piclattice {

long long pairing(const DivisorClass& a, const DivisorClass& b,
                  const SurfaceLattice& L) {
  if (static_cast<int>(a.c.size()) != L.rank() ||
      static_cast<int>(b.c.size()) != L.rank())
    throw error("divisor class size does not match lattice rank");
  long long v = a.c[0] * b.c[0];
  for (int i = 1; i <= L.k; ++i) v -= a.c[i] * b.c[i];
  return v;
}

DivisorClass canonical_vector(const SurfaceLattice& L) {
  // K = -3m + sum e_i, i.e. (c_m, c_i) = (-3, -1, ..., -1).
  return DivisorClass::make(-3, L.k, -1);
}

long long genus_of_class(const DivisorClass& c, const SurfaceLattice& L) {
  long long self = pairing(c, c, L);
  long long withK = pairing(c, canonical_vector(L), L);
  if ((self + withK) % 2 != 0)
    throw error("C^2 + C.K odd: not a curve class");
  return (self + withK) / 2 + 1;
}

SuiteReport prop73_suite() {
  SurfaceLattice L{4};
  DivisorClass C = DivisorClass::make(5, 4, 2);    // 5m - 2 sum e
  DivisorClass mK = DivisorClass::make(3, 4, 1);   // -K = 3m - sum e
  SuiteReport r;
  auto record = [&](const std::string& name, long long got, long long want) {
    r.values.push_back({name, got});
    if (got != want) r.pass = false;
  };
  record("C^2", pairing(C, C, L), 9);
  record("C.K", pairing(C, canonical_vector(L), L), -7);
  record("genus", genus_of_class(C, L), 2);
  record("delta_degree", pairing(mK, C, L), 7);  // (-K).C, the degree-7 divisor
  record("K^2", pairing(mK, mK, L), 5);          // quintic del Pezzo
  return r;
}

SuiteReport rem45_suite() {
  SurfaceLattice L{6};
  DivisorClass C2 = DivisorClass::make(7, 6, 2);   // 7m - 2 sum f
  DivisorClass q = DivisorClass::make(2, 6, 1);    // 2m - sum f (conic transform)
  DivisorClass cube = DivisorClass::make(3, 6, 1); // 3m - sum f (to the cubic)
  SuiteReport r;
  auto record = [&](const std::string& name, long long got, long long want) {
    r.values.push_back({name, got});
    if (got != want) r.pass = false;
  };
  record("genus", genus_of_class(C2, L), 9);
  record("C2.q", pairing(C2, q, L), 2);
  record("cubic_degree", pairing(cube, cube, L), 3);
  record("C2_degree_on_T", pairing(cube, C2, L), 9);
  return r;
}

}  // namespace dualvar::piclattice
