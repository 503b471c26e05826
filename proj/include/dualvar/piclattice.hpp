#ifndef DUALVAR_PICLATTICE_HPP
#define DUALVAR_PICLATTICE_HPP

#include <string>
#include <vector>

#include "dualvar/field.hpp"

namespace dualvar::piclattice {

/// Picard lattice of the blow-up of the plane at k points: rank 1 + k,
/// diagonal form (+1, -1, ..., -1), canonical class -3m + sum e_i.
struct SurfaceLattice {
  int k = 0;
  int rank() const { return 1 + k; }
};

/// Integer class c_m * m - sum_i c_i * e_i, stored as (c_m, c_1, ..., c_k).
struct DivisorClass {
  std::vector<long long> c;

  static DivisorClass make(long long cm, int k, long long all) {
    DivisorClass d;
    d.c.assign(1 + k, all);
    d.c[0] = cm;
    return d;
  }
};

long long pairing(const DivisorClass& a, const DivisorClass& b,
                  const SurfaceLattice& L);

DivisorClass canonical_vector(const SurfaceLattice& L);

/// Adjunction genus (C^2 + C.K)/2 + 1; parity violation is an error.
long long genus_of_class(const DivisorClass& c, const SurfaceLattice& L);

struct SuiteReport {
  std::vector<std::pair<std::string, long long>> values;
  bool pass = true;
};

/// Quintic 4-nodal plane curve on the k = 4 blow-up: genus 2, delta degree 7,
/// (-K)^2 = 5.
SuiteReport prop73_suite();

/// Septic 6-nodal plane curve with nodes on a conic, k = 6: genus 9,
/// conic-transform pairing 2, cubic-surface degree 3.
SuiteReport rem45_suite();

}  // namespace dualvar::piclattice

#endif
