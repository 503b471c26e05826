// Acceptance suite: runs the built-in claim manifest and reports one
// pass/fail line per verification criterion, including the per-criterion
// wall-clock budget.

#include <iomanip>
#include <iostream>
#include <map>
#include <vector>

#include "dualvar/claims.hpp"

using dualvar::claims::ClaimReport;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> claim_ids;
  long long budget_ms;
};

const std::vector<Criterion> kCriteria = {
    {1, "genus-4 ideal: projective dimension 7, degree 14",
     {"gb.g4.invariants"}, 120000},
    {2, "genus-5 ideal: projective dimension 8, degree 16",
     {"gb.g5.invariants"}, 120000},
    {3, "pushforward degrees (14, 16, 3, 2) and cross-engine equality",
     {"chow.degree.g4", "chow.degree.g5", "chow.degree.g6c", "chow.degree.g8",
      "cross.degree.g4", "cross.degree.g5"},
     244000},
    {4, "rank-6 Chern product on the quintic del Pezzo threefold",
     {"chow.b5.product"}, 1000},
    {5, "anticanonical classes (5H, 6H, 9H, 8H + cA)",
     {"chow.canonical.g4", "chow.canonical.g5", "chow.canonical.g8",
      "chow.canonical.g6c"},
     4000},
    {6, "fourfold table identities (5, 2, 1, 0)",
     {"chow.achat.identities"}, 1000},
    {7, "product curve invariants (7,9,9) and (7,7,8) with canonical sums",
     {"mg.curve.genus9", "mg.curve.genus8", "mg.canonical_sum.genus9",
      "mg.canonical_sum.genus8"},
     4000},
    {8, "Riemann-Roch counts 17 and 21",
     {"mg.rr_h0", "mg.quadric_count"}, 1000},
    {9, "linear sections: 14t-7, 16t-8, and the cubic threefold",
     {"sections.g4", "sections.g5", "sections.g6c"}, 540000},
    {10, "translated (1,2)-form sections: degree-16 genus-9 curves",
     {"cor46.roundtrip"}, 180000},
    {11, "symbolic singular loci of the cubic",
     {"g6c.cubic_identity", "g6c.gradient.q0", "g6c.gradient.sf"}, 3000},
    {12, "Jacobian rank probes (3 singular, 7 smooth; 20 samples each)",
     {"jacobian.g5.d0", "jacobian.g5.generic", "jacobian.g4.generic"}, 90000},
    {13, "cubic fourfold probe: one ordinary double point, five seeds",
     {"cor63.probe"}, 300000},
    {14, "duality identity (1000 configs) and fiber orthogonality (100/case)",
     {"lindual.lemma22", "fibers.orth.g4", "fibers.orth.g5", "fibers.orth.g8"},
     10000},
    {15, "secant and trisecant probes: degrees 2 and 3, ten seeds each",
     {"lemma42.line2", "lemma42.plane3"}, 60000},
    {16, "lattice suites: genus 2 / degree 7 / 5, and genus 9 / 2 / 3",
     {"lattice.prop73", "lattice.rem45"}, 2000},
    {17, "self-dual case: equal degrees on both sides (value reported)",
     {"selfdual.q.equal", "selfdual.q.value"}, 2000},
    {18, "span measurements: defect 1 for genus 4, 0 for genus 5 and C-type",
     {"span.g4", "span.g5", "span.g6c"}, 250000},
};

}  // namespace

int main() {
  auto manifest = dualvar::claims::load_manifest(
      dualvar::claims::builtin_manifest_path());
  auto reports = dualvar::claims::run_manifest(manifest, 1);
  std::map<std::string, const ClaimReport*> by_id;
  for (const auto& r : reports) by_id[r.id] = &r;

  int failed = 0;
  for (const auto& crit : kCriteria) {
    bool ok = true;
    long long ms = 0;
    std::string detail;
    for (const auto& id : crit.claim_ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        ok = false;
        detail += " [missing " + id + "]";
        continue;
      }
      const ClaimReport& r = *it->second;
      ms += r.elapsed_ms;
      if (r.status != "pass" && r.status != "report-only") {
        ok = false;
        detail += " [" + id + ": " + r.status + " computed=" +
                  r.computed.dump() + "]";
      }
      if (r.status == "report-only")
        detail += " [" + id + " -> " + r.computed.dump() + "]";
    }
    if (ms > crit.budget_ms) {
      ok = false;
      detail += " [over budget " + std::to_string(ms) + "ms > " +
                std::to_string(crit.budget_ms) + "ms]";
    }
    if (!ok) ++failed;
    std::cout << "CRITERION " << std::setw(2) << crit.number << " "
              << (ok ? "PASS" : "FAIL") << "  (" << std::setw(6) << ms
              << " ms)  " << crit.description << detail << "\n";
  }

  // Claims outside the criterion table still have to hold.
  for (const auto& r : reports) {
    bool in_table = false;
    for (const auto& crit : kCriteria)
      for (const auto& id : crit.claim_ids)
        if (id == r.id) in_table = true;
    if (!in_table && r.status != "pass" && r.status != "report-only") {
      ++failed;
      std::cout << "EXTRA CLAIM " << r.id << " " << r.status << " computed="
                << r.computed.dump() << "\n";
    }
  }

  std::cout << (failed == 0 ? "ACCEPTANCE: all criteria pass"
                            : "ACCEPTANCE: " + std::to_string(failed) +
                                  " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
