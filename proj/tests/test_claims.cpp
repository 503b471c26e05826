#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dualvar/claims.hpp"

using namespace dualvar;
using namespace dualvar::claims;

namespace {

ClaimManifest manifest_from(const char* text) {
  return parse_manifest(json::parse(text));
}

}  // namespace

TEST_CASE("empty manifest: empty report, clean exit") {
  auto m = manifest_from(R"({"claims": []})");
  auto reports = run_manifest(m, 1);
  CHECK(reports.empty());
  CHECK(exit_code(reports, true) == 0);
}

TEST_CASE("unknown operations fail in isolation") {
  auto m = manifest_from(R"({
    "claims": [
      {"id": "bogus", "engine": "no.such_op", "expected": 1},
      {"id": "rr", "engine": "multigraded.rr_h0",
       "params": {"d": 25, "g": 9}, "expected": 17}
    ]})");
  auto reports = run_manifest(m, 1);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].status == "fail");
  CHECK(reports[0].computed.contains("error"));
  CHECK(reports[1].status == "pass");
  CHECK(exit_code(reports, false) == 1);
}

TEST_CASE("duplicate claim ids are rejected") {
  CHECK_THROWS_AS(manifest_from(R"({
    "claims": [
      {"id": "a", "engine": "multigraded.rr_h0", "params": {"d": 25, "g": 9}},
      {"id": "a", "engine": "multigraded.rr_h0", "params": {"d": 25, "g": 9}}
    ]})"),
                  error);
}

TEST_CASE("report-only claims carry no verdict") {
  auto m = manifest_from(R"({
    "claims": [
      {"id": "dims", "engine": "chow.projectivization_dims"}
    ]})");
  auto reports = run_manifest(m, 1);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == "report-only");
  CHECK(reports[0].computed["G4"] == 11);
  CHECK(reports[0].computed["G5"] == 12);
  CHECK(reports[0].computed["G6Q"] == 9);
  CHECK(reports[0].computed["G6C"] == 8);
  CHECK(reports[0].computed["G8"] == 5);
  CHECK(exit_code(reports, true) == 0);
}

TEST_CASE("selection runs only the requested ids, in manifest order") {
  auto m = load_manifest(builtin_manifest_path());
  auto reports =
      run_manifest(m, 1, {"mg.rr_h0", "lattice.prop73", "chow.degree.g8"});
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].id == "chow.degree.g8");  // manifest order, not request order
  CHECK(reports[1].id == "mg.rr_h0");
  CHECK(reports[2].id == "lattice.prop73");
  for (const auto& r : reports) CHECK(r.status == "pass");
}

TEST_CASE("determinism: same seed, same computed values; pool size free") {
  auto m = load_manifest(builtin_manifest_path());
  std::vector<std::string> ids = {"lemma42.line2", "jacobian.g5.d0",
                                  "fibers.orth.g8"};
  auto a = run_manifest(m, 1, ids);
  auto b = run_manifest(m, 4, ids);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].computed == b[i].computed);
    CHECK(a[i].seed == b[i].seed);
  }
  // A different global seed changes the stream, not the verdict.
  auto m2 = m;
  m2.seed = 99;
  auto c = run_manifest(m2, 1, ids);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i].status == "pass");
}

TEST_CASE("field overrides: rational claims run over Q") {
  auto m = load_manifest(builtin_manifest_path());
  auto reports = run_manifest(m, 1, {"gb.twisted_cubic.Q"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == "pass");
}

TEST_CASE("text report renders a summary line") {
  auto m = load_manifest(builtin_manifest_path());
  auto reports = run_manifest(m, 1, {"mg.rr_h0", "dims.projectivizations"});
  std::ostringstream os;
  emit_text(reports, os);
  std::string text = os.str();
  CHECK(text.find("1 pass / 0 fail / 0 limit") != std::string::npos);
  CHECK(text.find("report-only") != std::string::npos);

  auto doc = report_document(reports);
  CHECK(doc["summary"]["pass"] == 1);
  CHECK(doc["summary"]["report_only"] == 1);
  CHECK(doc["claims"].size() == 2);
}

TEST_CASE("limit status is distinguished from failure") {
  auto m = manifest_from(R"({
    "limits": {"max_pair_degree": 1},
    "claims": [
      {"id": "g4", "engine": "groebner.ideal_invariants",
       "params": {"case": "G4"}, "expected": {"proj_dim": 7, "degree": 14}}
    ]})");
  auto reports = run_manifest(m, 1);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == "limit");
  CHECK(exit_code(reports, false) == 0);
  CHECK(exit_code(reports, true) == 3);
}

TEST_CASE("the builtin manifest lists every engine it needs") {
  auto m = load_manifest(builtin_manifest_path());
  auto names = engine_names();
  for (const auto& c : m.claims) {
    bool known = false;
    for (const auto& n : names)
      if (n == c.engine) known = true;
    CHECK_MESSAGE(known, c.engine);
  }
  CHECK(m.claims.size() >= 40);
}
