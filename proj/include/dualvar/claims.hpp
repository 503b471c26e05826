#ifndef DUALVAR_CLAIMS_HPP
#define DUALVAR_CLAIMS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualvar/field.hpp"
#include "dualvar/groebner.hpp"

namespace dualvar::claims {

// Plain json (sorted keys): object comparison is order-insensitive and the
// emitted field order is stable.
using json = nlohmann::json;

struct ClaimRecord {
  std::string id;
  std::string engine;  // module.op name in the registry
  json params;
  json expected;  // value, or the string "report-only"
  std::string anchor;
  std::string field_override;  // "", "p", or "Q"
};

struct ClaimManifest {
  Field default_field = GF(kDefaultPrime);
  std::uint64_t seed = 1;
  int samples = 100;
  GroebnerLimits limits;
  std::vector<ClaimRecord> claims;
};

struct ClaimReport {
  std::string id;
  std::string status;  // pass | fail | limit | report-only
  json expected;
  json computed;
  long long elapsed_ms = 0;
  std::uint64_t seed = 0;
};

/// Parses a manifest document; throws on malformed structure or duplicate ids.
ClaimManifest parse_manifest(const json& doc);
ClaimManifest load_manifest(const std::string& path);

/// Path of the built-in manifest mirroring the verification table.
std::string builtin_manifest_path();

/// Runs the selected claims (empty selection = all) on a pool of the given
/// size.  Report order is manifest order regardless of completion order, and
/// every computed value depends only on (manifest seed, claim id).
std::vector<ClaimReport> run_manifest(const ClaimManifest& manifest,
                                      int parallelism,
                                      const std::vector<std::string>& only = {});

/// Registered engine names, sorted.
std::vector<std::string> engine_names();

void emit_text(const std::vector<ClaimReport>& reports, std::ostream& os);
json report_document(const std::vector<ClaimReport>& reports);

/// Exit code policy: 0 clean, 1 any fail, 3 any limit when strict.
int exit_code(const std::vector<ClaimReport>& reports, bool strict_limits);

}  // namespace dualvar::claims

#endif
