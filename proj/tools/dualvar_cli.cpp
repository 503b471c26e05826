// Claim-manifest runner: parses a manifest of verification claims, dispatches
// them to the exact engines, and emits a machine-readable report.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dualvar/claims.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dualvar: exact verification workbench for dual varieties"};
  std::string run = "all";
  std::string manifest_path = dualvar::claims::builtin_manifest_path();
  std::string chr;
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  bool have_seed = false;
  int samples = 0;
  bool list = false;
  bool strict_limits = false;
  int jobs = 1;

  app.add_option("--run", run, "comma-separated claim ids, or 'all'");
  app.add_flag("--list", list, "list claims in the manifest and exit");
  app.add_option("--manifest", manifest_path, "manifest json path");
  app.add_option("--char", chr, "field for unpinned claims: a prime, or Q");
  app.add_option("--seed", seed, "global seed (default from manifest)")
      ->each([&](const std::string&) { have_seed = true; });
  app.add_option("--samples", samples, "default sample count override");
  app.add_option("--format", format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the report to this path");
  app.add_flag("--strict-limits", strict_limits,
               "exit 3 if any claim hit a resource limit");
  app.add_option("--jobs", jobs, "worker pool size (claims are independent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto manifest = dualvar::claims::load_manifest(manifest_path);
    if (have_seed) manifest.seed = seed;
    if (samples > 0) manifest.samples = samples;
    if (!chr.empty()) {
      if (chr == "Q")
        manifest.default_field = dualvar::QQ();
      else
        manifest.default_field = dualvar::GF(std::stoull(chr));
    }

    if (list) {
      for (const auto& c : manifest.claims)
        std::cout << c.id << "  [" << c.engine << "]  " << c.anchor << "\n";
      return 0;
    }

    std::vector<std::string> only;
    if (run != "all") {
      std::string cur;
      for (char ch : run + ",") {
        if (ch == ',') {
          if (!cur.empty()) only.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      for (const auto& id : only) {
        bool known = false;
        for (const auto& c : manifest.claims)
          if (c.id == id) known = true;
        if (!known) {
          std::cerr << "unknown claim id: " << id << "\n";
          return 2;
        }
      }
    }

    auto reports = dualvar::claims::run_manifest(manifest, jobs, only);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        std::cerr << "cannot open output path: " << out_path << "\n";
        return 2;
      }
      os = &file;
    }
    if (format == "json")
      *os << dualvar::claims::report_document(reports).dump(2) << "\n";
    else
      dualvar::claims::emit_text(reports, *os);

    return dualvar::claims::exit_code(reports, strict_limits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
