#pragma once

// Command-line surface: configuration resolution (defaults, environment,
// flags), the subcommand implementations, and report emission in both the
// human text format and the versioned JSON format.

#include "iso/classify.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace iso {

struct Config {
  std::string modpoly_dir = "data/modpoly";
  std::string jtable_path = "data/jtable.txt";
  std::uint64_t seed = 42;
  long samples = 500;
  long height_bound = 50;
  std::string format = "text";  // "text" | "json"
  int parallelism = 1;
};

// Defaults with ISOGENY_MODPOLY_DIR / ISOGENY_JTABLE / ISOGENY_SEED /
// ISOGENY_SAMPLES / ISOGENY_HEIGHT_BOUND / ISOGENY_FORMAT /
// ISOGENY_PARALLELISM applied on top; command-line flags are layered on top
// of the result by run_cli. Malformed values raise std::invalid_argument.
Config config_from_env();

// JSON report builders (stable key order; "elapsed" fields are the only
// run-dependent content for a fixed config).
nlohmann::ordered_json lemma_suites_json(const std::vector<VerificationResult>& results);
nlohmann::ordered_json psi_json(const PsiSet& set);
nlohmann::ordered_json factor_json(long level, const BigRat& j, const FactorPattern& pattern);
nlohmann::ordered_json claim_report_json(const ClaimReport& report, const Config& cfg);
nlohmann::ordered_json fiber_search_json(const std::string& gname, const std::string& fname,
                                         const FiberSearchResult& result);

// Entry point used by the binary: parses argv, dispatches the subcommand,
// writes the report to stdout. Exit codes: 0 all checks passed, 1 at least
// one suite/claim failed, 2 infrastructure or usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace iso
