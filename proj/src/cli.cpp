#include "iso/cli.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace iso {
namespace {

using nlohmann::ordered_json;

long parse_long_env(const char* name, const char* value) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || value[used] != '\0')
    throw std::invalid_argument(std::string(name) + ": expected an integer, got \"" + value +
                                "\"");
  return out;
}

std::uint64_t parse_u64_env(const char* name, const char* value) {
  std::size_t used = 0;
  std::uint64_t out = 0;
  try {
    out = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || value[used] != '\0')
    throw std::invalid_argument(std::string(name) + ": expected a non-negative integer, got \"" +
                                value + "\"");
  return out;
}

std::string fixed3(double seconds) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << seconds;
  return os.str();
}

// Which suites a `--prime p` filter selects, by suite id convention
// (-p<p> / -l<p> tokens; the mod-2 bounds, the mod-3 generation check, and
// the mixed counting suite are mapped explicitly).
bool suite_matches_prime(const std::string& id, long p) {
  auto has_token = [&](const std::string& tag) {
    for (std::size_t pos = id.find(tag); pos != std::string::npos; pos = id.find(tag, pos + 1)) {
      const std::size_t end = pos + tag.size();
      if (end == id.size() || !std::isdigit(static_cast<unsigned char>(id[end]))) return true;
    }
    return false;
  };
  if (has_token("-p" + std::to_string(p)) || has_token("-l" + std::to_string(p))) return true;
  if (p == 2 && id.rfind("mod2-bound", 0) == 0) return true;
  if (p == 3 && id == "borel-generation") return true;
  if ((p == 2 || p == 3 || p == 5) && id == "index-arithmetic") return true;
  return false;
}

const char* mode_name(VerificationResult::Mode mode) {
  return mode == VerificationResult::Mode::Exhaustive ? "exhaustive" : "randomized";
}

void print_suite_text(const VerificationResult& r) {
  std::cout << (r.passed ? "[pass] " : "[FAIL] ") << r.claim_id << "  " << mode_name(r.mode)
            << "  checked=" << r.checked << " nonvacuous=" << r.nonvacuous;
  if (r.mode == VerificationResult::Mode::Randomized)
    std::cout << " samples=" << r.samples << " seed=" << r.seed;
  std::cout << "  (" << fixed3(r.elapsed_seconds) << " s)\n";
  if (r.counterexample) std::cout << "       counterexample: " << *r.counterexample << "\n";
  if (!r.notes.empty()) std::cout << "       notes: " << r.notes << "\n";
}

int cmd_verify_lemmas(const Config& cfg, const std::string& claim_filter, long prime_filter) {
  auto all = run_standard_suites(cfg.samples, cfg.seed, cfg.parallelism);
  std::vector<VerificationResult> selected;
  for (auto& r : all) {
    if (!claim_filter.empty() && r.claim_id.find(claim_filter) == std::string::npos) continue;
    if (prime_filter > 0 && !suite_matches_prime(r.claim_id, prime_filter)) continue;
    selected.push_back(std::move(r));
  }
  if (selected.empty()) {
    std::cerr << "error: no lemma suite matches the given filters\n";
    return 2;
  }
  bool ok = true;
  for (const auto& r : selected) ok = ok && r.passed;
  if (cfg.format == "json") {
    std::cout << lemma_suites_json(selected).dump(2) << "\n";
  } else {
    for (const auto& r : selected) print_suite_text(r);
    long passed = 0;
    for (const auto& r : selected)
      if (r.passed) ++passed;
    std::cout << "suites: " << passed << "/" << selected.size() << " passed\n";
  }
  return ok ? 0 : 1;
}

int cmd_psi(const Config& cfg, long degree) {
  const PsiSet set = psi(degree);
  if (cfg.format == "json") {
    std::cout << psi_json(set).dump(2) << "\n";
  } else {
    std::cout << "psi(" << set.degree << "): " << set.members.size() << " members\n";
    for (long n : set.members)
      std::cout << "  " << n << "  " << psi_rule_name(set.provenance.at(n)) << "\n";
  }
  return 0;
}

int cmd_modpoly_factor(const Config& cfg, long level, const std::string& jstr,
                       bool show_factors) {
  const BigRat j = parse_rational(jstr);
  const ModPolyDB db = load_modpoly_db(cfg.modpoly_dir);
  const FactorPattern pattern = isogeny_field_degrees(level, j, db);
  if (cfg.format == "json") {
    std::cout << factor_json(level, j, pattern).dump(2) << "\n";
    return 0;
  }
  long degree = 0;
  for (const auto& part : pattern.parts)
    degree += static_cast<long>(part.degree()) * part.multiplicity;
  std::cout << "level " << level << " at j = " << rational_str(j) << ": degree " << degree
            << ", factor degrees {";
  const auto degs = pattern.degrees();
  for (std::size_t i = 0; i < degs.size(); ++i) std::cout << (i ? "," : "") << degs[i];
  std::cout << "}\n";
  if (show_factors) {
    for (const auto& part : pattern.parts)
      std::cout << "  degree " << part.degree() << " multiplicity " << part.multiplicity
                << ": " << part.factor.str() << "\n";
  }
  return 0;
}

int cmd_check_claims(const Config& cfg) {
  const ModPolyDB db = load_modpoly_db(cfg.modpoly_dir);
  const JTable table = load_jtable(cfg.jtable_path);
  validate_jtable(table, db);
  CheckConfig ccfg;
  ccfg.samples = cfg.samples;
  ccfg.seed = cfg.seed;
  ccfg.height_bound = cfg.height_bound;
  ccfg.parallelism = cfg.parallelism;
  const ClaimReport report = check_claims(db, table, ccfg);
  if (cfg.format == "json") {
    std::cout << claim_report_json(report, cfg).dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) {
      std::cout << (e.passed ? "[ok]   " : "[FAIL] ") << e.claim_id << "  " << e.status
                << "  (" << fixed3(e.elapsed_seconds) << " s)\n";
      std::cout << "       " << e.evidence << "\n";
    }
    long passed = 0;
    for (const auto& e : report.entries)
      if (e.passed) ++passed;
    std::cout << "claims: " << passed << "/" << report.entries.size() << " passed\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_fiber_search(const Config& cfg, const std::string& gname, const std::string& fname) {
  const CurveParam* g = curve_by_name(gname);
  const CurveParam* f = curve_by_name(fname);
  if (g == nullptr || f == nullptr) {
    std::cerr << "error: unknown curve name \"" << (g == nullptr ? gname : fname)
              << "\" (known: X3, X7, X20, X0_3, X0_5, X0_7, X0_13)\n";
    return 2;
  }
  const FiberSearchResult result =
      fiber_product_search(*g, *f, cfg.height_bound, cfg.parallelism);
  if (cfg.format == "json") {
    std::cout << fiber_search_json(gname, fname, result).dump(2) << "\n";
    return 0;
  }
  std::cout << gname << "(h) = " << fname << "(t), height <= " << result.height_bound << ": "
            << result.hits.size() << " hits, poles skipped t:" << result.poles_t
            << " h:" << result.poles_h << "\n";
  for (const auto& hit : result.hits)
    std::cout << "  t=" << rational_str(hit.t) << "  h=" << rational_str(hit.h)
              << "  j=" << rational_str(hit.j) << "  " << (hit.cm ? "CM" : "non-CM") << "\n";
  return 0;
}

}  // namespace

Config config_from_env() {
  Config cfg;
  if (const char* v = std::getenv("ISOGENY_MODPOLY_DIR")) cfg.modpoly_dir = v;
  if (const char* v = std::getenv("ISOGENY_JTABLE")) cfg.jtable_path = v;
  if (const char* v = std::getenv("ISOGENY_SEED")) cfg.seed = parse_u64_env("ISOGENY_SEED", v);
  if (const char* v = std::getenv("ISOGENY_SAMPLES"))
    cfg.samples = parse_long_env("ISOGENY_SAMPLES", v);
  if (const char* v = std::getenv("ISOGENY_HEIGHT_BOUND"))
    cfg.height_bound = parse_long_env("ISOGENY_HEIGHT_BOUND", v);
  if (const char* v = std::getenv("ISOGENY_FORMAT")) {
    const std::string s = v;
    if (s != "text" && s != "json")
      throw std::invalid_argument("ISOGENY_FORMAT: expected \"text\" or \"json\", got \"" + s +
                                  "\"");
    cfg.format = s;
  }
  if (const char* v = std::getenv("ISOGENY_PARALLELISM"))
    cfg.parallelism = static_cast<int>(parse_long_env("ISOGENY_PARALLELISM", v));
  return cfg;
}

ordered_json lemma_suites_json(const std::vector<VerificationResult>& results) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = "verify-lemmas";
  ordered_json suites = ordered_json::array();
  bool ok = true;
  for (const auto& r : results) {
    ordered_json s;
    s["claim_id"] = r.claim_id;
    s["mode"] = mode_name(r.mode);
    s["samples"] = r.samples;
    s["seed"] = r.seed;
    s["checked"] = r.checked;
    s["nonvacuous"] = r.nonvacuous;
    if (r.counterexample) s["counterexample"] = *r.counterexample;
    else s["counterexample"] = nullptr;
    s["notes"] = r.notes;
    s["passed"] = r.passed;
    s["elapsed"] = r.elapsed_seconds;
    suites.push_back(std::move(s));
    ok = ok && r.passed;
  }
  doc["suites"] = std::move(suites);
  doc["all_passed"] = ok;
  return doc;
}

ordered_json psi_json(const PsiSet& set) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = "psi";
  doc["degree"] = set.degree;
  doc["count"] = set.members.size();
  ordered_json members = ordered_json::array();
  for (long n : set.members) {
    ordered_json m;
    m["n"] = n;
    m["rule"] = psi_rule_name(set.provenance.at(n));
    members.push_back(std::move(m));
  }
  doc["members"] = std::move(members);
  return doc;
}

ordered_json factor_json(long level, const BigRat& j, const FactorPattern& pattern) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = "modpoly-factor";
  doc["level"] = level;
  doc["j"] = rational_str(j);
  long degree = 0;
  for (const auto& part : pattern.parts)
    degree += static_cast<long>(part.degree()) * part.multiplicity;
  doc["degree"] = degree;
  doc["content"] = rational_str(pattern.content);
  doc["degrees"] = pattern.degrees();
  ordered_json factors = ordered_json::array();
  for (const auto& part : pattern.parts) {
    ordered_json f;
    f["degree"] = part.degree();
    f["multiplicity"] = part.multiplicity;
    f["polynomial"] = part.factor.str();
    factors.push_back(std::move(f));
  }
  doc["factors"] = std::move(factors);
  return doc;
}

ordered_json claim_report_json(const ClaimReport& report, const Config& cfg) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = "check-claims";
  ordered_json config;
  config["modpoly_dir"] = cfg.modpoly_dir;
  config["jtable_path"] = cfg.jtable_path;
  config["seed"] = cfg.seed;
  config["samples"] = cfg.samples;
  config["height_bound"] = cfg.height_bound;
  config["parallelism"] = cfg.parallelism;
  doc["config"] = std::move(config);
  ordered_json claims = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json c;
    c["claim_id"] = e.claim_id;
    c["anchor"] = e.anchor;
    c["statement"] = e.statement;
    c["status"] = e.status;
    c["evidence"] = e.evidence;
    c["elapsed"] = e.elapsed_seconds;
    c["passed"] = e.passed;
    claims.push_back(std::move(c));
  }
  doc["claims"] = std::move(claims);
  doc["all_passed"] = report.all_passed();
  return doc;
}

ordered_json fiber_search_json(const std::string& gname, const std::string& fname,
                               const FiberSearchResult& result) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = "fiber-search";
  doc["g"] = gname;
  doc["f"] = fname;
  doc["height_bound"] = result.height_bound;
  doc["poles_t"] = result.poles_t;
  doc["poles_h"] = result.poles_h;
  ordered_json hits = ordered_json::array();
  for (const auto& hit : result.hits) {
    ordered_json h;
    h["t"] = rational_str(hit.t);
    h["h"] = rational_str(hit.h);
    h["j"] = rational_str(hit.j);
    h["cm"] = hit.cm;
    hits.push_back(std::move(h));
  }
  doc["hits"] = std::move(hits);
  return doc;
}

int run_cli(int argc, const char* const* argv) {
  Config cfg;
  try {
    cfg = config_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact verification toolkit for cyclic-isogeny degree classifications"};
  app.require_subcommand(1);
  app.add_option("--modpoly-dir", cfg.modpoly_dir,
                 "directory with the modular polynomial files")
      ->capture_default_str();
  app.add_option("--jtable", cfg.jtable_path, "path to the j-invariant tables")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the randomized suites")->capture_default_str();
  app.add_option("--samples", cfg.samples, "sample count for the randomized suites")
      ->capture_default_str();
  app.add_option("--height", cfg.height_bound, "height bound for fiber searches")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--parallelism", cfg.parallelism, "worker thread budget")
      ->capture_default_str();

  auto* lem = app.add_subcommand("verify-lemmas", "run the lemma verification suites");
  lem->fallthrough();
  std::string claim_filter;
  long prime_filter = -1;
  lem->add_option("--claim", claim_filter, "substring filter on suite ids");
  lem->add_option("--prime", prime_filter, "restrict to suites about this prime");

  auto* psic = app.add_subcommand("psi", "print a degree-classification set");
  psic->fallthrough();
  long degree = 1;
  psic->add_option("degree", degree, "field degree (1, 2, or a prime)")->required();

  auto* mpf = app.add_subcommand("modpoly-factor",
                                 "factor a specialized modular polynomial over Q");
  mpf->fallthrough();
  long level = 2;
  std::string jstr;
  bool show_factors = false;
  mpf->add_option("level", level, "isogeny degree (a prime power p, p^2, or p^3)")->required();
  mpf->add_option("j", jstr, "rational j-invariant, as p/q")->required();
  mpf->add_flag("--factors", show_factors, "also print the factors (text format)");

  auto* chk = app.add_subcommand("check-claims", "run the full claim-verification pipeline");
  chk->fallthrough();

  auto* fib = app.add_subcommand("fiber-search",
                                 "bounded-height search on a fiber product of two curves");
  fib->fallthrough();
  std::string gname, fname;
  fib->add_option("g", gname, "covering curve name (X0_3, X0_5, X0_7, X0_13)")->required();
  fib->add_option("f", fname, "base curve name (X3, X7, X20)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.parallelism = std::max(1, cfg.parallelism);

  try {
    if (app.got_subcommand(lem)) return cmd_verify_lemmas(cfg, claim_filter, prime_filter);
    if (app.got_subcommand(psic)) return cmd_psi(cfg, degree);
    if (app.got_subcommand(mpf)) return cmd_modpoly_factor(cfg, level, jstr, show_factors);
    if (app.got_subcommand(chk)) return cmd_check_claims(cfg);
    if (app.got_subcommand(fib)) return cmd_fiber_search(cfg, gname, fname);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}

}  // namespace iso
