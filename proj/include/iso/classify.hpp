#pragma once

// Executable form of the degree-classification sets and the end-to-end
// claim-verification pipeline: Psi sets with per-member provenance, the
// structural consistency checks tying them together, and the orchestrated
// claim report combining lemma suites, factor certificates, splitting-field
// comparisons, and bounded-height point searches.

#include "iso/curves.hpp"
#include "iso/lemmas.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace iso {

struct UnsupportedDegree : std::runtime_error {
  explicit UnsupportedDegree(const std::string& what) : std::runtime_error(what) {}
};

// Which construction rule admitted a member into a PsiSet. When several rules
// apply, the earlier tag in this order wins.
enum class PsiRule { Base, DoubleOdd, Triple, Special28, PTimesK };
const char* psi_rule_name(PsiRule rule);

// The set of cyclic-isogeny degrees realized over some degree-d number field
// (non-CM curves with rational j-invariant), with one provenance tag per
// member.
struct PsiSet {
  long degree = 1;
  std::vector<long> members;           // ascending, no duplicates
  std::map<long, PsiRule> provenance;  // keys exactly the members

  bool contains(long n) const;
};

// The 19-element degree-1 set, ascending.
const std::vector<long>& psi_base();

// psi(1): the base set. psi(2): base plus {20,24,32,36}. psi(3): base, plus
// doubled odd members, plus tripled multiples of 3, plus 28. psi(p), p >= 5
// prime: base plus {p*k : k in base, p | k}. Errors: UnsupportedDegree for
// d < 1 and for composite d > 2.
PsiSet psi(long d);

// {ell * k : k in S, ell | k}, ascending.
std::vector<long> closure_l_kl(const std::vector<long>& S, long ell);

// ---------------------------------------------------------------------------
// Claim reports
// ---------------------------------------------------------------------------

struct ClaimEntry {
  std::string claim_id;
  std::string anchor;     // stable topic label, unique per claim
  std::string statement;  // the precise assertion being checked
  std::string status;     // "verified" | "partial (bounded height)" | "failed"
  std::string evidence;   // deterministic summary of what was computed
  double elapsed_seconds = 0.0;
  bool passed = false;
};

struct ClaimReport {
  std::vector<ClaimEntry> entries;  // ordered by claim_id
  bool all_passed() const;
};

struct CheckConfig {
  long samples = 500;
  std::uint64_t seed = 42;
  long height_bound = 50;
  int parallelism = 1;
};

// Structural checks on the Psi sets alone: containments, rule expansions,
// exclusions, provenance totality. Single-entry report, no external data.
ClaimReport consistency_check();

// The full pipeline over the loaded modular polynomials and j-tables:
// consistency, lemma suites, the prime-power factor certificates across the
// curated tables, splitting-field comparisons, the four-isogeny exclusions,
// known-point certificates, the cubic field identification, and the four
// bounded-height fiber searches. Claim failures are recorded in the report;
// only missing infrastructure throws (MissingLevel). Deterministic for a
// fixed config, independent of parallelism.
ClaimReport check_claims(const ModPolyDB& db, const JTable& table, const CheckConfig& cfg);

}  // namespace iso
