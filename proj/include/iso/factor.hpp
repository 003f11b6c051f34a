#pragma once

// Factorization of integer polynomials over Q (squarefree decomposition,
// modular factorization, Hensel lifting, subset recombination), rational root
// extraction, multi-prime degree-pattern absence certificates, and a cubic
// number-field isomorphism test via resultant norms.

#include "iso/exact.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace iso {

struct BadPrime : std::runtime_error {
  explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquarefree : std::runtime_error {
  explicit NotSquarefree(const std::string& what) : std::runtime_error(what) {}
};

struct NotIrreducible : std::runtime_error {
  explicit NotIrreducible(const std::string& what) : std::runtime_error(what) {}
};

struct TragerShiftExhausted : std::runtime_error {
  explicit TragerShiftExhausted(const std::string& what) : std::runtime_error(what) {}
};

// One monic irreducible factor of f mod p, coefficients reduced into [0, p).
struct ModPFactor {
  IntPoly factor;
  int multiplicity = 1;
};

// One irreducible factor over Q: primitive with positive leading coefficient.
struct FactorPart {
  IntPoly factor;
  int multiplicity = 1;
  int degree() const { return factor.degree(); }
};

// Complete factorization certificate: input = content * prod factor^mult.
struct FactorPattern {
  BigRat content;
  std::vector<FactorPart> parts;  // sorted by (degree, coefficients)

  // Irreducible-factor degrees repeated per multiplicity, ascending.
  std::vector<int> degrees() const;
  // (degree, multiplicity) per distinct factor, sorted.
  std::vector<std::pair<int, int>> degree_multiset() const;
  // Number of irreducible factors of the given degree, counted with
  // multiplicity.
  int count_of_degree(int d) const;
  // prod factor^multiplicity; content * this == the factored input.
  IntPoly product_of_factors() const;
};

enum class AbsenceVerdict { CertifiedAbsent, Inconclusive };

// Evidence that no factor over Q has degree in target_degrees: sound when some
// single prime's mod-p degree pattern has no sub-multiset summing to any
// target (a degree-d factor over Q reduces mod a good prime to a sub-multiset
// of the pattern summing to d).
struct AbsenceCertificate {
  std::set<int> target_degrees;
  std::vector<long> primes_used;
  std::vector<std::vector<int>> mod_p_patterns;  // per prime, ascending degrees
  AbsenceVerdict verdict = AbsenceVerdict::Inconclusive;
  // Index into primes_used of the certifying prime, when CertifiedAbsent.
  std::optional<std::size_t> certifying_prime;
};

// Monic irreducible factors of f mod p with multiplicity. Requires p prime and
// p not dividing lc(f) (else BadPrime). Equal-degree splitting draws from a
// PRNG seeded with `seed`; the output is sorted canonically, so the
// factorization itself is deterministic regardless of seed.
std::vector<ModPFactor> factor_mod_p(const IntPoly& f, long p, std::uint64_t seed = 1);

// Full factorization over Q: squarefree decomposition (Yun), per-part modular
// factorization at a good prime, Hensel lifting past twice the Mignotte bound,
// Zassenhaus subset recombination. Complete for any nonzero input.
FactorPattern factor_over_Q(const IntPoly& f, std::uint64_t seed = 1);

// All rational roots of f, each repeated per multiplicity, sorted ascending.
std::vector<BigRat> rational_roots(const IntPoly& f);

// f / gcd(f, f'): the primitive radical, positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

// Degree-pattern absence certificate over up to prime_budget good primes.
// Requires f squarefree over Q (else NotSquarefree).
AbsenceCertificate certify_absent_degrees(const IntPoly& f, const std::set<int>& target_degrees,
                                          int prime_budget = 8);

// True iff Q[x]/(f) and Q[x]/(h) are isomorphic fields, for irreducible cubics
// f, h (verified internally, else NotIrreducible). Trager norm method: find an
// integer shift k with N(y) = Res_x(f(x), h(y - k*x)) squarefree, then the
// fields are isomorphic iff N has an irreducible factor of degree exactly 3.
// Gives up after k = 25 (TragerShiftExhausted; in practice k <= 2).
bool cubic_fields_isomorphic(const IntPoly& f, const IntPoly& h);

// Deterministic total order on integer polynomials (degree, then coefficients
// from the top); used to canonicalize factor lists.
bool intpoly_less(const IntPoly& a, const IntPoly& b);

}  // namespace iso
