#pragma once

// Modular-curve plumbing: ingestion of classical modular polynomials Phi_ell,
// specialization at a rational j-invariant (prime and prime-power levels, the
// latter via resultant chains with exact backtrack division), factor-degree
// certificates, rational fibers of the built-in curve parametrizations,
// bounded-height search on fiber products, the rational CM j-invariant table,
// and the curated j-invariant tables with their load-time certificates.

#include "iso/exact.hpp"
#include "iso/factor.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace iso {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::runtime_error {
  explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct MissingLevel : std::runtime_error {
  explicit MissingLevel(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a prime-power specialization is requested at a CM j-invariant;
// the construction's multiplicity bookkeeping is only guaranteed away from CM.
struct CMInput : std::runtime_error {
  explicit CMInput(const std::string& what) : std::runtime_error(what) {}
};

// The backtrack factor failed to divide the resultant exactly. This never
// happens for valid modular-polynomial data; it is a hard consistency error.
struct InexactDivision : std::runtime_error {
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct SingularJ : std::runtime_error {
  explicit SingularJ(const std::string& what) : std::runtime_error(what) {}
};

struct JTableInvalid : std::runtime_error {
  explicit JTableInvalid(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Modular polynomial database
// ---------------------------------------------------------------------------

// Classical modular polynomials Phi_ell(X, Y) for prime levels, loaded from
// one file per level. Immutable after load; safe to share across threads.
class ModPolyDB {
 public:
  bool has(long level) const { return polys_.count(level) != 0; }
  const BiPoly& get(long level) const;  // MissingLevel if absent
  std::vector<long> levels() const;     // ascending

  // Validates symmetry and degree (deg_X = deg_Y = level + 1) on insert.
  void insert(long level, BiPoly phi);

 private:
  std::map<long, BiPoly> polys_;
};

// Reads every phi<prime>.txt in `dir`. File format, per line:
//   [a,b] c        -> contributes c * X^a * Y^b (and c * X^b * Y^a; entries
//                     with a < b may be omitted, symmetry is closed at load)
//   # ...          -> comment
// Errors: ParseError (with file:line), DegreeMismatch.
ModPolyDB load_modpoly_db(const std::string& dir);

// ---------------------------------------------------------------------------
// CM j-invariants
// ---------------------------------------------------------------------------

// The 13 rational CM j-invariants (class number one), ascending.
const std::vector<BigRat>& cm_j_invariants();
bool is_cm_j(const BigRat& j0);

// ---------------------------------------------------------------------------
// Specialization and factor certificates
// ---------------------------------------------------------------------------

// Phi_ell(x, j0) with denominators cleared, primitive, positive leading
// coefficient; degree ell + 1. Errors: MissingLevel, DegreeMismatch.
IntPoly specialize(long ell, const BigRat& j0, const ModPolyDB& db);

// Phi_{ell^e}(x, j0) for e in {2,3}, built by resultant chains:
//   Phi_{l^2}(x,j0) = Res_z(Phi_l(x,z), Phi_l(z,j0)) / (x - j0)^(l+1)
//   Phi_{l^3}(x,j0) = Res_z(Phi_l(x,z), Phi_{l^2}(z,j0)) / Phi_l(x,j0)^l
// with each division exact and each result primitive; degrees l^2+l and
// l^3+l^2. Rejects CM j0 up front (CMInput); the backtrack divisions are
// additionally verified and raise InexactDivision if they ever fail.
IntPoly specialize_prime_power(long ell, int e, const BigRat& j0, const ModPolyDB& db);

// Same construction without the CM rejection, exposing the raw divisibility
// behaviour of the chain on arbitrary inputs (the divisions are still
// verified).
IntPoly specialize_prime_power_unchecked(long ell, int e, const BigRat& j0, const ModPolyDB& db);

// Factorization certificate for Phi_n(x, j0) where n = p^e, p prime in the
// database, e in {1,2,3}. The factor degrees bound the fields of definition
// of the n-isogenous j-invariants. Errors: std::invalid_argument for n not of
// that shape, plus anything the specialization raises.
FactorPattern isogeny_field_degrees(long n, const BigRat& j0, const ModPolyDB& db,
                                    std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Curve parametrizations
// ---------------------------------------------------------------------------

enum class CurveId { X3, X7, X20, X0_3, X0_5, X0_7, X0_13 };

// A rational map t -> j(t) from a built-in modular-curve parametrization.
struct CurveParam {
  CurveId id;
  std::string name;
  RatFunc map;
};

const CurveParam& curve(CurveId id);
const CurveParam* curve_by_name(const std::string& name);  // nullptr if unknown
const std::vector<CurveParam>& all_curves();

// All rational t with map(t) = j0 (no multiplicity, ascending). Poles cannot
// occur among the roots because num and den are coprime.
std::vector<BigRat> fibers_over_j(const CurveParam& c, const BigRat& j0);

// ---------------------------------------------------------------------------
// Fiber-product search
// ---------------------------------------------------------------------------

// A common value j = f(t) = g(h) of two parametrizations.
struct FiberHit {
  BigRat t;  // parameter on f's curve
  BigRat h;  // parameter on g's curve
  BigRat j;
  bool cm = false;
};

struct FiberSearchResult {
  long height_bound = 0;
  long poles_t = 0;  // enumerated t skipped because f has a pole there
  long poles_h = 0;  // enumerated h skipped because g has a pole there
  std::vector<FiberHit> hits;  // deduplicated, sorted by (t, h)
};

// Enumerates both parameters in lowest terms a/b with max(|a|, b) <= H
// (increasing height, then lexicographic), solving for the opposite parameter
// by rational root extraction. Searching both sides finds every hit whose t
// OR h has height <= H. Deterministic for fixed inputs regardless of
// `parallelism`; pole values are skipped and counted.
FiberSearchResult fiber_product_search(const CurveParam& g, const CurveParam& f,
                                       long height_bound, int parallelism = 1);

// ---------------------------------------------------------------------------
// 2-division cubic
// ---------------------------------------------------------------------------

// A monic primitive integer cubic whose splitting field is the 2-division
// field of every elliptic curve with j-invariant j0: starting from
// x^3 + a x + b with a = -3 j0 (j0 - 1728), b = -2 j0 (j0 - 1728)^2 (a curve
// with j-invariant exactly j0), denominators are cleared by the substitution
// x -> x/d, which scales the roots by a rational and so fixes the splitting
// field. Errors: SingularJ for j0 in {0, 1728}.
IntPoly two_division_cubic(const BigRat& j0);

// ---------------------------------------------------------------------------
// Curated j-invariant tables
// ---------------------------------------------------------------------------

// Named lists of exact rational j-invariants, ingested from a data file.
// iso<N>_j lists non-CM j-invariants admitting a rational cyclic N-isogeny.
struct JTable {
  std::vector<BigRat> cm_j;
  std::vector<BigRat> iso11_j;
  std::vector<BigRat> iso15_j;
  std::vector<BigRat> iso17_j;
  std::vector<BigRat> iso19_j;  // the table ships no entries for 19
  std::vector<BigRat> iso21_j;
  std::vector<BigRat> iso37_j;
};

// Parses the table and enforces the structural schema (section names and the
// fixed cardinalities: 13 CM values, 4 each for 15 and 21). ParseError with
// file:line on malformed input.
JTable load_jtable(const std::string& path);

// Canonical file form; load_jtable(serialize_jtable(t)) round-trips the bytes
// of the shipped data file exactly.
std::string serialize_jtable(const JTable& t);

// Mathematical validation: cm_j must equal the frozen table above, and every
// iso<N> entry must be non-CM and admit rational roots of Phi_p(x, j) for
// each prime p | N — certificates that the advertised isogenies exist.
// Throws JTableInvalid with the offending entry.
void validate_jtable(const JTable& t, const ModPolyDB& db);

}  // namespace iso
