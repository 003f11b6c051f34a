#pragma once

// 2x2 matrix groups over Z/ell^n: breadth-first subgroup closure, reduction
// maps, uppertriangularity predicates, order formulas, the affine group
// AGL_1(F_ell), and cyclic subgroups of (Z/ell^m)^2 with their lifts and the
// induced permutation action.

#include "iso/exact.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace iso {

struct NotInvertible : std::runtime_error {
  explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

struct ClosureBudgetExceeded : std::runtime_error {
  explicit ClosureBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct TrivialGroup : std::runtime_error {
  explicit TrivialGroup(const std::string& what) : std::runtime_error(what) {}
};

struct WrongOrder : std::runtime_error {
  explicit WrongOrder(const std::string& what) : std::runtime_error(what) {}
};

struct DoesNotStabilize : std::runtime_error {
  explicit DoesNotStabilize(const std::string& what) : std::runtime_error(what) {}
};

// Prime-power modulus ell^n. Capped at ell^n <= 65536 so four entries pack
// into one 64-bit key.
struct Modulus {
  long ell = 2;
  int n = 1;
  long q = 2;  // ell^n

  Modulus() = default;
  Modulus(long ell_, int n_);
  long pow(int k) const;  // ell^k for 0 <= k <= n
  friend bool operator==(const Modulus&, const Modulus&) = default;
};

// Matrix (a b; c d) over Z/ell^n, entries reduced into [0, q).
struct Mat2 {
  long a = 1, b = 0, c = 0, d = 1;
  Modulus mod;

  Mat2() = default;
  Mat2(long a_, long b_, long c_, long d_, Modulus m);
  static Mat2 identity(Modulus m);

  long det() const;
  long trace() const;
  bool is_invertible() const;  // det a unit, i.e. not divisible by ell
  Mat2 inverse() const;        // NotInvertible if det is not a unit
  Mat2 operator*(const Mat2&) const;
  Mat2 reduced(int m) const;  // entrywise mod ell^m, 1 <= m <= n
  // Column-vector action: (x, y) -> (a x + b y, c x + d y).
  std::pair<long, long> apply(long x, long y) const;

  std::uint64_t key() const;  // (a,b,c,d) packed 16 bits each
  static Mat2 from_key(std::uint64_t k, Modulus m);
  friend bool operator==(const Mat2& lhs, const Mat2& rhs) {
    return lhs.mod == rhs.mod && lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c && lhs.d == rhs.d;
  }
  std::string str() const;  // "[a b; c d] mod q"
};

// Fully enumerated subgroup: sorted packed element keys. Built by the closure
// and reduction functions below, which maintain the group invariants.
struct MatSubgroup {
  Modulus mod;
  std::vector<Mat2> generators;
  std::vector<std::uint64_t> elements;  // sorted keys; closed under product

  std::size_t order() const { return elements.size(); }
  Mat2 element(std::size_t i) const { return Mat2::from_key(elements[i], mod); }
  bool contains(const Mat2& g) const;
};

// Breadth-first closure of the generated subgroup. All generators must share
// a modulus and be invertible (NotInvertible). Throws ClosureBudgetExceeded
// past element_cap.
MatSubgroup close_subgroup(const std::vector<Mat2>& generators,
                           std::size_t element_cap = 10'000'000);

// Same closure, but returns nullopt as soon as any element satisfies
// `reject`. Lets hypothesis-filtered sampling discard a subgroup the moment a
// disqualifying element appears instead of enumerating all of it.
std::optional<MatSubgroup> close_subgroup_unless(const std::vector<Mat2>& generators,
                                                 const std::function<bool(const Mat2&)>& reject,
                                                 std::size_t element_cap = 10'000'000);

// Wraps an already-closed element set (e.g. a full Borel enumeration) without
// re-running closure; the caller guarantees closedness.
MatSubgroup subgroup_from_closed_elements(Modulus mod, const std::vector<Mat2>& elements,
                                          std::vector<Mat2> generators = {});

// Entrywise-reduction image of H in GL2(Z/ell^m), 1 <= m <= n.
MatSubgroup reduce_subgroup(const MatSubgroup& H, int m);

// Every element with c = 0 mod ell^m has c = 0 mod ell^n. Requires 1 <= m < n.
bool is_m_utt(const MatSubgroup& H, int m);

// Every element has c = 0 mod ell^k. Requires 1 <= k <= n.
bool is_uppertriangular_mod(const MatSubgroup& H, int k);

// |GL2(Z/ell^n)| = (ell^2-1)(ell^2-ell) ell^{4(n-1)}.
BigInt group_order(long ell, int n);
// |B(ell^n)| = (ell-1)^2 ell^{3n-2}: invertible uppertriangular matrices.
BigInt borel_order(long ell, int n);

// All invertible uppertriangular matrices (a b; 0 d) mod ell^n.
std::vector<Mat2> borel_elements(Modulus mod);
// All invertible matrices; intended for small moduli (q^4 enumeration).
std::vector<Mat2> enumerate_gl2(Modulus mod);

// ------------------------------------------------------------ AGL1(F_ell) --

// x -> a x + b on F_ell, a a unit.
struct AffineMap {
  long a = 1, b = 0;
  long ell = 2;

  AffineMap() = default;
  AffineMap(long a_, long b_, long ell_);
  static AffineMap identity(long ell);
  long apply(long x) const { return (a * x + b) % ell; }
  AffineMap operator*(const AffineMap& rhs) const;  // composition, lhs after rhs
  long key() const { return a * ell + b; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// Closed subgroup of AGL1(F_ell), elements sorted by key.
struct AglSubgroup {
  long ell = 2;
  std::vector<AffineMap> elements;
  std::size_t order() const { return elements.size(); }
  bool contains(const AffineMap& f) const;
};

AglSubgroup close_affine(const std::vector<AffineMap>& generators);

// Transitive verdict carries a checkable witness: the stabilizer of 0, an
// index-ell subgroup.
struct AglTransitive {
  AglSubgroup stabilizer;
};
// Non-transitive nontrivial subgroups are cyclic of order dividing ell-1 and
// fix exactly one point.
struct AglCyclicFixedPoint {
  long order = 0;
  long fixed_point = 0;
};
using AglClassification = std::variant<AglTransitive, AglCyclicFixedPoint>;

// Requires a nonempty closed subgroup; TrivialGroup for the identity-only one.
AglClassification agl1_classify(const AglSubgroup& S);

// ------------------------------------- cyclic subgroups of (Z/ell^m)^2 -----

// Cyclic subgroup of (Z/ell^m)^2, stored as its canonical generator: the
// lexicographically least generator of the subgroup.
struct AbstractCyclic {
  long ell = 2;
  int m = 1;    // ambient exponent
  long qm = 2;  // ell^m
  long order = 1;
  std::pair<long, long> gen{0, 0};

  friend bool operator==(const AbstractCyclic&, const AbstractCyclic&) = default;
};

// Additive order of (u, v) in (Z/ell^m)^2.
long vec_order(long ell, int m, long u, long v);

// Builds the cyclic subgroup generated by (u, v), canonicalizing the
// generator.
AbstractCyclic make_cyclic(long ell, int m, long u, long v);

// All elements (multiples of the generator); size = order.
std::vector<std::pair<long, long>> cyclic_elements(const AbstractCyclic& C);

// For C of order ell^n inside (Z/ell^{n+1})^2 with n >= 1 (else WrongOrder):

// The deterministic basis (Q, S): Q the lex-least solution of ell*Q = gen(C),
// S the lex-least vector completing (Q, S) to a basis of the ambient group.
std::pair<std::pair<long, long>, std::pair<long, long>> canonical_lift_basis(const AbstractCyclic& C);

// D_t = <Q + t * ell^n * S>, the t-th lift in the canonical indexing.
AbstractCyclic lift_at(const AbstractCyclic& C, long t);

// All cyclic D of order ell^{n+1} with ell*D = C; exactly ell of them, in
// canonical index order (element t is lift_at(C, t), the indexing permuted by
// action_on_lifts).
std::vector<AbstractCyclic> lifts_of_cyclic(const AbstractCyclic& C);

// The permutation t -> index of g(D_t) on the canonical lift indexing, for an
// invertible g mod ell^{n+1} that stabilizes C as a set (DoesNotStabilize
// otherwise). In the (Q, S) basis write M = B^{-1} g B; stabilization forces
// the bottom-left of M to be divisible by ell^n, and the permutation is
// t -> (M21/ell^n + t*M22) / M11 mod ell.
std::vector<long> action_on_lifts(const Mat2& g, const AbstractCyclic& C);

}  // namespace iso
