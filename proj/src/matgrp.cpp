#include "iso/matgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace iso {
namespace {

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_pos(long x, long q) {
  long r = x % q;
  return r < 0 ? r + q : r;
}

// Inverse of a mod q for gcd(a, q) = 1; q need not be prime.
long invmod_long(long a, long q) {
  long r0 = q, r1 = mod_pos(a, q), t0 = 0, t1 = 1;
  while (r1 != 0) {
    long k = r0 / r1;
    long r2 = r0 - k * r1;
    r0 = r1;
    r1 = r2;
    long t2 = t0 - k * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw NotInvertible("invmod_long: not a unit");
  return mod_pos(t0, q);
}

}  // namespace

// ----------------------------------------------------------------- Modulus

Modulus::Modulus(long ell_, int n_) : ell(ell_), n(n_) {
  if (!is_small_prime(ell)) throw std::invalid_argument("Modulus: ell must be prime");
  if (n < 1) throw std::invalid_argument("Modulus: n must be >= 1");
  q = 1;
  for (int i = 0; i < n; ++i) {
    q *= ell;
    if (q > 65536) throw std::invalid_argument("Modulus: ell^n exceeds 65536");
  }
}

long Modulus::pow(int k) const {
  if (k < 0 || k > n) throw std::invalid_argument("Modulus::pow: exponent out of range");
  long r = 1;
  for (int i = 0; i < k; ++i) r *= ell;
  return r;
}

// -------------------------------------------------------------------- Mat2

Mat2::Mat2(long a_, long b_, long c_, long d_, Modulus m) : mod(m) {
  a = mod_pos(a_, mod.q);
  b = mod_pos(b_, mod.q);
  c = mod_pos(c_, mod.q);
  d = mod_pos(d_, mod.q);
}

Mat2 Mat2::identity(Modulus m) { return Mat2(1, 0, 0, 1, m); }

long Mat2::det() const { return mod_pos(a * d - b * c, mod.q); }

long Mat2::trace() const { return mod_pos(a + d, mod.q); }

bool Mat2::is_invertible() const { return det() % mod.ell != 0; }

Mat2 Mat2::inverse() const {
  long dt = det();
  if (dt % mod.ell == 0) throw NotInvertible("Mat2::inverse: determinant is not a unit");
  long di = invmod_long(dt, mod.q);
  return Mat2(d * di, -b * di, -c * di, a * di, mod);
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  if (!(mod == rhs.mod)) throw std::invalid_argument("Mat2: modulus mismatch");
  return Mat2(a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
              c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d, mod);
}

Mat2 Mat2::reduced(int m) const {
  if (m < 1 || m > mod.n) throw std::invalid_argument("Mat2::reduced: bad target exponent");
  Modulus target(mod.ell, m);
  return Mat2(a, b, c, d, target);
}

std::pair<long, long> Mat2::apply(long x, long y) const {
  return {mod_pos(a * x + b * y, mod.q), mod_pos(c * x + d * y, mod.q)};
}

std::uint64_t Mat2::key() const {
  return (std::uint64_t(a) << 48) | (std::uint64_t(b) << 32) | (std::uint64_t(c) << 16) |
         std::uint64_t(d);
}

Mat2 Mat2::from_key(std::uint64_t k, Modulus m) {
  return Mat2(long((k >> 48) & 0xffff), long((k >> 32) & 0xffff), long((k >> 16) & 0xffff),
              long(k & 0xffff), m);
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[" << a << " " << b << "; " << c << " " << d << "] mod " << mod.q;
  return os.str();
}

// ------------------------------------------------------------- MatSubgroup

bool MatSubgroup::contains(const Mat2& g) const {
  if (!(g.mod == mod)) return false;
  return std::binary_search(elements.begin(), elements.end(), g.key());
}

namespace {

// Shared breadth-first closure. A non-null reject predicate aborts, signalled
// by nullopt; a positive element cap throws ClosureBudgetExceeded.
std::optional<MatSubgroup> close_core(const std::vector<Mat2>& generators, std::size_t element_cap,
                                      const std::function<bool(const Mat2&)>* reject) {
  if (generators.empty()) throw std::invalid_argument("close_subgroup: no generators");
  Modulus mod = generators[0].mod;
  for (const Mat2& g : generators) {
    if (!(g.mod == mod)) throw std::invalid_argument("close_subgroup: modulus mismatch");
    if (!g.is_invertible()) throw NotInvertible("close_subgroup: generator " + g.str());
  }
  const long q = mod.q;

  std::vector<std::uint64_t> found;
  std::deque<Mat2> frontier;
  bool aborted = false;
  auto enqueue = [&](const Mat2& g) {
    if (reject && (*reject)(g)) {
      aborted = true;
      return;
    }
    found.push_back(g.key());
    frontier.push_back(g);
    if (found.size() > element_cap)
      throw ClosureBudgetExceeded("close_subgroup: more than " + std::to_string(element_cap) +
                                  " elements");
  };

  // Every element is reachable from the identity by right-multiplications:
  // the generated monoid is finite, hence already a group.
  if (q <= 64) {
    std::vector<bool> seen(std::size_t(q) * q * q * q, false);
    auto idx = [q](const Mat2& g) {
      return std::size_t(((g.a * q + g.b) * q + g.c) * q + g.d);
    };
    Mat2 id = Mat2::identity(mod);
    seen[idx(id)] = true;
    enqueue(id);
    while (!frontier.empty() && !aborted) {
      Mat2 cur = frontier.front();
      frontier.pop_front();
      for (const Mat2& g : generators) {
        Mat2 nxt = cur * g;
        std::size_t i = idx(nxt);
        if (!seen[i]) {
          seen[i] = true;
          enqueue(nxt);
          if (aborted) break;
        }
      }
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    Mat2 id = Mat2::identity(mod);
    seen.insert(id.key());
    enqueue(id);
    while (!frontier.empty() && !aborted) {
      Mat2 cur = frontier.front();
      frontier.pop_front();
      for (const Mat2& g : generators) {
        Mat2 nxt = cur * g;
        if (seen.insert(nxt.key()).second) {
          enqueue(nxt);
          if (aborted) break;
        }
      }
    }
  }
  if (aborted) return std::nullopt;

  std::sort(found.begin(), found.end());
  return MatSubgroup{mod, generators, std::move(found)};
}

}  // namespace

MatSubgroup close_subgroup(const std::vector<Mat2>& generators, std::size_t element_cap) {
  return *close_core(generators, element_cap, nullptr);
}

std::optional<MatSubgroup> close_subgroup_unless(const std::vector<Mat2>& generators,
                                                 const std::function<bool(const Mat2&)>& reject,
                                                 std::size_t element_cap) {
  return close_core(generators, element_cap, &reject);
}

MatSubgroup subgroup_from_closed_elements(Modulus mod, const std::vector<Mat2>& elements,
                                          std::vector<Mat2> generators) {
  std::vector<std::uint64_t> keys;
  keys.reserve(elements.size());
  for (const Mat2& g : elements) {
    if (!(g.mod == mod)) throw std::invalid_argument("subgroup_from_closed_elements: modulus mismatch");
    keys.push_back(g.key());
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return MatSubgroup{mod, std::move(generators), std::move(keys)};
}

MatSubgroup reduce_subgroup(const MatSubgroup& H, int m) {
  if (m < 1 || m > H.mod.n) throw std::invalid_argument("reduce_subgroup: bad target exponent");
  Modulus target(H.mod.ell, m);
  std::vector<std::uint64_t> keys;
  keys.reserve(H.elements.size());
  for (std::size_t i = 0; i < H.elements.size(); ++i)
    keys.push_back(H.element(i).reduced(m).key());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Mat2> gens;
  gens.reserve(H.generators.size());
  for (const Mat2& g : H.generators) gens.push_back(g.reduced(m));
  return MatSubgroup{target, std::move(gens), std::move(keys)};
}

bool is_m_utt(const MatSubgroup& H, int m) {
  if (m < 1 || m >= H.mod.n) throw std::invalid_argument("is_m_utt: requires 1 <= m < n");
  const long qm = H.mod.pow(m);
  for (std::size_t i = 0; i < H.elements.size(); ++i) {
    long c = H.element(i).c;
    if (c % qm == 0 && c != 0) return false;
  }
  return true;
}

bool is_uppertriangular_mod(const MatSubgroup& H, int k) {
  if (k < 1 || k > H.mod.n) throw std::invalid_argument("is_uppertriangular_mod: requires 1 <= k <= n");
  const long qk = H.mod.pow(k);
  for (std::size_t i = 0; i < H.elements.size(); ++i)
    if (H.element(i).c % qk != 0) return false;
  return true;
}

BigInt group_order(long ell, int n) {
  if (!is_small_prime(ell) || n < 1) throw std::invalid_argument("group_order: bad arguments");
  BigInt l(ell);
  BigInt r = (l * l - 1) * (l * l - l);
  for (int i = 0; i < 4 * (n - 1); ++i) r *= l;
  return r;
}

BigInt borel_order(long ell, int n) {
  if (!is_small_prime(ell) || n < 1) throw std::invalid_argument("borel_order: bad arguments");
  BigInt l(ell);
  BigInt r = (l - 1) * (l - 1);
  for (int i = 0; i < 3 * n - 2; ++i) r *= l;
  return r;
}

std::vector<Mat2> borel_elements(Modulus mod) {
  std::vector<Mat2> out;
  for (long a = 0; a < mod.q; ++a) {
    if (a % mod.ell == 0) continue;
    for (long d = 0; d < mod.q; ++d) {
      if (d % mod.ell == 0) continue;
      for (long b = 0; b < mod.q; ++b) out.push_back(Mat2(a, b, 0, d, mod));
    }
  }
  return out;
}

std::vector<Mat2> enumerate_gl2(Modulus mod) {
  std::vector<Mat2> out;
  for (long a = 0; a < mod.q; ++a)
    for (long b = 0; b < mod.q; ++b)
      for (long c = 0; c < mod.q; ++c)
        for (long d = 0; d < mod.q; ++d) {
          Mat2 g(a, b, c, d, mod);
          if (g.is_invertible()) out.push_back(g);
        }
  return out;
}

// -------------------------------------------------------------------- AGL1

AffineMap::AffineMap(long a_, long b_, long ell_) : ell(ell_) {
  if (!is_small_prime(ell)) throw std::invalid_argument("AffineMap: ell must be prime");
  a = mod_pos(a_, ell);
  b = mod_pos(b_, ell);
  if (a == 0) throw NotInvertible("AffineMap: linear coefficient must be a unit");
}

AffineMap AffineMap::identity(long ell) { return AffineMap(1, 0, ell); }

AffineMap AffineMap::operator*(const AffineMap& rhs) const {
  if (ell != rhs.ell) throw std::invalid_argument("AffineMap: modulus mismatch");
  return AffineMap(a * rhs.a, a * rhs.b + b, ell);
}

bool AglSubgroup::contains(const AffineMap& f) const {
  if (f.ell != ell) return false;
  return std::binary_search(elements.begin(), elements.end(), f,
                            [](const AffineMap& x, const AffineMap& y) { return x.key() < y.key(); });
}

AglSubgroup close_affine(const std::vector<AffineMap>& generators) {
  if (generators.empty()) throw std::invalid_argument("close_affine: no generators");
  long ell = generators[0].ell;
  for (const AffineMap& f : generators)
    if (f.ell != ell) throw std::invalid_argument("close_affine: modulus mismatch");

  std::vector<bool> seen(std::size_t(ell) * ell, false);
  std::vector<AffineMap> found;
  std::deque<AffineMap> frontier;
  AffineMap id = AffineMap::identity(ell);
  seen[std::size_t(id.key())] = true;
  found.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    AffineMap cur = frontier.front();
    frontier.pop_front();
    for (const AffineMap& g : generators) {
      AffineMap nxt = cur * g;
      if (!seen[std::size_t(nxt.key())]) {
        seen[std::size_t(nxt.key())] = true;
        found.push_back(nxt);
        frontier.push_back(nxt);
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const AffineMap& x, const AffineMap& y) { return x.key() < y.key(); });
  return AglSubgroup{ell, std::move(found)};
}

AglClassification agl1_classify(const AglSubgroup& S) {
  if (S.elements.empty()) throw std::invalid_argument("agl1_classify: empty subgroup");
  const long ell = S.ell;
  if (S.order() == 1) throw TrivialGroup("agl1_classify: trivial subgroup");

  // Orbit of 0 decides transitivity.
  std::vector<bool> in_orbit(std::size_t(ell), false);
  std::deque<long> todo{0};
  in_orbit[0] = true;
  std::size_t orbit_size = 1;
  while (!todo.empty()) {
    long x = todo.front();
    todo.pop_front();
    for (const AffineMap& f : S.elements) {
      long y = f.apply(x);
      if (!in_orbit[std::size_t(y)]) {
        in_orbit[std::size_t(y)] = true;
        ++orbit_size;
        todo.push_back(y);
      }
    }
  }

  if (orbit_size == std::size_t(ell)) {
    AglSubgroup stab{ell, {}};
    for (const AffineMap& f : S.elements)
      if (f.apply(0) == 0) stab.elements.push_back(f);
    if (stab.elements.size() * std::size_t(ell) != S.order())
      throw std::logic_error("agl1_classify: orbit-stabilizer mismatch");
    return AglTransitive{std::move(stab)};
  }

  // Non-transitive: a common fixed point must exist and the a-coordinates
  // must be distinct, embedding S into the cyclic group F_ell^*.
  long fixed = -1;
  for (long x = 0; x < ell; ++x) {
    bool all = true;
    for (const AffineMap& f : S.elements)
      if (f.apply(x) != x) {
        all = false;
        break;
      }
    if (all) {
      if (fixed != -1) throw std::logic_error("agl1_classify: multiple common fixed points");
      fixed = x;
    }
  }
  if (fixed == -1) throw std::logic_error("agl1_classify: intransitive with no fixed point");
  std::vector<bool> a_seen(std::size_t(ell), false);
  for (const AffineMap& f : S.elements) {
    if (a_seen[std::size_t(f.a)]) throw std::logic_error("agl1_classify: repeated linear part");
    a_seen[std::size_t(f.a)] = true;
  }
  if ((ell - 1) % long(S.order()) != 0)
    throw std::logic_error("agl1_classify: order does not divide ell-1");
  return AglCyclicFixedPoint{long(S.order()), fixed};
}

// --------------------------------------------------- cyclic subgroups -----

long vec_order(long ell, int m, long u, long v) {
  Modulus mod(ell, m);  // validates ell, m
  long qm = mod.q;
  u = mod_pos(u, qm);
  v = mod_pos(v, qm);
  long ord = 1;
  while (u != 0 || v != 0) {
    u = (u * ell) % qm;
    v = (v * ell) % qm;
    ord *= ell;
  }
  return ord;
}

AbstractCyclic make_cyclic(long ell, int m, long u, long v) {
  Modulus mod(ell, m);
  long qm = mod.q;
  u = mod_pos(u, qm);
  v = mod_pos(v, qm);
  long ord = vec_order(ell, m, u, v);
  // Canonical generator: lexicographically least among unit multiples.
  std::pair<long, long> best{u, v};
  for (long k = 1; k < ord; ++k) {
    if (k % ell == 0) continue;
    std::pair<long, long> cand{(k * u) % qm, (k * v) % qm};
    if (cand < best) best = cand;
  }
  return AbstractCyclic{ell, m, qm, ord, best};
}

std::vector<std::pair<long, long>> cyclic_elements(const AbstractCyclic& C) {
  std::vector<std::pair<long, long>> out;
  out.reserve(std::size_t(C.order));
  long x = 0, y = 0;
  for (long k = 0; k < C.order; ++k) {
    out.emplace_back(x, y);
    x = (x + C.gen.first) % C.qm;
    y = (y + C.gen.second) % C.qm;
  }
  return out;
}

namespace {

// Shared precondition: C has order ell^n >= ell inside (Z/ell^{n+1})^2.
int lift_exponent(const AbstractCyclic& C) {
  long ord = C.order;
  int n = 0;
  while (ord > 1) {
    ord /= C.ell;
    ++n;
  }
  if (n < 1 || n + 1 != C.m)
    throw WrongOrder("lifts: need a subgroup of order ell^n in (Z/ell^{n+1})^2 with n >= 1");
  return n;
}

}  // namespace

std::pair<std::pair<long, long>, std::pair<long, long>> canonical_lift_basis(const AbstractCyclic& C) {
  lift_exponent(C);
  const long q = C.qm;  // ell^{n+1}
  const long u = C.gen.first, v = C.gen.second;
  if (u % C.ell != 0 || v % C.ell != 0)
    throw std::logic_error("canonical_lift_basis: generator of order ell^n must have both "
                           "coordinates divisible by ell");
  // Solutions of ell*Q = gen are (u/ell + i*ell^n, v/ell + j*ell^n); the
  // lex-least one has i = j = 0 because u/ell, v/ell < ell^n.
  std::pair<long, long> Q{u / C.ell, v / C.ell};
  for (long s1 = 0; s1 < q; ++s1) {
    for (long s2 = 0; s2 < q; ++s2) {
      long det = mod_pos(Q.first * s2 - Q.second * s1, q);
      if (det % C.ell != 0) return {Q, {s1, s2}};
    }
  }
  throw std::logic_error("canonical_lift_basis: no completing vector found");
}

AbstractCyclic lift_at(const AbstractCyclic& C, long t) {
  int n = lift_exponent(C);
  if (t < 0 || t >= C.ell) throw std::invalid_argument("lift_at: t out of range");
  auto [Q, S] = canonical_lift_basis(C);
  const long q = C.qm;
  long qn = 1;
  for (int i = 0; i < n; ++i) qn *= C.ell;
  long x = mod_pos(Q.first + t * qn * S.first, q);
  long y = mod_pos(Q.second + t * qn * S.second, q);
  return make_cyclic(C.ell, C.m, x, y);
}

std::vector<AbstractCyclic> lifts_of_cyclic(const AbstractCyclic& C) {
  int n = lift_exponent(C);
  const long q = C.qm;
  long qn = 1;
  for (int i = 0; i < n; ++i) qn *= C.ell;

  // Index order matches lift_at and action_on_lifts: out[t] = D_t.
  std::vector<AbstractCyclic> out;
  for (long t = 0; t < C.ell; ++t) {
    AbstractCyclic D = lift_at(C, t);
    if (std::find(out.begin(), out.end(), D) != out.end())
      throw std::logic_error("lifts_of_cyclic: basis indexing produced a repeat");
    out.push_back(D);
  }

  // Defensive completeness check: every solution Q' of ell*Q' = gen generates
  // one of the D_t.
  const long u0 = C.gen.first / C.ell, v0 = C.gen.second / C.ell;
  for (long i = 0; i < C.ell; ++i)
    for (long j = 0; j < C.ell; ++j) {
      AbstractCyclic D = make_cyclic(C.ell, C.m, mod_pos(u0 + i * qn, q), mod_pos(v0 + j * qn, q));
      if (std::find(out.begin(), out.end(), D) == out.end())
        throw std::logic_error("lifts_of_cyclic: preimage outside the indexed lifts");
    }
  return out;
}

std::vector<long> action_on_lifts(const Mat2& g, const AbstractCyclic& C) {
  int n = lift_exponent(C);
  if (g.mod.ell != C.ell || g.mod.n != C.m)
    throw std::invalid_argument("action_on_lifts: matrix modulus must match the ambient group");
  if (!g.is_invertible()) throw NotInvertible("action_on_lifts: " + g.str());

  auto [Q, S] = canonical_lift_basis(C);
  Mat2 B(Q.first, S.first, Q.second, S.second, g.mod);
  Mat2 M = B.inverse() * g * B;
  long qn = 1;
  for (int i = 0; i < n; ++i) qn *= C.ell;

  // g stabilizes C = <ell*Q> iff g(ell*Q) lies in C, i.e. the S-coordinate of
  // g(Q) vanishes mod ell^n; that coordinate is M.c.
  if (M.c % qn != 0) throw DoesNotStabilize("action_on_lifts: " + g.str());

  const long ell = C.ell;
  long ctil = (M.c / qn) % ell;
  long atil = M.a % ell;
  long dtil = M.d % ell;
  long ainv = invmod_long(atil, ell);  // diagonal entries are units: det(M) is a unit
  std::vector<long> perm(std::size_t(ell), 0);
  for (long t = 0; t < ell; ++t)
    perm[std::size_t(t)] = ((ctil + t * dtil) % ell * ainv) % ell;
  return perm;
}

}  // namespace iso
