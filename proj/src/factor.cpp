#include "iso/factor.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <tuple>

namespace iso {
namespace {

// ----------------------------------------------------------------- primes --

bool is_prime_long(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long next_prime_after(long n) {
  long c = std::max(n + 1, 2L);
  if (c == 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime_long(c)) c += 2;
  return c;
}

// ------------------------------------------------------- arithmetic mod p --
// Dense polynomials over F_p as vector<long>, lowest degree first, entries in
// [0, p). Products go through __int128 so any prime below 2^62 is safe.

using PVec = std::vector<long>;

long mod_reduce(const BigInt& v, long p) {
  return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

long mulmod(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long invmod_l(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    long t2 = t - q * nt;
    t = nt;
    nt = t2;
    long r2 = r - q * nr;
    r = nr;
    nr = r2;
  }
  return t < 0 ? t + p : t;
}

void ptrim(PVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int pdeg(const PVec& v) { return static_cast<int>(v.size()) - 1; }

PVec preduce(const IntPoly& f, long p) {
  PVec r(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) r[i] = mod_reduce(f[i], p);
  ptrim(r);
  return r;
}

PVec padd(const PVec& a, const PVec& b, long p) {
  PVec c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
  ptrim(c);
  return c;
}

PVec psub(const PVec& a, const PVec& b, long p) {
  PVec c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] - b[i] % p + p) % p;
  ptrim(c);
  return c;
}

PVec pmul(const PVec& a, const PVec& b, long p) {
  if (a.empty() || b.empty()) return {};
  PVec c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
  }
  ptrim(c);
  return c;
}

PVec pmonic(PVec f, long p) {
  if (f.empty() || f.back() == 1) return f;
  long inv = invmod_l(f.back(), p);
  for (auto& v : f) v = mulmod(v, inv, p);
  return f;
}

std::pair<PVec, PVec> pdivrem(const PVec& a, const PVec& b, long p) {
  int db = pdeg(b);
  PVec r = a, q;
  if (pdeg(r) >= db) q.assign(pdeg(r) - db + 1, 0);
  long binv = invmod_l(b.back(), p);
  while (pdeg(r) >= db) {
    int sh = pdeg(r) - db;
    long coef = mulmod(r.back(), binv, p);
    q[sh] = coef;
    for (int i = 0; i <= db; ++i) {
      r[sh + i] = (r[sh + i] - static_cast<long>(static_cast<__int128>(coef) * b[i] % p) + p) % p;
    }
    ptrim(r);
  }
  ptrim(q);
  return {q, r};
}

PVec pmod(const PVec& a, const PVec& b, long p) { return pdivrem(a, b, p).second; }
PVec pdivx(const PVec& a, const PVec& b, long p) { return pdivrem(a, b, p).first; }

PVec pgcd(PVec a, PVec b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PVec r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(std::move(a), p);
}

PVec pderiv(const PVec& f, long p) {
  if (f.size() <= 1) return {};
  PVec d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = static_cast<long>(static_cast<__int128>(f[i]) * (i % p) % p);
  ptrim(d);
  return d;
}

// f(x) = g(x^p) -> g. Over the prime field the coefficient p-th root is the
// identity (Frobenius fixes F_p), so deflation is just index selection.
PVec pdeflate(const PVec& f, long p) {
  PVec g;
  for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
  ptrim(g);
  return g;
}

PVec ppowmod(const PVec& base, const BigInt& e, const PVec& mod, long p) {
  PVec result{1};
  if (e == 0) return result;
  PVec b = pmod(base, mod, p);
  auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (long i = static_cast<long>(bits) - 1; i >= 0; --i) {
    result = pmod(pmul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = pmod(pmul(result, b, p), mod, p);
  }
  return result;
}

// --------------------------------------------- factorization over F_p ------

// Squarefree decomposition of a monic f: (monic squarefree part, multiplicity)
// pairs, pairwise coprime. Handles vanishing derivative by p-th-power
// deflation.
void sff(const PVec& f, int mult, long p, std::vector<std::pair<PVec, int>>& out) {
  if (pdeg(f) <= 0) return;
  PVec fd = pderiv(f, p);
  if (fd.empty()) {
    sff(pdeflate(f, p), mult * static_cast<int>(p), p, out);
    return;
  }
  PVec c = pgcd(f, fd, p);
  PVec w = pdivx(f, c, p);
  int i = 1;
  while (pdeg(w) > 0) {
    PVec y = pgcd(w, c, p);
    PVec z = pdivx(w, y, p);
    if (pdeg(z) > 0) out.push_back({z, mult * i});
    ++i;
    w = std::move(y);
    c = pdivx(c, w, p);
  }
  if (pdeg(c) > 0) sff(pdeflate(c, p), mult * static_cast<int>(p), p, out);
}

// Distinct-degree splitting of a monic squarefree f: (product, degree) pairs.
std::vector<std::pair<PVec, int>> ddf(PVec f, long p) {
  std::vector<std::pair<PVec, int>> out;
  const PVec x{0, 1};
  PVec h = pmod(x, f, p);
  int d = 0;
  while (pdeg(f) >= 2 * (d + 1)) {
    ++d;
    h = ppowmod(h, BigInt(p), f, p);
    PVec g = pgcd(psub(h, pmod(x, f, p), p), f, p);
    if (pdeg(g) > 0) {
      out.push_back({g, d});
      f = pdivx(f, g, p);
      h = pmod(h, f, p);
    }
  }
  if (pdeg(f) > 0) out.push_back({f, pdeg(f)});
  return out;
}

// Cantor-Zassenhaus equal-degree splitting: g monic squarefree, all
// irreducible factors of degree d. p = 2 uses the trace map.
void edf(const PVec& g, int d, long p, std::mt19937_64& rng, std::vector<PVec>& out) {
  if (pdeg(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt e;
  if (p != 2) {
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
  }
  while (true) {
    PVec a(pdeg(g));
    for (auto& v : a) v = static_cast<long>(rng() % static_cast<unsigned long>(p));
    ptrim(a);
    if (a.empty()) continue;
    PVec t;
    if (p == 2) {
      PVec s = pmod(a, g, p);
      t = s;
      for (int i = 1; i < d; ++i) {
        s = pmod(pmul(s, s, p), g, p);
        t = padd(t, s, p);
      }
    } else {
      t = ppowmod(a, e, g, p);
      if (t.empty()) t.assign(1, 0);
      t[0] = (t[0] + p - 1) % p;
      ptrim(t);
    }
    PVec u = pgcd(t, g, p);
    if (pdeg(u) > 0 && pdeg(u) < pdeg(g)) {
      edf(u, d, p, rng, out);
      edf(pdivx(g, u, p), d, p, rng, out);
      return;
    }
  }
}

IntPoly pvec_to_poly(const PVec& v) {
  std::vector<BigInt> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = v[i];
  return IntPoly(std::move(c));
}

// Monic irreducible factors with multiplicity of a monic f over F_p.
std::vector<std::pair<PVec, int>> factor_monic_mod_p(const PVec& f, long p, std::mt19937_64& rng) {
  std::vector<std::pair<PVec, int>> squarefree;
  sff(f, 1, p, squarefree);
  std::map<std::pair<int, PVec>, int> merged;
  for (const auto& [z, m] : squarefree) {
    for (const auto& [prod, d] : ddf(z, p)) {
      std::vector<PVec> irr;
      edf(prod, d, p, rng, irr);
      for (auto& q : irr) merged[{pdeg(q), q}] += m;
    }
  }
  std::vector<std::pair<PVec, int>> out;
  out.reserve(merged.size());
  for (auto& [key, m] : merged) out.push_back({key.second, m});
  return out;
}

// ------------------------------------------- arithmetic mod p^k (BigInt) ---

using BVec = std::vector<BigInt>;

void btrim(BVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int bdeg(const BVec& v) { return static_cast<int>(v.size()) - 1; }

BigInt bmod(const BigInt& x, const BigInt& M) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
  return r;
}

BVec breduce(const BVec& a, const BigInt& M) {
  BVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = bmod(a[i], M);
  btrim(r);
  return r;
}

BVec badd(const BVec& a, const BVec& b, const BigInt& M) {
  BVec c(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = bmod(c[i] + b[i], M);
  btrim(c);
  return c;
}

BVec bsub(const BVec& a, const BVec& b, const BigInt& M) {
  BVec c(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = bmod(c[i] - b[i], M);
  btrim(c);
  return c;
}

BVec bmul(const BVec& a, const BVec& b, const BigInt& M) {
  if (a.empty() || b.empty()) return {};
  BVec c(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (auto& v : c) v = bmod(v, M);
  btrim(c);
  return c;
}

// Division by a monic b; quotient and remainder mod M.
std::pair<BVec, BVec> bdivrem_monic(const BVec& a, const BVec& b, const BigInt& M) {
  int db = bdeg(b);
  BVec r = a, q;
  if (bdeg(r) >= db) q.assign(bdeg(r) - db + 1, BigInt(0));
  while (bdeg(r) >= db) {
    int sh = bdeg(r) - db;
    BigInt coef = r.back();
    q[sh] = coef;
    for (int i = 0; i <= db; ++i) r[sh + i] = bmod(r[sh + i] - coef * b[i], M);
    btrim(r);
  }
  btrim(q);
  return {q, r};
}

BVec from_pvec(const PVec& v) {
  BVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

BigInt symmetric_mod(const BigInt& x, const BigInt& M) {
  BigInt r = bmod(x, M);
  if (2 * r > M) r -= M;
  return r;
}

// Bezout pair mod p: s*G + t*H = 1 with deg s < deg H, deg t < deg G.
// Requires gcd(G, H) = 1.
std::pair<PVec, PVec> pbezout(const PVec& G, const PVec& H, long p) {
  PVec r0 = G, r1 = H;
  PVec s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = pdivrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    PVec s2 = psub(s0, pmul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    PVec t2 = psub(t0, pmul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (pdeg(r0) != 0) throw std::logic_error("pbezout: inputs not coprime");
  long inv = invmod_l(r0[0], p);
  for (auto& v : s0) v = mulmod(v, inv, p);
  for (auto& v : t0) v = mulmod(v, inv, p);
  return {s0, t0};
}

// One quadratic Hensel chain: lifts f = G*H from mod p to mod M (M = p^(2^j),
// the smallest such >= target), maintaining the Bezout certificate.
// G, H monic; f monic mod M.
struct PairLift {
  BVec G, H;
};

PairLift hensel_pair(const BVec& f_big, const PVec& G0, const PVec& H0, long p, const BigInt& M_final) {
  BigInt m(p);
  BVec G = from_pvec(G0), H = from_pvec(H0);
  auto [s0, t0] = pbezout(G0, H0, p);
  BVec s = from_pvec(s0), t = from_pvec(t0);
  const BVec one{BigInt(1)};
  while (m < M_final) {
    BigInt m2 = m * m;
    BVec f = breduce(f_big, m2);
    BVec e = bsub(f, bmul(G, H, m2), m2);
    auto [q, r] = bdivrem_monic(bmul(s, e, m2), H, m2);
    BVec Gs = badd(G, badd(bmul(t, e, m2), bmul(q, G, m2), m2), m2);
    BVec Hs = badd(H, r, m2);
    if (bdeg(Gs) != bdeg(G) || Gs.back() != 1 || bdeg(Hs) != bdeg(H) || Hs.back() != 1)
      throw std::logic_error("hensel_pair: monic degree invariant broken");
    BVec b = bsub(badd(bmul(s, Gs, m2), bmul(t, Hs, m2), m2), one, m2);
    auto [c, d] = bdivrem_monic(bmul(s, b, m2), Hs, m2);
    BVec ss = bsub(s, d, m2);
    BVec ts = bsub(t, badd(bmul(t, b, m2), bmul(c, Gs, m2), m2), m2);
    G = std::move(Gs);
    H = std::move(Hs);
    s = std::move(ss);
    t = std::move(ts);
    m = m2;
  }
  return {G, H};
}

// Lift all monic factors (coprime, product = f mod p) to mod M via a factor
// tree of pairwise Hensel lifts.
void lift_tree(const BVec& f, const std::vector<PVec>& facs, size_t lo, size_t hi, long p,
               const BigInt& M, std::vector<BVec>& out) {
  if (hi - lo == 1) {
    out.push_back(breduce(f, M));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  PVec G0{1}, H0{1};
  for (size_t i = lo; i < mid; ++i) G0 = pmul(G0, facs[i], p);
  for (size_t i = mid; i < hi; ++i) H0 = pmul(H0, facs[i], p);
  PairLift lifted = hensel_pair(f, G0, H0, p, M);
  lift_tree(lifted.G, facs, lo, mid, p, M, out);
  lift_tree(lifted.H, facs, mid, hi, p, M, out);
}

// ------------------------------------------------- Zassenhaus over Q -------

BigInt ceil_sqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) r += 1;
  return r;
}

// Subset-sum reachability of a degree pattern, as a bitmap over [0, total].
std::vector<char> reachable_sums(const std::vector<int>& degrees, int total) {
  std::vector<char> reach(total + 1, 0);
  reach[0] = 1;
  for (int d : degrees)
    for (int s = total; s >= d; --s)
      if (reach[s - d]) reach[s] = 1;
  return reach;
}

struct ModularChoice {
  long p = 0;
  std::vector<PVec> factors;  // monic irreducible, multiplicity 1 each
};

// Irreducible factors over Q of a primitive squarefree g with positive
// leading coefficient, degree >= 1.
std::vector<IntPoly> factor_squarefree_Q(const IntPoly& g, std::mt19937_64& rng) {
  if (g.degree() == 1) return {g};

  // Collect good primes: p does not divide lc(g) and g stays squarefree mod p.
  std::vector<ModularChoice> good;
  std::vector<std::vector<int>> patterns;
  size_t best = 0;
  long p = 2;  // scan starts at 3
  size_t want = 5;
  while (good.size() < want) {
    p = next_prime_after(p);
    if (mod_reduce(g.lc(), p) == 0) continue;
    PVec gp = pmonic(preduce(g, p), p);
    PVec gd = pderiv(gp, p);
    if (gd.empty() || pdeg(pgcd(gp, gd, p)) != 0) continue;
    ModularChoice mc;
    mc.p = p;
    std::vector<std::pair<PVec, int>> rawdd = ddf(gp, p);
    for (const auto& [prod, d] : rawdd) {
      std::vector<PVec> irr;
      edf(prod, d, p, rng, irr);
      for (auto& f : irr) mc.factors.push_back(std::move(f));
    }
    std::vector<int> pat;
    for (const auto& f : mc.factors) pat.push_back(pdeg(f));
    std::sort(pat.begin(), pat.end());
    patterns.push_back(std::move(pat));
    good.push_back(std::move(mc));
    if (good.back().factors.size() == 1) return {g};  // irreducible already
    if (good[best].factors.size() > good.back().factors.size()) best = good.size() - 1;
    // Excessive splitting at every prime so far: widen the search once.
    if (good.size() == want && want == 5 && good[best].factors.size() > 18) want = 20;
  }

  const ModularChoice& mc = good[best];
  const long bp = mc.p;
  const int n = g.degree();

  // Degrees viable for a factor over Q: subset sums common to every pattern.
  std::vector<char> viable(n + 1, 1);
  for (const auto& pat : patterns) {
    std::vector<char> reach = reachable_sums(pat, n);
    for (int i = 0; i <= n; ++i) viable[i] = viable[i] && reach[i];
  }

  // Hensel-lift the chosen factorization past twice the Mignotte bound
  // 2^deg * |g|_2 * |lc|, so symmetric residues identify true factors.
  BigInt norm2(0);
  for (const auto& cc : g.coeffs()) norm2 += cc * cc;
  BigInt bound = ceil_sqrt(norm2) * abs(g.lc());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  BigInt target = 2 * bound + 1;
  BigInt M(bp);
  while (M < target) M = M * M;

  BigInt lcinv;
  BigInt lcg = g.lc();
  mpz_invert(lcinv.get_mpz_t(), lcg.get_mpz_t(), M.get_mpz_t());
  BVec fmonic(g.degree() + 1);
  for (int i = 0; i <= g.degree(); ++i) fmonic[i] = bmod(g[i] * lcinv, M);
  std::vector<BVec> lifted;
  lift_tree(fmonic, mc.factors, 0, mc.factors.size(), bp, M, lifted);

  // Zassenhaus recombination, subsets by increasing cardinality.
  std::vector<IntPoly> result;
  IntPoly rem_g = g;
  std::vector<BVec> L = std::move(lifted);
  std::vector<int> Ldeg;
  for (const auto& f : L) Ldeg.push_back(bdeg(f));

  auto extract = [&](const std::vector<int>& subset) -> bool {
    // Candidates are scaled by the ORIGINAL leading coefficient: the lift
    // height was chosen so that lc(g) * (monic true factor) has symmetric
    // residue equal to itself.
    BVec prod{bmod(lcg, M)};
    for (int i : subset) prod = bmul(prod, L[i], M);
    std::vector<BigInt> cand(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) cand[i] = symmetric_mod(prod[i], M);
    IntPoly h(std::move(cand));
    if (h.is_zero()) return false;
    // Quick trailing-coefficient test: a true factor's constant term divides
    // lc * rem(0).
    if (rem_g[0] != 0 && h[0] != 0) {
      BigInt t0 = lcg * rem_g[0];
      if (!mpz_divisible_p(t0.get_mpz_t(), h[0].get_mpz_t())) return false;
    }
    IntPoly hp = content_and_primitive(h).second;
    auto quo = try_divide_exact(rem_g, hp);
    if (!quo) return false;
    result.push_back(hp);
    rem_g = *quo;
    std::vector<BVec> L2;
    std::vector<int> Ldeg2;
    size_t si = 0;
    for (size_t i = 0; i < L.size(); ++i) {
      if (si < subset.size() && static_cast<int>(i) == subset[si]) {
        ++si;
        continue;
      }
      L2.push_back(std::move(L[i]));
      Ldeg2.push_back(Ldeg[i]);
    }
    L = std::move(L2);
    Ldeg = std::move(Ldeg2);
    return true;
  };

  size_t card = 1;
  while (2 * card <= L.size()) {
    // Enumerate all index subsets of the current list with |subset| = card.
    std::vector<int> comb(card);
    for (size_t i = 0; i < card; ++i) comb[i] = static_cast<int>(i);
    bool found = false;
    while (true) {
      int dsum = 0;
      for (int i : comb) dsum += Ldeg[i];
      if (dsum <= n && viable[dsum] && extract(comb)) {
        found = true;
        break;
      }
      // next combination
      int k = static_cast<int>(card) - 1;
      while (k >= 0 && comb[k] == static_cast<int>(L.size()) - static_cast<int>(card) + k) --k;
      if (k < 0) break;
      ++comb[k];
      for (size_t i = k + 1; i < card; ++i) comb[i] = comb[i - 1] + 1;
    }
    if (!found) ++card;
  }
  if (rem_g.degree() >= 1) result.push_back(rem_g);
  return result;
}

// Yun squarefree decomposition of a primitive f with positive lc:
// pairwise-coprime primitive squarefree parts with multiplicities.
std::vector<std::pair<IntPoly, int>> yun_squarefree(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  IntPoly a0 = poly_gcd(f, f.derivative());
  if (a0.degree() == 0) {
    out.push_back({f, 1});
    return out;
  }
  IntPoly b = *try_divide_exact(f, a0);
  IntPoly c = *try_divide_exact(f.derivative(), a0);
  IntPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    IntPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = *try_divide_exact(b, a);
    c = *try_divide_exact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

struct IntPolyCmp {
  bool operator()(const IntPoly& a, const IntPoly& b) const { return intpoly_less(a, b); }
};

}  // namespace

// ------------------------------------------------------------- public API --

bool intpoly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<int> FactorPattern::degrees() const {
  std::vector<int> d;
  for (const auto& part : parts)
    for (int i = 0; i < part.multiplicity; ++i) d.push_back(part.degree());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::pair<int, int>> FactorPattern::degree_multiset() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& part : parts) out.push_back({part.degree(), part.multiplicity});
  std::sort(out.begin(), out.end());
  return out;
}

int FactorPattern::count_of_degree(int d) const {
  int n = 0;
  for (const auto& part : parts)
    if (part.degree() == d) n += part.multiplicity;
  return n;
}

IntPoly FactorPattern::product_of_factors() const {
  IntPoly prod = IntPoly::constant(1);
  for (const auto& part : parts) prod = prod * part.factor.pow(static_cast<unsigned>(part.multiplicity));
  return prod;
}

std::vector<ModPFactor> factor_mod_p(const IntPoly& f, long p, std::uint64_t seed) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (!is_prime_long(p)) throw BadPrime("modulus " + std::to_string(p) + " is not prime");
  if (mod_reduce(f.lc(), p) == 0)
    throw BadPrime("prime " + std::to_string(p) + " divides the leading coefficient");
  std::mt19937_64 rng(seed);
  PVec fp = pmonic(preduce(f, p), p);
  std::vector<ModPFactor> out;
  if (pdeg(fp) < 1) return out;
  for (auto& [q, m] : factor_monic_mod_p(fp, p, rng)) out.push_back({pvec_to_poly(q), m});
  return out;
}

FactorPattern factor_over_Q(const IntPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw ZeroPolynomial();
  auto [cont, prim] = content_and_primitive(f);
  FactorPattern pat;
  pat.content = BigRat(cont);
  if (prim.degree() < 1) return pat;
  std::mt19937_64 rng(seed);
  std::map<IntPoly, int, IntPolyCmp> merged;
  for (const auto& [part, mult] : yun_squarefree(prim))
    for (const auto& irr : factor_squarefree_Q(part, rng)) merged[irr] += mult;
  for (auto& [poly, mult] : merged) pat.parts.push_back({poly, mult});
  return pat;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  IntPoly g = content_and_primitive(f).second;
  if (g.degree() < 1) return IntPoly::constant(1);
  IntPoly d = poly_gcd(g, g.derivative());
  if (d.degree() == 0) return g;
  return *try_divide_exact(g, d);
}

std::vector<BigRat> rational_roots(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  std::vector<std::pair<BigRat, int>> found;

  // Split off the power of x first.
  int v = 0;
  while (v <= f.degree() && f[v] == 0) ++v;
  if (v > 0) found.push_back({BigRat(0), v});
  std::vector<BigInt> rest(f.coeffs().begin() + v, f.coeffs().end());
  IntPoly g = content_and_primitive(IntPoly(std::move(rest))).second;

  if (g.degree() >= 1) {
    IntPoly w = squarefree_part(g);

    // A good prime: no leading-coefficient drop and squarefree reduction.
    // Any rational root a/b (coprime) has b | lc(w), so p not dividing lc(w)
    // means every rational root stays visible and simple mod p.
    long p = 10007 - 1;
    PVec wbar, wdbar;
    while (true) {
      p = next_prime_after(p);
      if (mod_reduce(w.lc(), p) == 0) continue;
      wbar = preduce(w, p);
      wdbar = pderiv(wbar, p);
      if (wdbar.empty() || pdeg(pgcd(wbar, wdbar, p)) != 0) continue;
      break;
    }

    std::vector<long> residues;
    for (long r = 0; r < p; ++r) {
      long acc = 0;
      for (int i = pdeg(wbar); i >= 0; --i) acc = (static_cast<__int128>(acc) * r + wbar[i]) % p;
      if (acc == 0) residues.push_back(r);
    }

    if (!residues.empty()) {
      // Bound on numerator/denominator of any rational root: |a| <= |lc| +
      // max|c_i| (Cauchy-style), b <= |lc|.
      BigInt A = abs(w.lc());
      for (const auto& cc : w.coeffs()) {
        BigInt ac = abs(cc);
        if (ac > A) A = ac;
      }
      BigInt N = abs(w.lc()) + A;
      BigInt target = 2 * N * N + 1;

      auto eval_mod = [](const IntPoly& q, const BigInt& x, const BigInt& M) {
        BigInt acc(0);
        for (int i = q.degree(); i >= 0; --i) acc = bmod(acc * x + q[i], M);
        return acc;
      };
      IntPoly wd = w.derivative();

      std::map<BigRat, int> roots;
      for (long r0 : residues) {
        // Newton lifting: the root is simple mod p, so w'(x) stays a unit.
        BigInt m(p), x(r0);
        while (m < target) {
          m = m * m;
          BigInt der = eval_mod(wd, x, m);
          BigInt inv;
          if (mpz_invert(inv.get_mpz_t(), der.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::logic_error("rational_roots: derivative not invertible");
          x = bmod(x - eval_mod(w, x, m) * inv, m);
        }
        // Rational reconstruction: a/b with |a|, b <= N and a = b*x mod m.
        BigInt r0b = m, r1 = x, t0(0), t1(1);
        while (r1 > N) {
          BigInt q = r0b / r1;
          BigInt r2 = r0b - q * r1;
          r0b = r1;
          r1 = r2;
          BigInt t2 = t0 - q * t1;
          t0 = t1;
          t1 = t2;
        }
        BigInt a = r1, b = t1;
        if (b == 0) continue;
        if (b < 0) {
          a = -a;
          b = -b;
        }
        if (b > N || abs(a) > N) continue;
        if (w.eval_scaled(a, b) != 0) continue;
        BigRat root(a, b);
        root.canonicalize();
        roots[root] = 0;
      }
      // Multiplicities from the full (non-squarefree) part.
      for (auto& [root, mult] : roots) {
        IntPoly lin{std::vector<BigInt>{-root.get_num(), root.get_den()}};
        IntPoly cur = g;
        while (true) {
          auto q = try_divide_exact(cur, lin);
          if (!q) break;
          cur = *q;
          ++mult;
        }
        found.push_back({root, mult});
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BigRat> out;
  for (const auto& [root, mult] : found)
    for (int i = 0; i < mult; ++i) out.push_back(root);
  return out;
}

AbsenceCertificate certify_absent_degrees(const IntPoly& f, const std::set<int>& target_degrees,
                                          int prime_budget) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (poly_gcd(f, f.derivative()).degree() != 0)
    throw NotSquarefree("input has a repeated factor; certify on the squarefree part");
  AbsenceCertificate cert;
  cert.target_degrees = target_degrees;
  const int n = std::max(f.degree(), 0);
  long p = 2;
  std::mt19937_64 rng(1);
  while (static_cast<int>(cert.primes_used.size()) < prime_budget) {
    p = next_prime_after(p);
    if (mod_reduce(f.lc(), p) == 0) continue;
    PVec fp = pmonic(preduce(f, p), p);
    PVec fd = pderiv(fp, p);
    if (pdeg(fp) >= 1 && (fd.empty() || pdeg(pgcd(fp, fd, p)) != 0)) continue;
    std::vector<int> pattern;
    if (pdeg(fp) >= 1)
      for (const auto& [prod, d] : ddf(fp, p)) {
        std::vector<PVec> irr;
        edf(prod, d, p, rng, irr);
        for (const auto& q : irr) pattern.push_back(pdeg(q));
      }
    std::sort(pattern.begin(), pattern.end());
    cert.primes_used.push_back(p);
    cert.mod_p_patterns.push_back(pattern);
    std::vector<char> reach = reachable_sums(pattern, n);
    bool any_target_reachable = false;
    for (int d : target_degrees)
      if (d >= 0 && d <= n && reach[d]) any_target_reachable = true;
    if (!any_target_reachable) {
      cert.verdict = AbsenceVerdict::CertifiedAbsent;
      cert.certifying_prime = cert.primes_used.size() - 1;
      return cert;
    }
  }
  cert.verdict = AbsenceVerdict::Inconclusive;
  return cert;
}

bool cubic_fields_isomorphic(const IntPoly& f, const IntPoly& h) {
  auto check_cubic = [](const IntPoly& q, const char* name) {
    if (q.degree() != 3)
      throw NotIrreducible(std::string(name) + " is not an irreducible cubic (degree " +
                           std::to_string(q.degree()) + ")");
    if (!rational_roots(q).empty())
      throw NotIrreducible(std::string(name) + " has a rational root, hence is reducible");
  };
  check_cubic(f, "first argument");
  check_cubic(h, "second argument");

  BiPoly F;
  for (int i = 0; i <= f.degree(); ++i)
    if (f[i] != 0) F.set(i, 0, f[i]);

  for (int k = 0; k <= 25; ++k) {
    // H_k(x, y) = h(y - k*x), expanded binomially.
    BiPoly Hk;
    for (int i = 0; i <= h.degree(); ++i) {
      if (h[i] == 0) continue;
      BigInt binom(1);
      for (int j = 0; j <= i; ++j) {
        // term: C(i,j) * y^(i-j) * (-k x)^j
        BigInt kk(-k);
        BigInt kp;
        mpz_pow_ui(kp.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(j));
        BigInt add = h[i] * binom * kp;
        Hk.set(j, i - j, Hk.coeff(j, i - j) + add);
        binom = binom * (i - j) / (j + 1);
      }
    }
    IntPoly N = resultant_x(F, Hk);
    if (N.degree() != 9) continue;  // degenerate shift
    if (poly_gcd(N, N.derivative()).degree() != 0) continue;
    FactorPattern pat = factor_over_Q(N);
    return pat.count_of_degree(3) > 0;
  }
  throw TragerShiftExhausted("no squarefree resultant norm for shifts k = 0..25");
}

}  // namespace iso
