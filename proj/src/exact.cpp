#include "iso/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace iso {

// ---------------------------------------------------------------- IntPoly ---

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::monomial(int deg, BigInt coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(deg, BigInt(0));
    p.c_.push_back(std::move(coeff));
  }
  return p;
}

const BigInt& IntPoly::operator[](int i) const {
  static const BigInt zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const BigInt& IntPoly::lc() const {
  if (c_.empty()) throw ZeroPolynomial();
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  if (s == 0) return IntPoly();
  IntPoly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r = IntPoly::constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + BigRat(*it);
  }
  acc.canonicalize();
  return acc;
}

BigInt IntPoly::eval_scaled(const BigInt& num, const BigInt& den) const {
  if (is_zero()) return BigInt(0);
  // Horner in num with a running power of den: sum c_i num^i den^(deg-i).
  BigInt acc = c_.back();
  BigInt dpow(1);
  for (int i = degree() - 1; i >= 0; --i) {
    dpow *= den;
    acc = acc * num + c_[i] * dpow;
  }
  return acc;
}

std::string IntPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& v = c_[i];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    first = false;
    BigInt a = abs(v);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ------------------------------------------------------ content/primitive ---

std::pair<BigInt, IntPoly> content_and_primitive(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  BigInt g(0);
  for (const auto& v : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (f.lc() < 0) g = -g;
  std::vector<BigInt> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  return {g, IntPoly(std::move(c))};
}

std::pair<BigRat, IntPoly> content_and_primitive(const std::vector<BigRat>& coeffs) {
  bool all_zero = true;
  for (const auto& v : coeffs)
    if (v != 0) all_zero = false;
  if (coeffs.empty() || all_zero) throw ZeroPolynomial();
  BigInt den_lcm(1);
  for (const auto& v : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> ints(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    BigInt scale;
    mpz_divexact(scale.get_mpz_t(), den_lcm.get_mpz_t(), coeffs[i].get_den().get_mpz_t());
    ints[i] = coeffs[i].get_num() * scale;
  }
  auto [g, prim] = content_and_primitive(IntPoly(std::move(ints)));
  BigRat content(g, den_lcm);
  content.canonicalize();
  return {content, prim};
}

// -------------------------------------------------------- exact division ---

std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem(a.coeffs());
  std::vector<BigInt> q(a.degree() - b.degree() + 1, BigInt(0));
  const BigInt& blc = b.lc();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    BigInt& top = rem[i + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), blc.get_mpz_t())) return std::nullopt;
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), blc.get_mpz_t());
    for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= qc * b[j];
    q[i] = std::move(qc);
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

// ----------------------------------------------------------------- gcd ----

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, everything in Z[x].
// At each step multiply the running remainder by lc(b), then cancel the top
// term; after deg a - deg b + 1 steps the result has degree < deg b.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
  int da = a.degree(), db = b.degree();
  const BigInt& blc = b.lc();
  std::vector<BigInt> rem(a.coeffs());
  for (int i = da - db; i >= 0; --i) {
    BigInt top = rem[i + db];
    for (auto& v : rem) v *= blc;
    for (int j = 0; j <= db; ++j) rem[i + j] -= top * b[j];
  }
  return IntPoly(std::vector<BigInt>(rem.begin(), rem.begin() + db));
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return content_and_primitive(b).second;
  if (b.is_zero()) return content_and_primitive(a).second;
  a = content_and_primitive(a).second;
  b = content_and_primitive(b).second;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly::constant(1);
    IntPoly r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly() : content_and_primitive(r).second;
  }
  return a;  // already primitive with positive lc
}

// ------------------------------------------------------------- resultant ---

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  IntPoly A = f, B = g;
  int sign = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    std::swap(A, B);
  }
  if (B.degree() == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), B.lc().get_mpz_t(), A.degree());
    return sign * r;
  }
  // Subresultant PRS (Cohen, Algorithm 3.3.7).
  BigInt gg(1), h(1);
  while (true) {
    int da = A.degree(), db = B.degree();
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    IntPoly R = prem(A, B);
    A = std::move(B);
    // B = R / (g * h^delta)
    if (R.is_zero()) {
      B = IntPoly();
    } else {
      BigInt hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta);
      BigInt divisor = gg * hp;
      std::vector<BigInt> c(R.coeffs().size());
      for (size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), R.coeffs()[i].get_mpz_t(), divisor.get_mpz_t());
      B = IntPoly(std::move(c));
    }
    gg = A.lc();
    if (delta > 0) {
      BigInt gp;
      mpz_pow_ui(gp.get_mpz_t(), gg.get_mpz_t(), delta);
      BigInt hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
    }
    if (B.is_zero()) return BigInt(0);  // common factor of positive degree
    if (B.degree() == 0) {
      int da2 = A.degree();
      BigInt bp;
      mpz_pow_ui(bp.get_mpz_t(), B.lc().get_mpz_t(), da2);
      BigInt hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), da2 - 1);
      BigInt res;
      mpz_divexact(res.get_mpz_t(), bp.get_mpz_t(), hp.get_mpz_t());
      return sign * res;
    }
  }
}

// ---------------------------------------------------------------- BiPoly ---

void BiPoly::set(int dx, int dy, BigInt coeff) {
  Key k{dx, dy};
  if (coeff == 0)
    terms_.erase(k);
  else
    terms_[k] = std::move(coeff);
}

const BigInt& BiPoly::coeff(int dx, int dy) const {
  static const BigInt zero(0);
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? zero : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.second);
  return d;
}

bool BiPoly::is_symmetric() const {
  for (const auto& [k, v] : terms_)
    if (coeff(k.second, k.first) != v) return false;
  return true;
}

IntPoly BiPoly::eval_y_cleared(const BigInt& num, const BigInt& den) const {
  if (is_zero()) return IntPoly();
  int dy = degree_y();
  std::vector<BigInt> npow(dy + 1), dpow(dy + 1);
  npow[0] = 1;
  dpow[0] = 1;
  for (int i = 1; i <= dy; ++i) {
    npow[i] = npow[i - 1] * num;
    dpow[i] = dpow[i - 1] * den;
  }
  std::vector<BigInt> c(degree_x() + 1, BigInt(0));
  for (const auto& [k, v] : terms_) c[k.first] += v * npow[k.second] * dpow[dy - k.second];
  return IntPoly(std::move(c));
}

IntPoly BiPoly::eval_x(const BigInt& x0) const {
  if (is_zero()) return IntPoly();
  int dx = degree_x();
  std::vector<BigInt> xpow(dx + 1);
  xpow[0] = 1;
  for (int i = 1; i <= dx; ++i) xpow[i] = xpow[i - 1] * x0;
  std::vector<BigInt> c(degree_y() + 1, BigInt(0));
  for (const auto& [k, v] : terms_) c[k.second] += v * xpow[k.first];
  return IntPoly(std::move(c));
}

IntPoly BiPoly::coeff_of_x(int k) const {
  std::vector<BigInt> c;
  for (const auto& [key, v] : terms_) {
    if (key.first != k) continue;
    if (static_cast<int>(c.size()) <= key.second) c.resize(key.second + 1, BigInt(0));
    c[key.second] = v;
  }
  return IntPoly(std::move(c));
}

// --------------------------------------------------- bivariate resultant ---

namespace {

// Lagrange interpolation through (xs[i], ys[i]) with exact rational
// arithmetic; the result must have integer coefficients.
IntPoly interpolate_integer(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  size_t n = xs.size();
  std::vector<BigRat> acc(n, BigRat(0));
  for (size_t i = 0; i < n; ++i) {
    // Build prod_{j != i} (x - xs[j]) (coefficients lowest-first) and the
    // matching denominator prod_{j != i} (xs[i] - xs[j]).
    std::vector<BigInt> numer{BigInt(1)};
    BigInt denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      numer.push_back(0);
      for (size_t k = numer.size() - 1; k >= 1; --k) numer[k] = numer[k - 1] - xs[j] * numer[k];
      numer[0] = -xs[j] * numer[0];
      denom *= xs[i] - xs[j];
    }
    BigRat w(ys[i], denom);
    w.canonicalize();
    for (size_t k = 0; k < numer.size(); ++k) acc[k] += w * BigRat(numer[k]);
  }
  std::vector<BigInt> out(n);
  for (size_t k = 0; k < n; ++k) {
    acc[k].canonicalize();
    if (acc[k].get_den() != 1) throw std::logic_error("interpolation produced non-integer coefficient");
    out[k] = acc[k].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly resultant_x(const BiPoly& F, const BiPoly& G) {
  if (F.is_zero() || G.is_zero()) throw std::invalid_argument("resultant_x of zero polynomial");
  int m = F.degree_x(), n = G.degree_x();
  if (m == 0 && n == 0) return IntPoly::constant(1);
  if (m == 0) {
    // Res_x(c(y), G) = c(y)^n
    return F.coeff_of_x(0).pow(n);
  }
  if (n == 0) return G.coeff_of_x(0).pow(m);
  IntPoly lcF = F.coeff_of_x(m), lcG = G.coeff_of_x(n);
  int bound = m * std::max(G.degree_y(), 0) + n * std::max(F.degree_y(), 0);
  std::vector<BigInt> xs, ys;
  xs.reserve(bound + 1);
  for (long y0 = 0; static_cast<int>(xs.size()) <= bound; y0 = (y0 > 0 ? -y0 : -y0 + 1)) {
    BigInt yv(y0);
    if (lcF.eval(yv) == 0 || lcG.eval(yv) == 0) continue;  // degree would drop
    IntPoly fy = [&] {
      std::vector<BigInt> c(m + 1, BigInt(0));
      for (const auto& [k, v] : F.terms()) {
        BigInt yp;
        mpz_pow_ui(yp.get_mpz_t(), yv.get_mpz_t(), k.second);
        c[k.first] += v * yp;
      }
      return IntPoly(std::move(c));
    }();
    IntPoly gy = [&] {
      std::vector<BigInt> c(n + 1, BigInt(0));
      for (const auto& [k, v] : G.terms()) {
        BigInt yp;
        mpz_pow_ui(yp.get_mpz_t(), yv.get_mpz_t(), k.second);
        c[k.first] += v * yp;
      }
      return IntPoly(std::move(c));
    }();
    xs.push_back(yv);
    ys.push_back(resultant(fy, gy));
  }
  return interpolate_integer(xs, ys);
}

IntPoly resultant_x(const BiPoly& F, const IntPoly& g) {
  BiPoly G;
  for (int i = 0; i <= g.degree(); ++i)
    if (g[i] != 0) G.set(i, 0, g[i]);
  return resultant_x(F, G);
}

// ---------------------------------------------------------------- RatFunc ---

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroPolynomial();
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *try_divide_exact(num_, g);
    den_ = *try_divide_exact(den_, g);
  }
  auto [cn, pn] = content_and_primitive(num_);
  auto [cd, pd] = content_and_primitive(den_);
  BigInt gc;
  mpz_gcd(gc.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cd < 0) gc = -gc;
  num_ = pn.scaled(cn / gc);
  den_ = pd.scaled(cd / gc);
}

BigRat RatFunc::eval(const BigRat& t) const {
  BigInt d = den_.eval_scaled(t.get_num(), t.get_den());
  if (d == 0) throw PoleError("pole at t = " + rational_str(t));
  BigInt n = num_.eval_scaled(t.get_num(), t.get_den());
  // Align the den^deg clearing factors of numerator and denominator.
  int dn = num_.degree(), dd = den_.degree();
  BigInt tden_pow(1);
  if (dn > dd) {
    mpz_pow_ui(tden_pow.get_mpz_t(), t.get_den().get_mpz_t(), dn - dd);
    d *= tden_pow;
  } else if (dd > dn) {
    mpz_pow_ui(tden_pow.get_mpz_t(), t.get_den().get_mpz_t(), dd - dn);
    n *= tden_pow;
  }
  BigRat r(n, d);
  r.canonicalize();
  return r;
}

BigRat eval_ratfunc(const RatFunc& f, const BigRat& t) { return f.eval(t); }

// ----------------------------------------------------------- parse/print ---

BigRat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  BigRat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_str(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace iso
