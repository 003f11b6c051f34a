#include "iso/curves.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <utility>

namespace iso {
namespace {

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigRat canonical(const BigRat& q) {
  BigRat r = q;
  r.canonicalize();
  return r;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

[[noreturn]] void parse_fail(const std::string& file, long line, const std::string& why) {
  std::ostringstream os;
  os << file << ":" << line << ": " << why;
  throw ParseError(os.str());
}

// Parses one "[a,b] c" line; throws ParseError on any deviation.
void parse_modpoly_line(const std::string& file, long line, const std::string& raw, int& a,
                        int& b, BigInt& c) {
  const std::string s = strip(raw);
  std::size_t i = 0;
  auto expect = [&](char ch) {
    if (i >= s.size() || s[i] != ch)
      parse_fail(file, line, "expected '" + std::string(1, ch) + "' in \"" + raw + "\"");
    ++i;
  };
  auto parse_int = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) parse_fail(file, line, "expected exponent digits in \"" + raw + "\"");
    if (i - start > 6) parse_fail(file, line, "exponent out of range in \"" + raw + "\"");
    return std::stoi(s.substr(start, i - start));
  };
  expect('[');
  a = parse_int();
  expect(',');
  b = parse_int();
  expect(']');
  if (i >= s.size() || (s[i] != ' ' && s[i] != '\t'))
    parse_fail(file, line, "expected whitespace before the coefficient in \"" + raw + "\"");
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  const std::string coeff = s.substr(i);
  if (!is_integer_literal(coeff))
    parse_fail(file, line, "expected an integer coefficient in \"" + raw + "\"");
  c = BigInt(coeff);
}

BiPoly load_modpoly_file(const std::string& path, long level) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::map<std::pair<int, int>, BigInt> entries;
  std::string raw;
  long line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    int a = 0, b = 0;
    BigInt c;
    parse_modpoly_line(path, line, raw, a, b, c);
    if (c == 0) parse_fail(path, line, "zero coefficient entry");
    auto [it, inserted] = entries.emplace(std::make_pair(a, b), c);
    if (!inserted) parse_fail(path, line, "duplicate entry for [" + std::to_string(a) + "," +
                                              std::to_string(b) + "]");
  }
  // Close symmetry; reject explicit asymmetric pairs.
  BiPoly phi;
  for (const auto& [key, c] : entries) {
    auto [a, b] = key;
    if (a != b) {
      auto mirror = entries.find(std::make_pair(b, a));
      if (mirror != entries.end() && mirror->second != c)
        throw ParseError(path + ": entries [" + std::to_string(a) + "," + std::to_string(b) +
                         "] and [" + std::to_string(b) + "," + std::to_string(a) +
                         "] disagree");
      phi.set(b, a, c);
    }
    phi.set(a, b, c);
  }
  if (phi.is_zero()) throw ParseError(path + ": no coefficient entries");
  if (!phi.is_symmetric())
    throw ParseError(path + ": polynomial is not symmetric after closure");
  if (phi.degree_x() != level + 1 || phi.degree_y() != level + 1)
    throw DegreeMismatch(path + ": degree " + std::to_string(phi.degree_x()) + " but level " +
                         std::to_string(level) + " requires " + std::to_string(level + 1));
  return phi;
}

// (den*x - num)^e, primitive with positive leading coefficient.
IntPoly linear_backtrack(const BigRat& j, unsigned e) {
  IntPoly lin(std::vector<BigInt>{-j.get_num(), j.get_den()});
  return lin.pow(e);
}

IntPoly primitive(const IntPoly& f) { return content_and_primitive(f).second; }

// ---------------------------------------------------------------------------
// Height enumeration for the fiber search
// ---------------------------------------------------------------------------

long gcd_long(long a, long b) {
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// All a/b in lowest terms, b >= 1, max(|a|, b) <= H; increasing max(|a|, b),
// then lexicographic in (a, b).
std::vector<BigRat> height_ordered_rationals(long H) {
  std::vector<BigRat> out;
  for (long m = 1; m <= H; ++m) {
    std::vector<std::pair<long, long>> layer;
    for (long a = -m; a <= m; ++a)
      if (gcd_long(a, m) == 1) layer.emplace_back(a, m);
    for (long b = 1; b < m; ++b) {
      if (gcd_long(m, b) != 1) continue;
      layer.emplace_back(-m, b);
      layer.emplace_back(m, b);
    }
    std::sort(layer.begin(), layer.end());
    for (auto [a, b] : layer) out.emplace_back(BigInt(a), BigInt(b));
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

struct SearchChunk {
  long poles_t = 0;
  long poles_h = 0;
  std::vector<FiberHit> hits;
};

bool hit_less(const FiberHit& x, const FiberHit& y) {
  if (x.t != y.t) return x.t < y.t;
  return x.h < y.h;
}

// Processes params[lo, hi) on one side of the product: evaluates `own` at the
// parameter and solves for the other side's parameter on `other`.
SearchChunk search_range(const CurveParam& f, const CurveParam& g, bool param_is_t,
                         const std::vector<BigRat>& params, std::size_t lo, std::size_t hi) {
  SearchChunk out;
  const CurveParam& own = param_is_t ? f : g;
  const CurveParam& other = param_is_t ? g : f;
  for (std::size_t i = lo; i < hi; ++i) {
    const BigRat& v = params[i];
    if (own.map.den().eval(v) == 0) {
      ++(param_is_t ? out.poles_t : out.poles_h);
      continue;
    }
    const BigRat j = own.map.eval(v);
    for (const BigRat& w : fibers_over_j(other, j)) {
      FiberHit hit;
      hit.t = param_is_t ? v : w;
      hit.h = param_is_t ? w : v;
      hit.j = j;
      hit.cm = is_cm_j(j);
      out.hits.push_back(std::move(hit));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JTable schema
// ---------------------------------------------------------------------------

struct JTableSection {
  const char* name;
  std::vector<BigRat> JTable::* list;
  int required_count;  // -1: any
};

const std::vector<JTableSection>& jtable_sections() {
  static const std::vector<JTableSection> sections = {
      {"cm_j", &JTable::cm_j, 13},      {"iso11_j", &JTable::iso11_j, -1},
      {"iso15_j", &JTable::iso15_j, 4}, {"iso17_j", &JTable::iso17_j, -1},
      {"iso19_j", &JTable::iso19_j, -1}, {"iso21_j", &JTable::iso21_j, 4},
      {"iso37_j", &JTable::iso37_j, -1},
  };
  return sections;
}

const char* const kJTableHeader =
    "# Special j-invariant tables; exact rationals, one 'p/q' per line.\n"
    "# cm_j: the 13 rational CM j-invariants (excluded everywhere).\n"
    "# isoN_j: non-CM rational j-invariants with a cyclic N-isogeny over Q.\n"
    "# Generated by tools/gen_jtable.py; validated at load by the library.\n";

}  // namespace

// ---------------------------------------------------------------------------
// ModPolyDB
// ---------------------------------------------------------------------------

const BiPoly& ModPolyDB::get(long level) const {
  auto it = polys_.find(level);
  if (it == polys_.end())
    throw MissingLevel("no modular polynomial loaded for level " + std::to_string(level));
  return it->second;
}

std::vector<long> ModPolyDB::levels() const {
  std::vector<long> out;
  out.reserve(polys_.size());
  for (const auto& [level, phi] : polys_) out.push_back(level);
  return out;
}

void ModPolyDB::insert(long level, BiPoly phi) {
  if (!is_small_prime(level))
    throw DegreeMismatch("modular polynomial levels must be prime; got " +
                         std::to_string(level));
  if (!phi.is_symmetric())
    throw ParseError("polynomial for level " + std::to_string(level) + " is not symmetric");
  if (phi.degree_x() != level + 1)
    throw DegreeMismatch("polynomial for level " + std::to_string(level) + " has degree " +
                         std::to_string(phi.degree_x()) + ", expected " +
                         std::to_string(level + 1));
  polys_[level] = std::move(phi);
}

ModPolyDB load_modpoly_db(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw ParseError(dir + ": not a readable directory");
  ModPolyDB db;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    if (name.size() < 8 || name.rfind("phi", 0) != 0 || name.substr(name.size() - 4) != ".txt")
      continue;
    const std::string digits = name.substr(3, name.size() - 7);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      continue;
    const long level = std::stol(digits);
    if (!is_small_prime(level))
      throw ParseError(path.string() + ": level " + std::to_string(level) + " is not prime");
    db.insert(level, load_modpoly_file(path.string(), level));
  }
  return db;
}

// ---------------------------------------------------------------------------
// CM table
// ---------------------------------------------------------------------------

const std::vector<BigRat>& cm_j_invariants() {
  static const std::vector<BigRat> cm = [] {
    const long values[] = {-262537412640768000L,
                           -147197952000L,
                           -884736000L,
                           -12288000L,
                           -884736L,
                           -32768L,
                           -3375L,
                           0L,
                           1728L,
                           8000L,
                           54000L,
                           287496L,
                           16581375L};
    std::vector<BigRat> out;
    for (long v : values) out.emplace_back(BigInt(v), BigInt(1));
    return out;
  }();
  return cm;
}

bool is_cm_j(const BigRat& j0) {
  const BigRat j = canonical(j0);
  if (j.get_den() != 1) return false;
  for (const BigRat& c : cm_j_invariants())
    if (c == j) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Specialization
// ---------------------------------------------------------------------------

IntPoly specialize(long ell, const BigRat& j0, const ModPolyDB& db) {
  const BiPoly& phi = db.get(ell);
  const BigRat j = canonical(j0);
  const IntPoly specialized = primitive(phi.eval_y_cleared(j.get_num(), j.get_den()));
  if (specialized.degree() != ell + 1)
    throw DegreeMismatch("specialization of level " + std::to_string(ell) + " has degree " +
                         std::to_string(specialized.degree()) + ", expected " +
                         std::to_string(ell + 1));
  return specialized;
}

IntPoly specialize_prime_power_unchecked(long ell, int e, const BigRat& j0,
                                         const ModPolyDB& db) {
  if (e != 2 && e != 3)
    throw std::invalid_argument("prime-power specialization supports exponents 2 and 3; got " +
                                std::to_string(e));
  const BiPoly& phi = db.get(ell);
  const BigRat j = canonical(j0);
  const IntPoly level1 = specialize(ell, j, db);

  auto chain_step = [&](const IntPoly& prev, const IntPoly& backtrack, long expect_degree,
                        const char* label) {
    const IntPoly res = primitive(resultant_x(phi, prev));
    auto quotient = try_divide_exact(res, backtrack);
    if (!quotient)
      throw InexactDivision(std::string(label) +
                            ": backtrack factor does not divide the resultant exactly");
    const IntPoly out = primitive(*quotient);
    if (out.degree() != expect_degree)
      throw DegreeMismatch(std::string(label) + " has degree " +
                           std::to_string(out.degree()) + ", expected " +
                           std::to_string(expect_degree));
    return out;
  };

  const std::string base = "level " + std::to_string(ell);
  const IntPoly level2 =
      chain_step(level1, linear_backtrack(j, static_cast<unsigned>(ell + 1)), ell * ell + ell,
                 (base + "^2 specialization").c_str());
  if (e == 2) return level2;
  return chain_step(level2, level1.pow(static_cast<unsigned>(ell)), ell * ell * ell + ell * ell,
                    (base + "^3 specialization").c_str());
}

IntPoly specialize_prime_power(long ell, int e, const BigRat& j0, const ModPolyDB& db) {
  if (is_cm_j(j0))
    throw CMInput("j = " + rational_str(canonical(j0)) +
                  " has complex multiplication; prime-power specialization requires a "
                  "non-CM j-invariant");
  return specialize_prime_power_unchecked(ell, e, j0, db);
}

FactorPattern isogeny_field_degrees(long n, const BigRat& j0, const ModPolyDB& db,
                                    std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("level must be at least 2");
  long p = 0;
  int e = 0;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      long m = n;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (m != 1)
        throw std::invalid_argument("level " + std::to_string(n) +
                                    " is not a prime power");
      break;
    }
  }
  if (p == 0) {
    p = n;
    e = 1;
  }
  if (e > 3)
    throw std::invalid_argument("level " + std::to_string(n) +
                                " exceeds the supported exponent range (p, p^2, p^3)");
  const IntPoly f = (e == 1) ? specialize(p, j0, db) : specialize_prime_power(p, e, j0, db);
  FactorPattern pattern = factor_over_Q(f, seed);
  long total = 0;
  for (const auto& part : pattern.parts) total += static_cast<long>(part.degree()) * part.multiplicity;
  if (total != f.degree())
    throw DegreeMismatch("factor degrees sum to " + std::to_string(total) + ", expected " +
                         std::to_string(f.degree()));
  return pattern;
}

// ---------------------------------------------------------------------------
// Curve parametrizations
// ---------------------------------------------------------------------------

const std::vector<CurveParam>& all_curves() {
  static const std::vector<CurveParam> curves = [] {
    const IntPoly one{1};
    const IntPoly t{0, 1};
    std::vector<CurveParam> out;
    // j = 1728 - t^2
    out.push_back({CurveId::X3, "X3", RatFunc(IntPoly{1728, 0, -1}, one)});
    // j = (32 t - 4) / t^4
    out.push_back({CurveId::X7, "X7", RatFunc(IntPoly{-4, 32}, IntPoly::monomial(4))});
    // j = (32 (t+1)(t^2-3)^3 - 4 (t^2-3)^4) / (t+1)^4
    {
      const IntPoly u{1, 1};
      const IntPoly w{-3, 0, 1};
      const IntPoly num = (u * w.pow(3)).scaled(32) - w.pow(4).scaled(4);
      out.push_back({CurveId::X20, "X20", RatFunc(num, u.pow(4))});
    }
    // j = (h+27)(h+3)^3 / h
    out.push_back({CurveId::X0_3, "X0_3", RatFunc(IntPoly{27, 1} * IntPoly{3, 1}.pow(3), t)});
    // j = (h^2+10h+5)^3 / h
    out.push_back({CurveId::X0_5, "X0_5", RatFunc(IntPoly{5, 10, 1}.pow(3), t)});
    // j = (h^2+13h+49)(h^2+5h+1)^3 / h
    out.push_back(
        {CurveId::X0_7, "X0_7", RatFunc(IntPoly{49, 13, 1} * IntPoly{1, 5, 1}.pow(3), t)});
    // j = (h^2+5h+13)(h^4+7h^3+20h^2+19h+1)^3 / h
    out.push_back({CurveId::X0_13, "X0_13",
                   RatFunc(IntPoly{13, 5, 1} * IntPoly{1, 19, 20, 7, 1}.pow(3), t)});
    return out;
  }();
  return curves;
}

const CurveParam& curve(CurveId id) {
  for (const CurveParam& c : all_curves())
    if (c.id == id) return c;
  throw std::logic_error("unmapped curve id");
}

const CurveParam* curve_by_name(const std::string& name) {
  for (const CurveParam& c : all_curves())
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<BigRat> fibers_over_j(const CurveParam& c, const BigRat& j0) {
  const BigRat j = canonical(j0);
  const IntPoly lhs = c.map.num().scaled(j.get_den()) - c.map.den().scaled(j.get_num());
  if (lhs.is_zero()) throw std::logic_error("constant parametrization map");
  std::vector<BigRat> roots = rational_roots(lhs);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Fiber-product search
// ---------------------------------------------------------------------------

FiberSearchResult fiber_product_search(const CurveParam& g, const CurveParam& f,
                                       long height_bound, int parallelism) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be at least 1");
  const std::vector<BigRat> params = height_ordered_rationals(height_bound);
  const std::size_t n = params.size();

  // Jobs 0..n-1: t side on f; jobs n..2n-1: h side on g.
  std::vector<SearchChunk> chunks;
  auto run_jobs = [&](std::size_t lo, std::size_t hi) {
    SearchChunk acc;
    auto absorb = [&acc](SearchChunk part) {
      acc.poles_t += part.poles_t;
      acc.poles_h += part.poles_h;
      for (auto& hit : part.hits) acc.hits.push_back(std::move(hit));
    };
    if (lo < n) absorb(search_range(f, g, true, params, lo, std::min(hi, n)));
    if (hi > n) absorb(search_range(f, g, false, params, std::max(lo, n) - n, hi - n));
    return acc;
  };

  const std::size_t total = 2 * n;
  const int workers = std::max(1, parallelism);
  if (workers == 1 || total < 2) {
    chunks.push_back(run_jobs(0, total));
  } else {
    const std::size_t stride = (total + workers - 1) / workers;
    std::vector<std::future<SearchChunk>> futures;
    for (std::size_t lo = 0; lo < total; lo += stride) {
      const std::size_t hi = std::min(lo + stride, total);
      futures.push_back(std::async(std::launch::async, run_jobs, lo, hi));
    }
    for (auto& fut : futures) chunks.push_back(fut.get());
  }

  FiberSearchResult result;
  result.height_bound = height_bound;
  for (auto& chunk : chunks) {
    result.poles_t += chunk.poles_t;
    result.poles_h += chunk.poles_h;
    for (auto& hit : chunk.hits) result.hits.push_back(std::move(hit));
  }
  std::sort(result.hits.begin(), result.hits.end(), hit_less);
  result.hits.erase(std::unique(result.hits.begin(), result.hits.end(),
                                [](const FiberHit& x, const FiberHit& y) {
                                  return x.t == y.t && x.h == y.h;
                                }),
                    result.hits.end());
  return result;
}

// ---------------------------------------------------------------------------
// 2-division cubic
// ---------------------------------------------------------------------------

IntPoly two_division_cubic(const BigRat& j0) {
  const BigRat j = canonical(j0);
  if (j == 0 || j == 1728)
    throw SingularJ("j = " + rational_str(j) + " has no squarefree 2-division cubic here");
  const BigRat shift = j - 1728;
  const BigRat a = BigRat(-3) * j * shift;
  const BigRat b = BigRat(-2) * j * shift * shift;
  BigInt d;
  mpz_lcm(d.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  const BigRat a2 = canonical(a * BigRat(d * d));
  const BigRat b3 = canonical(b * BigRat(d * d * d));
  if (a2.get_den() != 1 || b3.get_den() != 1)
    throw std::logic_error("denominator clearing failed in two_division_cubic");
  return IntPoly(std::vector<BigInt>{b3.get_num(), a2.get_num(), BigInt(0), BigInt(1)});
}

// ---------------------------------------------------------------------------
// JTable
// ---------------------------------------------------------------------------

JTable load_jtable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  JTable table;
  std::vector<std::string> seen;
  std::vector<BigRat> JTable::* current = nullptr;
  std::string raw;
  long line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') parse_fail(path, line, "unterminated section header \"" + raw + "\"");
      const std::string name = s.substr(1, s.size() - 2);
      const auto& sections = jtable_sections();
      auto it = std::find_if(sections.begin(), sections.end(),
                             [&](const JTableSection& sec) { return sec.name == name; });
      if (it == sections.end()) parse_fail(path, line, "unknown section [" + name + "]");
      if (std::find(seen.begin(), seen.end(), name) != seen.end())
        parse_fail(path, line, "duplicate section [" + name + "]");
      seen.push_back(name);
      current = it->list;
      continue;
    }
    if (current == nullptr) parse_fail(path, line, "entry before any section header");
    try {
      (table.*current).push_back(canonical(parse_rational(s)));
    } catch (const std::invalid_argument& e) {
      parse_fail(path, line, std::string("bad rational \"") + s + "\": " + e.what());
    }
  }
  for (const auto& sec : jtable_sections()) {
    if (std::find(seen.begin(), seen.end(), sec.name) == seen.end())
      throw ParseError(path + ": missing section [" + std::string(sec.name) + "]");
    const auto count = static_cast<long>((table.*(sec.list)).size());
    if (sec.required_count >= 0 && count != sec.required_count)
      throw ParseError(path + ": section [" + std::string(sec.name) + "] has " +
                       std::to_string(count) + " entries, expected " +
                       std::to_string(sec.required_count));
  }
  return table;
}

std::string serialize_jtable(const JTable& t) {
  std::string out = kJTableHeader;
  for (const auto& sec : jtable_sections()) {
    out += "\n[";
    out += sec.name;
    out += "]\n";
    for (const BigRat& v : t.*(sec.list)) {
      out += rational_str(v);
      out += "\n";
    }
  }
  return out;
}

void validate_jtable(const JTable& t, const ModPolyDB& db) {
  const auto& cm = cm_j_invariants();
  if (t.cm_j.size() != cm.size())
    throw JTableInvalid("cm_j has " + std::to_string(t.cm_j.size()) + " entries, expected " +
                        std::to_string(cm.size()));
  for (std::size_t i = 0; i < cm.size(); ++i)
    if (t.cm_j[i] != cm[i])
      throw JTableInvalid("cm_j entry " + std::to_string(i) + " is " +
                          rational_str(t.cm_j[i]) + ", expected " + rational_str(cm[i]));

  struct IsoCheck {
    const char* name;
    const std::vector<BigRat> JTable::* list;
    std::vector<long> primes;
  };
  const IsoCheck checks[] = {
      {"iso11_j", &JTable::iso11_j, {11}}, {"iso15_j", &JTable::iso15_j, {3, 5}},
      {"iso17_j", &JTable::iso17_j, {17}}, {"iso19_j", &JTable::iso19_j, {19}},
      {"iso21_j", &JTable::iso21_j, {3, 7}}, {"iso37_j", &JTable::iso37_j, {37}},
  };
  for (const auto& check : checks) {
    for (const BigRat& j : t.*(check.list)) {
      if (is_cm_j(j))
        throw JTableInvalid(std::string(check.name) + " entry " + rational_str(j) +
                            " is a CM j-invariant");
      for (long p : check.primes) {
        if (rational_roots(specialize(p, j, db)).empty())
          throw JTableInvalid(std::string(check.name) + " entry " + rational_str(j) +
                              " admits no rational " + std::to_string(p) + "-isogeny");
      }
    }
  }
}

}  // namespace iso
