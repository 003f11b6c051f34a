#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iso/curves.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace iso;
namespace fs = std::filesystem;

namespace {

const ModPolyDB& db() {
  static const ModPolyDB d = load_modpoly_db("data/modpoly");
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes content under a fresh temp directory and returns the file path.
struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          fs::path("curves-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string write(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }
};

std::vector<BigRat> rats(std::initializer_list<const char*> xs) {
  std::vector<BigRat> out;
  for (const char* s : xs) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

TEST_CASE("modular polynomial database loads the shipped levels") {
  CHECK(db().levels() == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 37});
  CHECK(db().has(2));
  CHECK(!db().has(23));
  CHECK_THROWS_AS(db().get(23), MissingLevel);

  const BiPoly& phi2 = db().get(2);
  CHECK(phi2.degree_x() == 3);
  CHECK(phi2.degree_y() == 3);
  CHECK(phi2.is_symmetric());
  // Spot-check classical coefficients.
  CHECK(phi2.coeff(3, 0) == 1);
  CHECK(phi2.coeff(3, 3) == 0);
  CHECK(phi2.coeff(2, 2) == -1);
  CHECK(phi2.coeff(1, 1) == 40773375);
  CHECK(phi2.coeff(1, 0) == BigInt(8748000000));
  CHECK(phi2.coeff(0, 0) == BigInt("-157464000000000"));

  for (long level : db().levels()) {
    const BiPoly& phi = db().get(level);
    CHECK(phi.is_symmetric());
    CHECK(phi.degree_x() == level + 1);
    CHECK(phi.coeff(static_cast<int>(level) + 1, 0) == 1);  // monic in X
  }
}

TEST_CASE("database insert validation") {
  ModPolyDB d;
  BiPoly sym;
  sym.set(0, 0, BigInt(1));
  CHECK_THROWS_AS(d.insert(4, sym), DegreeMismatch);  // level must be prime

  BiPoly asym;
  asym.set(3, 0, BigInt(1));
  asym.set(0, 3, BigInt(1));
  asym.set(1, 0, BigInt(5));  // breaks symmetry
  CHECK_THROWS_AS(d.insert(2, asym), ParseError);

  BiPoly wrong;
  wrong.set(2, 0, BigInt(1));
  wrong.set(0, 2, BigInt(1));
  CHECK_THROWS_AS(d.insert(2, wrong), DegreeMismatch);  // degree must be 3
}

TEST_CASE("modular polynomial file parsing errors") {
  auto load_one = [&](const std::string& content) {
    TempDir inner;
    inner.write("phi2.txt", content);
    return load_modpoly_db(inner.dir.string());
  };

  // Well-formed minimal file: Phi_2-shaped placeholder.
  std::string good = "# c\n[3,0] 1\n[0,0] 7\n[2,1] 4\n";
  CHECK(load_one(good).get(2).coeff(1, 2) == 4);  // symmetry closed at load

  CHECK_THROWS_AS(load_one("[3 0] 1\n"), ParseError);        // malformed key
  CHECK_THROWS_AS(load_one("[3,0] x\n"), ParseError);        // malformed coeff
  CHECK_THROWS_AS(load_one("[3,0] 1\n[3,0] 2\n"), ParseError);  // duplicate
  // Conflicting mirror entries.
  CHECK_THROWS_AS(load_one("[3,0] 1\n[2,1] 4\n[1,2] 5\n"), ParseError);
  // Degree must equal level + 1.
  CHECK_THROWS_AS(load_one("[2,0] 1\n[0,0] 3\n"), DegreeMismatch);
  // Exponents out of range.
  CHECK_THROWS_AS(load_one("[33333333333,0] 1\n"), ParseError);
}

TEST_CASE("CM j-invariant table") {
  const auto& cm = cm_j_invariants();
  REQUIRE(cm.size() == 13);
  CHECK(std::is_sorted(cm.begin(), cm.end()));
  CHECK(cm.front() == BigRat(BigInt("-262537412640768000")));
  CHECK(cm.back() == BigRat(16581375));
  CHECK(is_cm_j(BigRat(0)));
  CHECK(is_cm_j(BigRat(1728)));
  CHECK(is_cm_j(BigRat(-3375)));
  CHECK(!is_cm_j(BigRat(-25, 2)));
  CHECK(!is_cm_j(BigRat(1)));
  for (const auto& j : cm) {
    CHECK(is_cm_j(j));
    CHECK(j.get_den() == 1);  // all integral
  }
}

TEST_CASE("prime-level specialization") {
  IntPoly f = specialize(2, BigRat(-25, 2), db());
  CHECK(f.degree() == 3);
  CHECK(f.lc() > 0);
  CHECK(content_and_primitive(f).first == 1);

  // Isogeny symmetry: j1 is a root of Phi_7(x, j0) iff j0 is a root of
  // Phi_7(x, j1). Frozen 7-isogenous pair.
  BigRat ja(351, 4);
  BigRat jb(BigInt("-38575685889"), BigInt(16384));
  auto roots_a = rational_roots(specialize(7, ja, db()));
  auto roots_b = rational_roots(specialize(7, jb, db()));
  CHECK(std::count(roots_a.begin(), roots_a.end(), jb) == 1);
  CHECK(std::count(roots_b.begin(), roots_b.end(), ja) == 1);

  // Certificates for curated entries: a rational p-isogeny shows up as a
  // rational root of the specialized level-p polynomial.
  CHECK(!rational_roots(specialize(11, BigRat(-121), db())).empty());
  CHECK(!rational_roots(specialize(3, BigRat(-25, 2), db())).empty());
  CHECK(!rational_roots(specialize(5, BigRat(-25, 2), db())).empty());
  CHECK(!rational_roots(specialize(37, BigRat(-9317), db())).empty());
  // A generic j admits none.
  CHECK(rational_roots(specialize(11, BigRat(5), db())).empty());

  CHECK_THROWS_AS(specialize(23, BigRat(1), db()), MissingLevel);
}

TEST_CASE("prime-power specialization and factor certificates") {
  BigRat j(-25, 2);
  IntPoly f9 = specialize_prime_power(3, 2, j, db());
  CHECK(f9.degree() == 12);
  CHECK(f9.lc() > 0);
  IntPoly f27 = specialize_prime_power(3, 3, j, db());
  CHECK(f27.degree() == 36);

  // Frozen degree patterns along the 15-isogeny example.
  CHECK(isogeny_field_degrees(9, j, db()).degrees() == std::vector<int>{3, 9});
  CHECK(isogeny_field_degrees(27, j, db()).degrees() == std::vector<int>{9, 27});
  CHECK(isogeny_field_degrees(25, j, db()).degrees() == std::vector<int>{5, 25});
  CHECK(isogeny_field_degrees(4, BigRat(-121), db()).degrees() == std::vector<int>{6});

  // The level-7 certificate at the 7-isogeny point: degrees 2, 3, 3 and both
  // cubics give the same field.
  auto pat = isogeny_field_degrees(7, BigRat(2268945, 128), db());
  CHECK(pat.degrees() == std::vector<int>{2, 3, 3});
  REQUIRE(pat.parts.size() == 3);
  IntPoly target{-5, -5, 0, 1};
  CHECK(cubic_fields_isomorphic(pat.parts[1].factor, target));
  CHECK(cubic_fields_isomorphic(pat.parts[2].factor, target));

  // Factor degrees always sum to the specialized degree.
  long total = 0;
  for (const auto& part : pat.parts) total += part.degree() * part.multiplicity;
  CHECK(total == 8);

  // Level shape validation.
  CHECK_THROWS_AS(isogeny_field_degrees(6, j, db()), std::invalid_argument);
  CHECK_THROWS_AS(isogeny_field_degrees(1, j, db()), std::invalid_argument);
  CHECK_THROWS_AS(isogeny_field_degrees(16, j, db()), std::invalid_argument);
}

TEST_CASE("prime-power specialization rejects CM inputs") {
  for (const auto& j : cm_j_invariants()) {
    CHECK_THROWS_AS(specialize_prime_power(2, 2, j, db()), CMInput);
  }
  // The unchecked variant runs the same chain; the backtrack division is
  // exact even at a CM point, and the multiplicity structure shows up in the
  // factorization instead.
  IntPoly raw = specialize_prime_power_unchecked(2, 2, BigRat(1728), db());
  CHECK(raw.degree() == 6);
  auto pat = factor_over_Q(raw);
  CHECK(pat.degree_multiset() == std::vector<std::pair<int, int>>{{1, 2}, {2, 2}});
}

TEST_CASE("curve parametrizations") {
  CHECK(all_curves().size() == 7);
  CHECK(curve_by_name("X0_7") != nullptr);
  CHECK(curve_by_name("X0_7")->id == CurveId::X0_7);
  CHECK(curve_by_name("X9") == nullptr);
  CHECK(curve(CurveId::X3).name == "X3");

  // Check values of each map.
  CHECK(curve(CurveId::X3).map.eval(BigRat(0)) == BigRat(1728));
  CHECK(curve(CurveId::X7).map.eval(BigRat(1)) == BigRat(28));
  CHECK(curve(CurveId::X20).map.eval(BigRat(0)) == BigRat(-1188));
  CHECK(curve(CurveId::X0_3).map.eval(BigRat(1)) == BigRat(1792));
  CHECK(curve(CurveId::X0_5).map.eval(BigRat(1)) == BigRat(4096));
  CHECK(curve(CurveId::X0_7).map.eval(BigRat(-4)) == BigRat(351, 4));
  CHECK(curve(CurveId::X0_13).map.eval(BigRat(1)) == BigRat(2101248));

  CHECK_THROWS_AS(curve(CurveId::X7).map.eval(BigRat(0)), PoleError);
  CHECK_THROWS_AS(curve(CurveId::X20).map.eval(BigRat(-1)), PoleError);
  CHECK_THROWS_AS(curve(CurveId::X0_3).map.eval(BigRat(0)), PoleError);
}

TEST_CASE("rational fibers over a j-invariant") {
  // Frozen fibers at the 7-isogeny pair.
  CHECK(fibers_over_j(curve(CurveId::X3), BigRat(351, 4)) ==
        rats({"-81/2", "81/2"}));
  CHECK(fibers_over_j(curve(CurveId::X20), BigRat(351, 4)) == rats({"-3/2", "3"}));
  CHECK(fibers_over_j(curve(CurveId::X20),
                      BigRat(BigInt("-38575685889"), BigInt(16384))) ==
        rats({"-17/16", "31"}));
  CHECK(fibers_over_j(curve(CurveId::X3), BigRat(5)).empty());

  // Round trip: every parameter lies in the fiber over its own image.
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (const auto& c : all_curves()) {
    int done = 0;
    while (done < 5) {
      BigRat t(num(rng), den(rng));
      t.canonicalize();
      BigRat j;
      try {
        j = c.map.eval(t);
      } catch (const PoleError&) {
        continue;
      }
      auto fib = fibers_over_j(c, j);
      CHECK(std::count(fib.begin(), fib.end(), t) == 1);
      CHECK(std::is_sorted(fib.begin(), fib.end()));
      ++done;
    }
  }
}

TEST_CASE("fiber product search") {
  const CurveParam& g = curve(CurveId::X0_7);
  const CurveParam& f = curve(CurveId::X7);
  FiberSearchResult r = fiber_product_search(g, f, 50);
  CHECK(r.height_bound == 50);
  CHECK(r.poles_t == 1);
  CHECK(r.poles_h == 1);
  REQUIRE(r.hits.size() == 2);
  CHECK(r.hits[0].t == BigRat(16, 479));
  CHECK(r.hits[0].h == BigRat(-49, 4));
  CHECK(r.hits[0].j == BigRat(BigInt("-38575685889"), BigInt(16384)));
  CHECK(!r.hits[0].cm);
  CHECK(r.hits[1].t == BigRat(2, 3));
  CHECK(r.hits[1].h == BigRat(-4));
  CHECK(r.hits[1].j == BigRat(351, 4));
  CHECK(!r.hits[1].cm);

  // Identical output at any parallelism level.
  FiberSearchResult rp = fiber_product_search(g, f, 50, 3);
  REQUIRE(rp.hits.size() == r.hits.size());
  for (std::size_t i = 0; i < r.hits.size(); ++i) {
    CHECK(rp.hits[i].t == r.hits[i].t);
    CHECK(rp.hits[i].h == r.hits[i].h);
    CHECK(rp.hits[i].j == r.hits[i].j);
    CHECK(rp.hits[i].cm == r.hits[i].cm);
  }
  CHECK(rp.poles_t == r.poles_t);
  CHECK(rp.poles_h == r.poles_h);

  // The H = 50 run above already shows the enumeration is two-sided: the
  // first hit has t of height 479, reachable only through h = -49/4 of
  // height 49. Below both heights, only the small hit remains.
  FiberSearchResult r12 = fiber_product_search(g, f, 12);
  REQUIRE(r12.hits.size() == 1);
  CHECK(r12.hits[0].t == BigRat(2, 3));

  // Frozen slice of the X0_3 x X7 search at H = 20, with CM flags.
  FiberSearchResult r3 = fiber_product_search(curve(CurveId::X0_3), f, 20);
  REQUIRE(r3.hits.size() == 3);
  CHECK(r3.hits[0].t == BigRat(-2, 11));
  CHECK(r3.hits[0].h == BigRat(-36));
  CHECK(r3.hits[0].j == BigRat(-35937, 4));
  CHECK(!r3.hits[0].cm);
  CHECK(r3.hits[1].t == BigRat(1, 8));
  CHECK(r3.hits[1].h == BigRat(-27));
  CHECK(r3.hits[1].j == 0);
  CHECK(r3.hits[1].cm);
  CHECK(r3.hits[2].t == BigRat(1, 8));
  CHECK(r3.hits[2].h == BigRat(-3));
  CHECK(r3.hits[2].j == 0);
  CHECK(r3.hits[2].cm);

  // Growing the bound only adds hits.
  FiberSearchResult r8 = fiber_product_search(curve(CurveId::X0_3), f, 8);
  for (const auto& hit : r8.hits) {
    bool found = false;
    for (const auto& big : r3.hits)
      if (big.t == hit.t && big.h == hit.h) found = true;
    CHECK(found);
  }
}

TEST_CASE("two-division cubic") {
  IntPoly c = two_division_cubic(BigRat(-25, 2));
  CHECK(c == IntPoly{4846944400, -1044300, 0, 1});
  CHECK_THROWS_AS(two_division_cubic(BigRat(0)), SingularJ);
  CHECK_THROWS_AS(two_division_cubic(BigRat(1728)), SingularJ);

  // For y^3 + Ay + B built from j0, the j-invariant identity
  // 1728 * 4A^3 / (4A^3 + 27B^2) = j0 must hold.
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 40);
  int done = 0;
  while (done < 25) {
    BigRat j0(num(rng), den(rng));
    j0.canonicalize();
    if (j0 == 0 || j0 == 1728) continue;
    IntPoly cub = two_division_cubic(j0);
    REQUIRE(cub.degree() == 3);
    CHECK(cub.lc() == 1);
    CHECK(cub[2] == 0);
    BigRat A(cub[1]), B(cub[0]);
    BigRat fourA3 = 4 * A * A * A;
    BigRat denom = fourA3 + 27 * B * B;
    REQUIRE(denom != 0);
    BigRat jj = 1728 * fourA3 / denom;
    jj.canonicalize();
    CHECK(jj == j0);
    ++done;
  }
}

TEST_CASE("j-invariant table load, serialize, validate") {
  JTable t = load_jtable("data/jtable.txt");
  CHECK(t.cm_j.size() == 13);
  CHECK(t.iso11_j.size() == 2);
  CHECK(t.iso15_j.size() == 4);
  CHECK(t.iso17_j.size() == 2);
  CHECK(t.iso19_j.empty());
  CHECK(t.iso21_j.size() == 4);
  CHECK(t.iso37_j.size() == 2);
  CHECK(t.iso15_j[2] == BigRat(-25, 2));
  CHECK(t.iso37_j[0] == BigRat(-9317));

  // Byte-exact round trip against the shipped file.
  CHECK(serialize_jtable(t) == read_file("data/jtable.txt"));

  // Round trip through a fresh file.
  TempDir tmp;
  std::string path = tmp.write("jtable.txt", serialize_jtable(t));
  JTable t2 = load_jtable(path);
  CHECK(serialize_jtable(t2) == serialize_jtable(t));

  // Full mathematical validation of the shipped table.
  validate_jtable(t, db());
}

TEST_CASE("j-invariant table structural errors") {
  std::string good = read_file("data/jtable.txt");
  TempDir tmp;
  auto expect_parse_error = [&](const std::string& content, const char* tag) {
    INFO(tag);
    CHECK_THROWS_AS(load_jtable(tmp.write(tag, content)), ParseError);
  };

  CHECK_THROWS_AS(load_jtable("data/does-not-exist.txt"), ParseError);

  // Remove the iso19 section header entirely.
  std::string missing = good;
  auto pos = missing.find("[iso19_j]");
  REQUIRE(pos != std::string::npos);
  missing.erase(pos - 1, std::string("[iso19_j]").size() + 2);
  expect_parse_error(missing, "missing-section");

  expect_parse_error(good + "\n[cm_j]\n", "duplicate-section");
  expect_parse_error(good + "\n[mystery]\n", "unknown-section");
  expect_parse_error(good + "not-a-rational\n", "bad-entry");
  expect_parse_error("5/1\n" + good, "entry-before-section");

  // Dropping one CM entry (the full "0/1" line) breaks the fixed cardinality.
  std::string short_cm = good;
  auto zpos = short_cm.find("\n0/1\n");
  REQUIRE(zpos != std::string::npos);
  short_cm.erase(zpos + 1, 4);
  expect_parse_error(short_cm, "wrong-count");
}

TEST_CASE("j-invariant table mathematical validation") {
  JTable good = load_jtable("data/jtable.txt");

  // Tampered CM list.
  JTable bad_cm = good;
  bad_cm.cm_j[7] = BigRat(1, 2);
  CHECK_THROWS_AS(validate_jtable(bad_cm, db()), JTableInvalid);

  // CM value smuggled into an isogeny list.
  JTable bad_cm_entry = good;
  bad_cm_entry.iso15_j[0] = BigRat(0);
  CHECK_THROWS_AS(validate_jtable(bad_cm_entry, db()), JTableInvalid);

  // A j-invariant with no rational 11-isogeny.
  JTable bad_iso = good;
  bad_iso.iso11_j[0] = BigRat(1);
  CHECK_THROWS_AS(validate_jtable(bad_iso, db()), JTableInvalid);
}
