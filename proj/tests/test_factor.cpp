#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iso/factor.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace iso;

namespace {

// A small pool of pairwise distinct irreducible polynomials over Q.
const std::vector<IntPoly>& irreducible_pool() {
  static const std::vector<IntPoly> pool = {
      IntPoly{-1, 1},        // x - 1
      IntPoly{3, 2},         // 2x + 3
      IntPoly{1, 0, 1},      // x^2 + 1
      IntPoly{-2, 0, 1},     // x^2 - 2
      IntPoly{1, 1, 1},      // x^2 + x + 1
      IntPoly{-2, 0, 0, 1},  // x^3 - 2
      IntPoly{-5, -5, 0, 1}, // x^3 - 5x - 5
  };
  return pool;
}

}  // namespace

TEST_CASE("mod-p factorization on fixed inputs") {
  // x^2 + 1 splits mod 5 and stays irreducible mod 3.
  auto f5 = factor_mod_p(IntPoly{1, 0, 1}, 5);
  REQUIRE(f5.size() == 2);
  std::vector<int> degs;
  for (const auto& part : f5)
    for (int i = 0; i < part.multiplicity; ++i) degs.push_back(part.factor.degree());
  CHECK(degs == std::vector<int>{1, 1});

  auto f3 = factor_mod_p(IntPoly{1, 0, 1}, 3);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].factor.degree() == 2);
  CHECK(f3[0].multiplicity == 1);

  // Repeated factors carry multiplicity: (x-1)^2 (x+1) mod 7.
  auto fr = factor_mod_p(IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1}, 7);
  long total = 0;
  for (const auto& part : fr) total += part.multiplicity * part.factor.degree();
  CHECK(total == 3);
  bool saw_double = false;
  for (const auto& part : fr)
    if (part.multiplicity == 2 && part.factor.degree() == 1) saw_double = true;
  CHECK(saw_double);
}

TEST_CASE("mod-p factorization rejects bad primes") {
  CHECK_THROWS_AS(factor_mod_p(IntPoly{1, 1}, 6), BadPrime);
  CHECK_THROWS_AS(factor_mod_p(IntPoly{1, 1}, 1), BadPrime);
  // p dividing the leading coefficient is rejected.
  CHECK_THROWS_AS(factor_mod_p(IntPoly{1, 5}, 5), BadPrime);
}

TEST_CASE("mod-p factorization is seed independent and multiplies back") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<long> dc(-20, 20);
  for (long p : {2L, 3L, 5L, 13L}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BigInt> c(6);
      for (auto& v : c) v = dc(rng);
      IntPoly f(c);
      if (f.is_zero() || f.degree() < 1) continue;
      if (f.lc() % p == 0) continue;
      auto fa = factor_mod_p(f, p, 1);
      auto fb = factor_mod_p(f, p, 99);
      REQUIRE(fa.size() == fb.size());
      for (std::size_t i = 0; i < fa.size(); ++i) {
        CHECK(fa[i].factor == fb[i].factor);
        CHECK(fa[i].multiplicity == fb[i].multiplicity);
      }
      long degsum = 0;
      for (const auto& part : fa) {
        CHECK(part.factor.lc() == 1);
        degsum += part.multiplicity * part.factor.degree();
      }
      CHECK(degsum == f.degree());
    }
  }
}

TEST_CASE("factorization over Q on fixed inputs") {
  // x^4 - 1 = (x-1)(x+1)(x^2+1).
  auto p = factor_over_Q(IntPoly{-1, 0, 0, 0, 1});
  CHECK(p.content == 1);
  CHECK(p.degrees() == std::vector<int>{1, 1, 2});
  CHECK(p.product_of_factors() == IntPoly{-1, 0, 0, 0, 1});

  // Content is split off: 6x^2 - 6 = 6 (x-1)(x+1).
  auto q = factor_over_Q(IntPoly{-6, 0, 6});
  CHECK(q.content == 6);
  CHECK(q.degrees() == std::vector<int>{1, 1});

  // x^4 - 10x^2 + 1 is irreducible over Q although it splits mod every
  // prime; exercises the recombination step.
  auto sw = factor_over_Q(IntPoly{1, 0, -10, 0, 1});
  CHECK(sw.degrees() == std::vector<int>{4});

  // Multiplicity bookkeeping: (x^2+1)^2 (x-3).
  auto m = factor_over_Q(IntPoly{1, 0, 1} * IntPoly{1, 0, 1} * IntPoly{-3, 1});
  CHECK(m.degree_multiset() == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
  CHECK(m.count_of_degree(2) == 2);
  CHECK(m.count_of_degree(1) == 1);
  CHECK(m.count_of_degree(3) == 0);
}

TEST_CASE("factorization over Q recovers random products") {
  std::mt19937_64 rng(246);
  const auto& pool = irreducible_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> nfac(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    IntPoly prod{1};
    std::vector<int> expect;
    int n = nfac(rng);
    for (int i = 0; i < n; ++i) {
      const IntPoly& f = pool[pick(rng)];
      prod = prod * f;
      expect.push_back(f.degree());
    }
    std::sort(expect.begin(), expect.end());
    auto pat = factor_over_Q(prod);
    CHECK(pat.degrees() == expect);
    IntPoly back = pat.product_of_factors();
    // content * product == input
    CHECK(pat.content.get_den() == 1);
    CHECK(back.scaled(BigInt(pat.content.get_num())) == prod);
    // Deterministic in the input, whatever the internal seed.
    auto pat2 = factor_over_Q(prod, 31);
    REQUIRE(pat2.parts.size() == pat.parts.size());
    for (std::size_t i = 0; i < pat.parts.size(); ++i) {
      CHECK(pat.parts[i].factor == pat2.parts[i].factor);
      CHECK(pat.parts[i].multiplicity == pat2.parts[i].multiplicity);
    }
  }
}

TEST_CASE("rational roots") {
  // (2x-1)(3x+5)(x-7): roots sorted ascending.
  IntPoly f = IntPoly{-1, 2} * IntPoly{5, 3} * IntPoly{-7, 1};
  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == BigRat(-5, 3));
  CHECK(roots[1] == BigRat(1, 2));
  CHECK(roots[2] == BigRat(7));

  // Multiplicity repeats the root.
  IntPoly g = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{3, 2};
  auto roots2 = rational_roots(g);
  REQUIRE(roots2.size() == 3);
  CHECK(roots2[0] == BigRat(-3, 2));
  CHECK(roots2[1] == BigRat(1));
  CHECK(roots2[2] == BigRat(1));

  CHECK(rational_roots(IntPoly{1, 0, 1}).empty());
  CHECK(rational_roots(IntPoly{-2, 0, 1}).empty());
}

TEST_CASE("squarefree part") {
  IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
  IntPoly sq = squarefree_part(f);
  CHECK(sq == IntPoly{-1, 1} * IntPoly{2, 1});
  // Already squarefree input is unchanged up to sign/content normalization.
  CHECK(squarefree_part(IntPoly{-2, 0, 1}) == IntPoly{-2, 0, 1});
}

TEST_CASE("absence certificates") {
  // x^4 - 10x^2 + 1 factors as two quadratics mod every odd prime, so degree
  // 1 is certifiably absent while degree 2 stays inconclusive (even though
  // the polynomial is irreducible over Q).
  IntPoly sw{1, 0, -10, 0, 1};
  auto cert1 = certify_absent_degrees(sw, {1});
  CHECK(cert1.verdict == AbsenceVerdict::CertifiedAbsent);
  REQUIRE(cert1.certifying_prime.has_value());
  REQUIRE(*cert1.certifying_prime < cert1.primes_used.size());
  // The certifying pattern really has no sub-multiset summing to 1.
  const auto& pat = cert1.mod_p_patterns[*cert1.certifying_prime];
  for (int d : pat) CHECK(d != 1);

  auto cert2 = certify_absent_degrees(sw, {2});
  CHECK(cert2.verdict == AbsenceVerdict::Inconclusive);
  CHECK(!cert2.certifying_prime.has_value());

  // A polynomial with an actual linear factor can never certify absence of
  // degree 1.
  auto cert3 = certify_absent_degrees(IntPoly{-1, 1} * IntPoly{1, 0, 1}, {1});
  CHECK(cert3.verdict == AbsenceVerdict::Inconclusive);

  // x^2 + 1: no cubic factor; every mod-p pattern sums to 2.
  auto cert4 = certify_absent_degrees(IntPoly{1, 0, 1}, {3});
  CHECK(cert4.verdict == AbsenceVerdict::CertifiedAbsent);
}

TEST_CASE("cubic field isomorphism") {
  // Same field presented three ways: Q(2^(1/3)).
  IntPoly c1{-2, 0, 0, 1};   // x^3 - 2
  IntPoly c2{-16, 0, 0, 1};  // x^3 - 16, root 2*2^(1/3)
  IntPoly c3{-3, 3, -3, 1};  // (x-1)^3 - 2
  CHECK(cubic_fields_isomorphic(c1, c1));
  CHECK(cubic_fields_isomorphic(c1, c2));
  CHECK(cubic_fields_isomorphic(c2, c1));
  CHECK(cubic_fields_isomorphic(c1, c3));

  // Distinct fields.
  CHECK(!cubic_fields_isomorphic(c1, IntPoly{-3, 0, 0, 1}));
  CHECK(!cubic_fields_isomorphic(IntPoly{-1, -1, 0, 1}, IntPoly{-1, 1, 0, 1}));
  CHECK(!cubic_fields_isomorphic(c1, IntPoly{-5, -5, 0, 1}));
  CHECK(cubic_fields_isomorphic(IntPoly{-5, -5, 0, 1}, IntPoly{-5, -5, 0, 1}));

  // Reducible or non-cubic inputs are rejected.
  CHECK_THROWS_AS(cubic_fields_isomorphic(IntPoly{-1, 0, 0, 1}, c1), NotIrreducible);
  CHECK_THROWS_AS(cubic_fields_isomorphic(c1, IntPoly{1, 0, 1}), NotIrreducible);
}

TEST_CASE("factor ordering is canonical") {
  // intpoly_less orders by (degree, coefficient sequence); the parts of a
  // pattern come back sorted.
  IntPoly a = IntPoly{-2, 0, 0, 1} * IntPoly{-1, 1} * IntPoly{1, 0, 1};
  auto pat = factor_over_Q(a);
  REQUIRE(pat.parts.size() == 3);
  for (std::size_t i = 1; i < pat.parts.size(); ++i)
    CHECK(!intpoly_less(pat.parts[i].factor, pat.parts[i - 1].factor));
  CHECK(pat.degrees() == std::vector<int>{1, 2, 3});
}
