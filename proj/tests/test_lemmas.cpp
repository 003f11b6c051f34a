#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iso/lemmas.hpp"

#include <string>
#include <vector>

using namespace iso;

namespace {

bool same_content(const VerificationResult& a, const VerificationResult& b) {
  return a.claim_id == b.claim_id && a.mode == b.mode && a.samples == b.samples &&
         a.seed == b.seed && a.checked == b.checked && a.nonvacuous == b.nonvacuous &&
         a.counterexample == b.counterexample && a.passed == b.passed && a.notes == b.notes;
}

}  // namespace

TEST_CASE("power congruence sweep is exhaustive") {
  auto r3 = verify_padic_power(3);
  CHECK(r3.claim_id == "padic-power-p3");
  CHECK(r3.mode == VerificationResult::Mode::Exhaustive);
  CHECK(r3.passed);
  CHECK(!r3.counterexample.has_value());
  CHECK(r3.checked == 6561);  // 9^4 matrices I + 3*(a b; c d)
  CHECK(r3.nonvacuous == 6561);
  CHECK(r3.notes.find("6561") != std::string::npos);

  auto r5 = verify_padic_power(5);
  CHECK(r5.passed);
  CHECK(r5.checked == 390625);  // 25^4
}

TEST_CASE("order bounds for lifted subgroups") {
  for (auto [p, n, m, k] : std::vector<std::array<int, 4>>{
           {2, 2, 1, 1}, {3, 2, 1, 1}, {3, 3, 2, 1}}) {
    auto r = verify_lift_bound(p, n, m, k, 120, 7);
    CHECK(r.claim_id == "lift-bound-p" + std::to_string(p) + "-n" + std::to_string(n) + "-m" +
                            std::to_string(m) + "-k" + std::to_string(k));
    CHECK(r.mode == VerificationResult::Mode::Randomized);
    CHECK(r.passed);
    CHECK(r.samples == 120);
    CHECK(r.seed == 7);
    CHECK(r.checked == 120);
    CHECK(r.nonvacuous > 0);  // the sampler targets the hypothesis class
    CHECK(r.nonvacuous <= r.checked);
  }
}

TEST_CASE("kernel triangularity suite") {
  auto r = verify_kernel_triangularity(3, 3, 80, 9);
  CHECK(r.claim_id == "kernel-triangularity-p3-n3");
  CHECK(r.passed);
  CHECK(r.nonvacuous > 0);
}

TEST_CASE("mod-2 order bound suite") {
  for (int n : {2, 3, 4}) {
    auto r = verify_mod2_bound(n, 80, 7);
    CHECK(r.claim_id == "mod2-bound-n" + std::to_string(n));
    CHECK(r.passed);
    CHECK(r.nonvacuous > 0);
  }
}

TEST_CASE("uppertriangular generation mod 3") {
  auto r = verify_borel_generation();
  CHECK(r.claim_id == "borel-generation");
  CHECK(r.mode == VerificationResult::Mode::Exhaustive);
  CHECK(r.passed);
  // The six trace-zero units together with +-I generate the order-12 group;
  // without +-I the closure already has order 12 as well.
  CHECK(r.notes == "closure without +-I has order 12");
}

TEST_CASE("index counting identities") {
  auto r = verify_index_arithmetic();
  CHECK(r.claim_id == "index-arithmetic");
  CHECK(r.passed);
  CHECK(r.notes == "Borel index at 5^4 = 750");
}

TEST_CASE("affine dichotomy enumerations") {
  // Distinct subgroup counts of AGL1(F_ell), frozen from the enumeration.
  const std::vector<std::pair<long, long>> counts = {{3, 6}, {5, 14}, {7, 26}};
  for (auto [ell, n_subgroups] : counts) {
    auto r = verify_agl_dichotomy(ell);
    CHECK(r.claim_id == "agl-dichotomy-l" + std::to_string(ell));
    CHECK(r.mode == VerificationResult::Mode::Exhaustive);
    CHECK(r.passed);
    CHECK(r.notes.find(std::to_string(n_subgroups) + " distinct subgroups") == 0);
  }
}

TEST_CASE("lift enumeration suites") {
  for (long ell : {2L, 3L}) {
    for (int n : {1, 2}) {
      auto r = verify_lifts_lemma(ell, n, 40, 3);
      CHECK(r.claim_id == "lifts-l" + std::to_string(ell) + "-n" + std::to_string(n));
      CHECK(r.passed);
      CHECK(!r.counterexample.has_value());
    }
  }
}

TEST_CASE("standard suite list and determinism") {
  const std::vector<std::string> expected_ids = {
      "padic-power-p3",
      "padic-power-p5",
      "lift-bound-p2-n2-m1-k1",
      "lift-bound-p2-n3-m1-k1",
      "lift-bound-p3-n2-m1-k1",
      "lift-bound-p5-n2-m1-k1",
      "lift-bound-p3-n3-m2-k1",
      "kernel-triangularity-p3-n3",
      "mod2-bound-n2",
      "mod2-bound-n3",
      "mod2-bound-n4",
      "borel-generation",
      "index-arithmetic",
      "agl-dichotomy-l3",
      "agl-dichotomy-l5",
      "agl-dichotomy-l7",
      "agl-dichotomy-l11",
      "agl-dichotomy-l13",
      "lifts-l2-n1",
      "lifts-l2-n2",
      "lifts-l3-n1",
      "lifts-l3-n2",
      "lifts-l5-n1",
      "lifts-l5-n2",
  };

  auto a = run_standard_suites(60, 5, 1);
  REQUIRE(a.size() == expected_ids.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].claim_id == expected_ids[i]);
    CHECK(a[i].passed);
  }

  // Same (samples, seed) reproduces every result, including with a different
  // parallelism level; elapsed_seconds is the only field allowed to vary.
  auto b = run_standard_suites(60, 5, 1);
  auto c = run_standard_suites(60, 5, 3);
  REQUIRE(b.size() == a.size());
  REQUIRE(c.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(same_content(a[i], b[i]));
    CHECK(same_content(a[i], c[i]));
  }
}
