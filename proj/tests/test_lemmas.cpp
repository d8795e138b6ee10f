#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blowup/forbidden.hpp"
#include "blowup/lemmas.hpp"

using namespace blowup;

TEST_CASE("l1") {
  auto rep = verify_lemma_l1(FamilyParam(6), 10);
  CHECK(rep.verified());
  CHECK(rep.stats["compatible"] == 6);
  CHECK(compatible_with_zero(FamilyParam(6), {0, -1, 1}));
  CHECK_FALSE(compatible_with_zero(FamilyParam(6), {0, -2, 0}));
  CHECK_THROWS_AS(verify_lemma_l1(FamilyParam(6), 7), std::invalid_argument);
}

TEST_CASE("trzy") {
  auto rep = verify_corollary_trzy(FamilyParam(5), 9);
  CHECK(rep.verified());
  CHECK(rep.stats["max_clique"] == 3);
}

TEST_CASE("gl") {
  CHECK(verify_lemma_gl(FamilyParam(5), 10, 13).verified());
  CHECK(is_forbidden(FamilyParam(5), {3, -2, 1}));
  CHECK_FALSE(is_forbidden(FamilyParam(5), {2, 2, 2}));
  CHECK_FALSE(brute_force_is_forbidden(FamilyParam(5), {2, 2, 2}, 9));
  CHECK(compatible_with_zero(FamilyParam(5), {2, 2, 2}));
}

TEST_CASE("8") {
  auto rep = verify_lemma_8(FamilyParam(6));
  CHECK(rep.verified());
  CHECK(rep.stats["max_clique"] <= 8);
  CHECK(rep.stats["case1_clique"] == 1);
  CHECK(rep.stats["case2_clique"] == 1);
  CHECK_THROWS(verify_lemma_8(FamilyParam(3)));
}

TEST_CASE("classify_high") {
  FamilyParam n(5);
  CHECK(classify_high(n, {7, 1, 6}) == HighType::Type1);
  CHECK(classify_high(n, {7, 0, 5}) == HighType::Forbidden);
  CHECK(classify_high(n, {3, 0, 0}) == HighType::NotHigh);
  CHECK(classify_high(n, {7, 6, 1}) == HighType::Type2);
  // (7,1,6) is not forbidden in either direction by the brute-force check
  CHECK_FALSE(brute_force_is_forbidden(n, {7, 1, 6}, 14));
  CHECK_FALSE(brute_force_is_forbidden(n, {-7, -1, -6}, 14));
  // (7,0,5) fails through its negative
  CHECK(brute_force_is_forbidden(n, {-7, 0, -5}, 14));
}

TEST_CASE("jeden and jedwE") {
  CHECK(verify_lemma_jeden(FamilyParam(5), 15).verified());
  auto rep = verify_lemma_jedwE(FamilyParam(5), 10);
  CHECK(rep.verified());
  CHECK(rep.stats["type1"] > 0);
  CHECK(rep.stats["type2"] > 0);
  CHECK_THROWS_AS(verify_lemma_jedwE(FamilyParam(3), 9), std::invalid_argument);
  // a mixed pair differs by a coordinate <= -n+2
  FamilyParam n(5);
  DivisorClass t1{7, 1, 6}, t2{8, 7, 1};
  auto diff = t2 - t1;
  CHECK(std::min(diff.b, diff.c) <= -5 + 2);
  CHECK_FALSE(is_compatible(n, t1, t2).compatible());
}

TEST_CASE("bound") {
  auto rep = verify_lemma_bound(FamilyParam(5), 12);
  CHECK(rep.verified());
  CHECK(rep.stats["max_excess"] <= 2);
  FamilyParam n(5);
  // a2 > a1 with a2 - c2 < a1 - c1: the difference has b = 0 and is forbidden
  DivisorClass x{6, 1, 4}, y{8, 1, 8};
  auto diff = y - x;
  CHECK(diff.b == 0);
  CHECK_FALSE(compatible_with_zero(n, diff));
  for (std::int64_t a = 6; a <= 12; ++a)
    for (std::int64_t c = a - 5; c <= a + 3; ++c)
      if (classify_high(n, {a, 1, c}) == HighType::Type1)
        CHECK((a - c >= 0 && a - c <= 2));
}

TEST_CASE("pom") {
  CHECK(verify_lemma_pom(FamilyParam(6), 2, 18).verified());
  // c_L - c_B >= a_L - 2 - a_B > n + k - 2 - k = n - 2
  std::int64_t n = 6, k = 2;
  for (std::int64_t a_l = n + k; a_l <= 3 * n; ++a_l)
    for (std::int64_t c_l = a_l - 2; c_l <= a_l; ++c_l)
      for (std::int64_t a_b = 0; a_b < k; ++a_b)
        for (std::int64_t c_b = a_b - 1; c_b <= a_b; ++c_b)
          CHECK(c_l - c_b > n - 2);
  CHECK_THROWS(verify_lemma_pom(FamilyParam(6), 0, 18));
  CHECK_THROWS(verify_lemma_pom(FamilyParam(6), 8, 18));
}

TEST_CASE("uwa") {
  auto rep = verify_remark_k(FamilyParam(5), 15);
  CHECK(rep.verified());
  CHECK(rep.stats["max_k"] <= 6);
  // a high difference with b = 0 survives only with c = 1, which the box rules out
  FamilyParam n(5);
  for (std::int64_t a = 6; a <= 15; ++a)
    for (std::int64_t c = -3; c <= a + 2; ++c) {
      auto t = classify_high(n, {a, 0, c});
      CHECK((t == HighType::Forbidden || t == HighType::Type2));
      if (t == HighType::Type2)
        CHECK(c == 1);
    }
  CHECK(classify_high(n, {6, 0, 1}) == HighType::Forbidden);
}

TEST_CASE("theorem arithmetic") {
  auto t = theorem_bound(21, 1);
  CHECK(t.chain == Rational(185, 3));
  CHECK(t.closed_form == Rational(185, 3));
  CHECK(t.rank == 62);
  CHECK(t.below_rank());
  auto t100 = theorem_bound(100, 1);
  CHECK(t100.closed_form == Rational(817, 3));
  CHECK(t100.below_rank());
  CHECK_FALSE(theorem_bound(20, 1).below_rank());
  // observation: the low cap is below 3n-1 exactly from n = 14 on
  CHECK_FALSE(theorem_bound(13, 0).low_cap < Rational(38));
  CHECK(theorem_bound(14, 0).low_cap < Rational(41));
  CHECK(theorem_threshold(1000) == 21);
  CHECK(low_cap_threshold(1000) == 14);
  CHECK(verify_theorem(200).verified());
  CHECK_THROWS(theorem_bound(5, 7));
}

TEST_CASE("run_lemma dispatch") {
  std::string why;
  CHECK_FALSE(lemma_applies("jedwE", FamilyParam(3), why));
  CHECK(why == "requires n > 3");
  CHECK_FALSE(lemma_applies("nope", FamilyParam(5), why));
  CHECK_THROWS_AS(run_lemma("bound", FamilyParam(3)), std::invalid_argument);
  auto rep = run_lemma("pom", FamilyParam(4));
  CHECK(rep.verified());
  CHECK(rep.stats["k_values"] == 5);
}

TEST_CASE("report JSON round trip") {
  auto rep = verify_lemma_l1(FamilyParam(4), 6);
  rep.counterexamples.push_back({{{1, 2, 3}}, "synthetic"});
  nlohmann::json j = rep;
  auto back = j.get<LemmaReport>();
  CHECK(back.lemma_id == rep.lemma_id);
  CHECK(back.n == rep.n);
  CHECK(back.cases_checked == rep.cases_checked);
  CHECK(back.stats == rep.stats);
  REQUIRE(back.counterexamples.size() == 1);
  CHECK(back.counterexamples[0].divisors[0] == DivisorClass{1, 2, 3});
  CHECK(nlohmann::json(back) == j);
}
