#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "exotic/search.hpp"
#include "test_util.hpp"

using namespace exotic;
using exotic::testutil::q;

TEST_SUITE("search") {

TEST_CASE("integer search at small bounds") {
  auto outcome = search_integer_exotic(120);
  CHECK(outcome.exotic_found.empty());
  REQUIRE(outcome.near_misses.size() == 1);
  CHECK(outcome.near_misses[0].a == 3);
  CHECK(outcome.near_misses[0].b == 8);
  CHECK(outcome.near_misses[0].c == 120);
  CHECK(outcome.near_misses[0].c_gt_4ab);

  auto tiny = search_integer_exotic(10);
  CHECK(tiny.exotic_found.empty());
  CHECK(tiny.near_misses.empty());

  CHECK_THROWS_AS(search_integer_exotic(2), std::domain_error);
}

TEST_CASE("near misses satisfy the quadruple property and fail only abc+1") {
  auto outcome = search_integer_exotic(5000);
  CHECK(outcome.exotic_found.empty());
  CHECK_FALSE(outcome.near_misses.empty());
  for (const IntegerNearMiss& miss : outcome.near_misses) {
    REQUIRE(verify_diophantine_with_one(miss.a, miss.b, miss.c));
    auto result = verify_exotic(miss.a, miss.b, miss.c);
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.failures == std::vector<ExoticCondition>{ExoticCondition::abc_plus_one});
    REQUIRE(miss.c_gt_4ab);  // observed on every output so far
  }
  CHECK(outcome.stats.quadruples ==
        static_cast<long>(outcome.near_misses.size() + outcome.exotic_found.size()));
}

TEST_CASE("integer search matches the naive oracle at c_max = 200") {
  auto outcome = search_integer_exotic(200);
  auto oracle = exotic::testutil::naive_integer_scan(200);

  std::vector<std::array<long, 3>> pruned_near;
  for (const IntegerNearMiss& miss : outcome.near_misses) {
    pruned_near.push_back({miss.a, miss.b, miss.c});
  }
  std::vector<std::array<long, 3>> oracle_near;
  std::vector<std::array<long, 3>> oracle_exotic;
  for (const auto& t : oracle) {
    (t.abc1_square ? oracle_exotic : oracle_near).push_back({t.a, t.b, t.c});
  }
  CHECK(pruned_near == oracle_near);
  CHECK(outcome.exotic_found.empty());
  CHECK(oracle_exotic.empty());
}

TEST_CASE("integer search is independent of the thread count") {
  auto reference = search_integer_exotic(3000, 1);
  for (int threads : {2, 3, 8}) {
    auto outcome = search_integer_exotic(3000, threads);
    REQUIRE(outcome.near_misses.size() == reference.near_misses.size());
    for (std::size_t i = 0; i < reference.near_misses.size(); ++i) {
      REQUIRE(outcome.near_misses[i].a == reference.near_misses[i].a);
      REQUIRE(outcome.near_misses[i].b == reference.near_misses[i].b);
      REQUIRE(outcome.near_misses[i].c == reference.near_misses[i].c);
    }
    REQUIRE(outcome.stats.pairs_examined == reference.stats.pairs_examined);
    REQUIRE(outcome.stats.quadruples == reference.stats.quadruples);
  }
}

TEST_CASE("rational search rediscovers the published triple") {
  auto triples = search_rational_exotic(29);
  bool found = false;
  for (const ExoticTriple& t : triples) {
    if (t.a == q("312/529") && t.b == q("495/529") && t.c == q("8")) {
      found = true;
    }
  }
  CHECK(found);
  for (const ExoticTriple& t : triples) {
    // Construction invariant: one labeling of the sorted entries has
    // r3(1, ab, c) = 0 (sorting may move the extension element around).
    const bool regular = r3_eval(1, t.a * t.b, t.c) == 0 ||
                         r3_eval(1, t.a * t.c, t.b) == 0 ||
                         r3_eval(1, t.b * t.c, t.a) == 0;
    REQUIRE(regular);
    REQUIRE(verify_exotic(t.a, t.b, t.c).ok());
  }
  // deduplicated and deterministically ordered
  for (std::size_t i = 1; i < triples.size(); ++i) {
    REQUIRE(triple_order_less(triples[i - 1], triples[i]));
  }
}

TEST_CASE("rational search is empty below the reachable heights") {
  CHECK(search_rational_exotic(2).empty());
}

TEST_CASE("rational search is independent of the thread count") {
  auto reference = search_rational_exotic(12, 1);
  for (int threads : {2, 5}) {
    auto triples = search_rational_exotic(12, threads);
    REQUIRE(triples.size() == reference.size());
    for (std::size_t i = 0; i < triples.size(); ++i) {
      REQUIRE(same_triple_values(triples[i], reference[i]));
      REQUIRE(triples[i].certificate == reference[i].certificate);
    }
  }
}

TEST_CASE("case1 scan classifies the s = 1 solutions as degenerate") {
  auto hits = case1_scan(1);
  REQUIRE(hits.size() == 4);  // s = 1 and s = -1, two roots each
  std::map<Rat, std::vector<Rat>> roots_by_s;
  for (const Case1Hit& hit : hits) {
    CHECK(hit.classification == Case1Class::zero_entry);  // a = r^2 - 1 = 0
    roots_by_s[hit.s].push_back(hit.c);
  }
  const std::vector<Rat> expected = {q("-1"), q("3")};  // c^2 - 2c - 3 = (c-3)(c+1)
  CHECK(roots_by_s[q("1")] == expected);
  CHECK(roots_by_s[q("-1")] == expected);
}

TEST_CASE("case1 scan finds nothing for s = 2") {
  // quadratic 16c^2 + 40c + 105 has negative discriminant
  for (const Case1Hit& hit : case1_scan(2)) {
    REQUIRE(hit.s != 2);
    REQUIRE(hit.s != -2);
  }
}

TEST_CASE("case1 scan is even in s") {
  auto hits = case1_scan(10);
  std::map<Rat, std::vector<Rat>> roots_by_s;
  for (const Case1Hit& hit : hits) {
    roots_by_s[hit.s].push_back(hit.c);
  }
  for (const auto& [s, roots] : roots_by_s) {
    REQUIRE(roots_by_s.count(Rat(-s)) == 1);
    REQUIRE(roots_by_s.at(Rat(-s)) == roots);
  }
}

TEST_CASE("case1 scan reports no nondegenerate solutions at height 12") {
  for (const Case1Hit& hit : case1_scan(12)) {
    REQUIRE(hit.classification != Case1Class::nondegenerate_exotic);
  }
}

}  // TEST_SUITE
