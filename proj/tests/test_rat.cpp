#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "exotic/rat.hpp"
#include "test_util.hpp"

using namespace exotic;
using exotic::testutil::q;

TEST_SUITE("rat") {

TEST_CASE("int_sqrt on pinned values") {
  auto zero = int_sqrt(0);
  CHECK(zero.root == 0);
  CHECK(zero.exact);

  // 2881 = 3*8*120 + 1 sits between 53^2 = 2809 and 54^2 = 2916.
  auto near = int_sqrt(2881);
  CHECK(near.root == 53);
  CHECK_FALSE(near.exact);

  // numerator of abc+1 for the triple {8, 312/529, 495/529}
  auto exact = int_sqrt(1515361);
  CHECK(exact.root == 1231);
  CHECK(exact.exact);

  CHECK_THROWS_AS(int_sqrt(-1), std::domain_error);
}

TEST_CASE("int_sqrt agrees with a linear-scan oracle up to 10^6") {
  long root = 0;
  for (long n = 0; n <= 1'000'000; ++n) {
    if ((root + 1) * (root + 1) <= n) {
      ++root;
    }
    auto got = int_sqrt(n);
    REQUIRE(got.root == root);
    REQUIRE(got.exact == (root * root == n));
  }
}

TEST_CASE("rat_sqrt on pinned values") {
  CHECK(*rat_sqrt(q("25/4")) == q("5/2"));
  // ab+1 for the triple {8, 312/529, 495/529}: 8*312/529 + 1 = 3025/529
  CHECK(q("8") * q("312/529") + 1 == q("3025/529"));
  CHECK(*rat_sqrt(q("3025/529")) == q("55/23"));
  CHECK_FALSE(rat_sqrt(q("2881")).has_value());
  CHECK_FALSE(rat_sqrt(q("-1")).has_value());
  CHECK(*rat_sqrt(q("0")) == 0);
}

TEST_CASE("rat_sqrt inverts squaring") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const long num = static_cast<long>(rng() % 2'000'001) - 1'000'000;
    const long den = static_cast<long>(rng() % 1'000'000) + 1;
    Rat value = make_rat(num, den);
    auto root = rat_sqrt(Rat(value * value));
    REQUIRE(root.has_value());
    CHECK(*root == abs(value));
  }
}

TEST_CASE("height") {
  CHECK(height(q("312/529")) == 529);
  CHECK(height(q("8")) == 8);
  CHECK(height(q("-3/7")) == 7);
  CHECK(height(q("0")) == 1);
}

TEST_CASE("enumerate_rats pinned prefixes") {
  const std::vector<Rat> one = enumerate_rats(1);
  REQUIRE(one.size() == 3);
  CHECK(one[0] == 0);
  CHECK(one[1] == 1);
  CHECK(one[2] == -1);

  const std::vector<Rat> two = enumerate_rats(2);
  REQUIRE(two.size() == 7);
  CHECK(two[3] == q("1/2"));
  CHECK(two[4] == q("-1/2"));
  CHECK(two[5] == 2);
  CHECK(two[6] == -2);
}

TEST_CASE("enumerate_rats matches brute force up to height 50") {
  for (long h : {1L, 2L, 3L, 10L, 50L}) {
    const std::vector<Rat> fast = enumerate_rats(h);
    std::set<Rat> brute;
    for (long num = -h; num <= h; ++num) {
      for (long den = 1; den <= h; ++den) {
        Rat value = make_rat(num, den);
        if (height(value) <= h) {
          brute.insert(value);
        }
      }
    }
    REQUIRE(fast.size() == brute.size());  // no duplicates, same extent
    std::set<Rat> dedup(fast.begin(), fast.end());
    REQUIRE(dedup == brute);
    for (const Rat& value : fast) {
      REQUIRE(height(value) <= h);
    }
  }
}

TEST_CASE("membership by height") {
  auto contains = [](const std::vector<Rat>& values, const Rat& target) {
    for (const Rat& value : values) {
      if (value == target) {
        return true;
      }
    }
    return false;
  };
  CHECK_FALSE(contains(enumerate_rats(28), q("29/23")));
  CHECK(contains(enumerate_rats(29), q("29/23")));
}

TEST_CASE("text format round trip") {
  for (const char* text : {"0", "1", "-1", "312/529", "-78374557/87628321", "8"}) {
    CHECK(rat_to_string(parse_rat(text)) == text);
  }
  // lenient parse, canonical emit
  CHECK(rat_to_string(parse_rat("2/4")) == "1/2");
  CHECK(rat_to_string(parse_rat("-0")) == "0");
  CHECK(rat_to_string(parse_rat("012")) == "12");
}

TEST_CASE("malformed rationals rejected") {
  for (const char* text : {"", "-", "1/0", "a", "1/2/3", "+5", " 5", "5 ", "1/-2", "1.5"}) {
    CAPTURE(text);
    CHECK_FALSE(try_parse_rat(text).has_value());
  }
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("canonical form invariants") {
  Rat value = make_rat(-4, -6);
  CHECK(value.get_num() == 2);
  CHECK(value.get_den() == 3);
  CHECK(make_rat(0, 5).get_den() == 1);
  CHECK(enumerate_rats(1).at(0).get_den() == 1);
}

TEST_CASE("enumerate_rats rejects nonpositive bound") {
  CHECK_THROWS_AS(enumerate_rats(0), std::domain_error);
}

}  // TEST_SUITE
