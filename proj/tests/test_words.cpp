#include <doctest.h>

#include <random>

#include "metabelian/words.hpp"
#include "test_support.hpp"

using metabelian::GroupWord;
using metabelian::parse_word;
using metabelian::ParseError;
using test_support::random_word;

TEST_CASE("parser handles plain tokens") {
  CHECK(parse_word(3, "g1 g2^-1").letters() == std::vector<int>{1, -2});
  CHECK(parse_word(3, "g1 g1^-1").empty());
  CHECK(parse_word(3, "").empty());
  CHECK(parse_word(12, "g12").letters() == std::vector<int>{12});
}

TEST_CASE("parser expands commutators before reduction") {
  CHECK(parse_word(3, "[g1,g2] g3").letters() == std::vector<int>{1, 2, -1, -2, 3});
  CHECK(parse_word(3, "[g1,g1]").empty());
  // Nested brackets and tokens glued to brackets.
  CHECK(parse_word(3, "[[g1,g2]g3,g1]g1") ==
        GroupWord::commutator(GroupWord::commutator(GroupWord(3, {1}), GroupWord(3, {2})) *
                                  GroupWord(3, {3}),
                              GroupWord(3, {1})) *
            GroupWord(3, {1}));
  CHECK(parse_word(3, "[g1,g2]^-1").letters() == std::vector<int>{2, 1, -2, -1});
}

TEST_CASE("parser reports positions") {
  try {
    parse_word(3, "g1 g5");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  try {
    parse_word(3, "g1 x2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_word(3, "g1^2"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "[g1,g2"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "[g1 g2]"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "g0"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "g1,g2"), ParseError);
}

TEST_CASE("construction reduces freely") {
  GroupWord w(3, {1, 2, -2, -1, 3});
  CHECK(w.letters() == std::vector<int>{3});
  CHECK(GroupWord(3, {1, -1}).empty());
  CHECK_THROWS_AS(GroupWord(3, {4}), std::invalid_argument);
}

TEST_CASE("inverse, product, powers") {
  GroupWord w = parse_word(3, "g1 g2^-1 g3");
  CHECK(w.inverse().letters() == std::vector<int>{-3, 2, -1});
  CHECK((w * w.inverse()).empty());
  CHECK(w.pow(0).empty());
  CHECK(w.pow(2) == w * w);
  CHECK(w.pow(-1) == w.inverse());
}

TEST_CASE("abelianization") {
  CHECK(parse_word(3, "[g1,g2] g3").abelianization() == std::vector<int>{0, 0, 1});
  CHECK(parse_word(3, "g1 g1").abelianization() == std::vector<int>{2, 0, 0});
  CHECK(parse_word(3, "").abelianization() == std::vector<int>{0, 0, 0});
}

TEST_CASE("to_string round-trips through the parser") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    GroupWord w = random_word(rng, 4, 12);
    CHECK(parse_word(4, w.to_string()) == w);
  }
  CHECK(GroupWord(3).to_string() == "");
  CHECK(parse_word(3, "g1 g2^-1").to_string() == "g1 g2^-1");
}
