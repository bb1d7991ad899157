#include "doctest.h"

#include "oracles.hpp"
#include "sylv/error.hpp"
#include "sylv/monoid.hpp"
#include "sylv/shift_graph.hpp"

using namespace sylv;

TEST_SUITE("monoid") {
  TEST_CASE("element_of and equivalent") {
    CHECK(element_of(parse_word("13254"), 5).tree() == psylv(parse_word("13254")));
    CHECK(element_of(Word{}, 3) == SylvElement(3));
    CHECK(equivalent(parse_word("132"), parse_word("312"), 3));
    CHECK_FALSE(equivalent(parse_word("12"), parse_word("21"), 2));
    CHECK_FALSE(equivalent(parse_word("123"), parse_word("12"), 3));
    CHECK_THROWS_AS((void) element_of(parse_word("14"), 3), RankError);
  }

  TEST_CASE("elements are validated") {
    CHECK_THROWS_AS((void) SylvElement(2, psylv(parse_word("13"))), RankError);
    CHECK_NOTHROW((void) SylvElement(3, psylv(parse_word("13"))));
    CHECK(SylvElement(3, psylv(parse_word("123"))).is_standard());
    CHECK_FALSE(SylvElement(3, psylv(parse_word("113"))).is_standard());
  }

  TEST_CASE("multiply") {
    SylvElement const a = element_of(parse_word("21"), 3);
    SylvElement const b = element_of(parse_word("3"), 3);
    CHECK(multiply(a, b) == element_of(parse_word("213"), 3));
    CHECK(multiply(a, SylvElement(3)) == a);
    CHECK(multiply(SylvElement(3), a) == a);
    CHECK_THROWS_AS((void) multiply(a, element_of(parse_word("3"), 4)), RankError);
    CHECK(evaluation_of(multiply(a, b)) == Evaluation{{1, 1, 1}});
  }

  TEST_CASE("insertion is a congruence and multiplication is associative") {
    std::vector<Word> small;
    for (std::size_t len = 0; len <= 3; ++len) {
      for (Word const& w : all_words(3, len)) {
        small.push_back(w);
      }
    }
    for (Word const& u : small) {
      for (Word const& v : small) {
        SylvElement const su = element_of(u, 3);
        SylvElement const sv = element_of(v, 3);
        CHECK(element_of(u + v, 3) == multiply(su, sv));
        CHECK(evaluation_of(multiply(su, sv)) == evaluation_of(su) + evaluation_of(sv));
      }
    }
    for (Word const& u : all_words(3, 2)) {
      for (Word const& v : all_words(3, 2)) {
        for (Word const& w : all_words(3, 2)) {
          SylvElement const a = element_of(u, 3);
          SylvElement const b = element_of(v, 3);
          SylvElement const c = element_of(w, 3);
          CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        }
      }
    }
  }

  TEST_CASE("standard elements are counted by Catalan numbers") {
    for (std::size_t n = 0; n <= 7; ++n) {
      std::set<std::string> trees;
      for (Word const& w : all_words(n, n)) {
        if (is_standard(w)) {
          trees.insert(to_string(psylv(w)));
        }
      }
      CHECK(trees.size() == oracle::catalan(n));
    }
  }

  TEST_CASE("relation instances") {
    CHECK(RelationInstance{parse_word("312"), parse_word("132")}.valid());
    CHECK(RelationInstance{parse_word("3142"), parse_word("1342")}.valid());
    CHECK(RelationInstance{parse_word("211"), parse_word("121")}.valid());
    CHECK_FALSE(RelationInstance{parse_word("213"), parse_word("123")}.valid());
    CHECK_FALSE(RelationInstance{parse_word("312"), parse_word("312")}.valid());

    CHECK(relation_moves(parse_word("312")) == std::vector<Word>{parse_word("132")});
    CHECK(relation_moves(parse_word("21")).empty());
    CHECK(relation_moves(parse_word("123")).empty());

    RelationInstance const r = relation_at(parse_word("4312"), 1);
    CHECK(r.valid());
    CHECK_THROWS_AS((void) relation_at(parse_word("21"), 0), InputError);
    CHECK_THROWS_AS((void) relation_at(parse_word("312"), 2), InputError);
  }

  TEST_CASE("rewriting preserves the tree") {
    for (std::size_t len = 0; len <= 5; ++len) {
      for (Word const& w : all_words(3, len)) {
        for (Word const& m : relation_moves(w)) {
          CHECK(psylv(m) == psylv(w));
        }
      }
    }
  }

  TEST_CASE("rewrite classes") {
    auto const cls = rewrite_class(parse_word("132"), 3);
    CHECK(cls.size() == 2);
    CHECK(cls.contains(parse_word("312")));
    CHECK(rewrite_equivalent(parse_word("132"), parse_word("312"), 3));
    CHECK_FALSE(rewrite_equivalent(parse_word("12"), parse_word("21"), 2));
    CHECK_FALSE(rewrite_equivalent(parse_word("12"), parse_word("13"), 3));
    CHECK_THROWS_AS((void) rewrite_class(parse_word("1325764"), 7, 5), CapExceeded);
  }

  TEST_CASE("the presentation agrees with insertion") {
    for (std::size_t len = 0; len <= 5; ++len) {
      for (Evaluation const& e : evaluations(3, len)) {
        auto const words = words_with_evaluation(e);
        for (Word const& u : words) {
          auto const cls = rewrite_class(u, 3);
          for (Word const& v : words) {
            CHECK(cls.contains(v) == equivalent(u, v, 3));
          }
        }
      }
    }
  }
}
