#include "doctest.h"

#include "sylv/error.hpp"
#include "sylv/word.hpp"

using namespace sylv;

namespace {
  Evaluation ev(std::vector<std::size_t> c) {
    return Evaluation{std::move(c)};
  }
}  // namespace

TEST_SUITE("words") {
  TEST_CASE("evaluation counts symbols") {
    CHECK(evaluation(parse_word("1246375"), 7) == ev({1, 1, 1, 1, 1, 1, 1}));
    CHECK(evaluation(parse_word("5451761524"), 7) == ev({2, 1, 0, 2, 3, 1, 1}));
    CHECK(evaluation(Word{}, 3) == ev({0, 0, 0}));
  }

  TEST_CASE("evaluation rejects symbols above the rank") {
    CHECK_THROWS_AS((void) evaluation(parse_word("124"), 3), RankError);
    CHECK_THROWS_AS(check_rank(Word{0}, 3), RankError);
  }

  TEST_CASE("is_standard") {
    CHECK(is_standard(parse_word("1246375")));
    CHECK_FALSE(is_standard(parse_word("11")));
    CHECK(is_standard(Word{}));
    CHECK_FALSE(is_standard(parse_word("13")));
  }

  TEST_CASE("evaluation is additive and characterises standard words") {
    for (std::size_t len = 0; len <= 4; ++len) {
      for (Word const& u : all_words(3, len)) {
        for (Word const& v : all_words(3, 2)) {
          CHECK(evaluation(u + v, 3) == evaluation(u, 3) + evaluation(v, 3));
        }
      }
    }
    for (std::size_t n = 0; n <= 5; ++n) {
      for (Word const& w : all_words(n, n)) {
        Evaluation ones{std::vector<std::size_t>(n, 1)};
        CHECK(is_standard(w) == (evaluation(w, n) == ones));
      }
    }
  }

  TEST_CASE("text format") {
    CHECK(to_string(parse_word("13254")) == "13254");
    CHECK(parse_word("1.3.12.5") == Word{1, 3, 12, 5});
    CHECK(to_string(Word{1, 3, 12, 5}) == "1.3.12.5");
    CHECK(to_string(Word{12}) == "12.");
    CHECK(parse_word("12.") == Word{12});
    CHECK(parse_word("3.1") == Word{3, 1});
    CHECK(to_string(Word{3, 1}) == "31");
    CHECK(parse_word("").empty());
    CHECK(parse_word("ε").empty());
    CHECK_THROWS_AS((void) parse_word("102"), InputError);
    CHECK_THROWS_AS((void) parse_word("1..2"), InputError);
    CHECK_THROWS_AS((void) parse_word("1.0"), InputError);
    CHECK_THROWS_AS((void) parse_word("a1"), InputError);
  }

  TEST_CASE("text format round-trips") {
    for (Word const& w : all_words(3, 3)) {
      CHECK(parse_word(to_string(w)) == w);
    }
    for (Word const& w : {Word{10}, Word{1, 11}, Word{12, 3, 9, 100}}) {
      CHECK(parse_word(to_string(w)) == w);
    }
  }

  TEST_CASE("evaluation text") {
    CHECK(parse_evaluation("2,1,0,2") == ev({2, 1, 0, 2}));
    CHECK(to_string(ev({1, 1})) == "1,1");
    CHECK_THROWS_AS((void) parse_evaluation(""), InputError);
    CHECK_THROWS_AS((void) parse_evaluation("1,,2"), InputError);
    CHECK_THROWS_AS((void) parse_evaluation("1,2,"), InputError);
  }

  TEST_CASE("enumerations") {
    CHECK(all_words(3, 2).size() == 9);
    CHECK(all_words(2, 0).size() == 1);
    CHECK(words_with_evaluation(ev({2, 1})).size() == 3);
    CHECK(words_with_evaluation(ev({0, 0})).size() == 1);
    CHECK(evaluations(3, 2).size() == 6);
    for (auto const& e : evaluations(4, 3)) {
      CHECK(e.total() == 3);
    }
    CHECK(increasing_word(4) == Word{1, 2, 3, 4});
    CHECK(decreasing_word(4) == Word{4, 3, 2, 1});
  }
}
