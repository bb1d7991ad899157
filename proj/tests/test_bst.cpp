#include "doctest.h"

#include "oracles.hpp"
#include "sylv/error.hpp"
#include "sylv/bst.hpp"
#include "sylv/shift_graph.hpp"

using namespace sylv;

namespace {
  // The tree obtained from 5451761524.
  constexpr char const* kDisplayTree
      = "4(2(1(1(_,_),_),4(_,_)),5(5(5(_,_),_),6(_,7(_,_))))";

  std::vector<Symbol> symbols(std::vector<Visit> const& visits) {
    std::vector<Symbol> out;
    for (auto const& v : visits) {
      out.push_back(v.symbol);
    }
    return out;
  }

  std::vector<Symbol> labels_at(Bst const& t, std::vector<NodeLocator> const& locs) {
    std::vector<Symbol> out;
    for (auto const& l : locs) {
      out.push_back(t.label(t.resolve(l)));
    }
    return out;
  }
}  // namespace

TEST_SUITE("trees") {
  TEST_CASE("insert") {
    Bst t = insert(Bst{}, 4);
    CHECK(to_string(t) == "4(_,_)");
    CHECK(to_string(insert(Bst::leaf(2), 1)) == "2(1(_,_),_)");
    CHECK(to_string(insert(Bst::leaf(2), 3)) == "2(_,3(_,_))");
    CHECK(to_string(insert(Bst::leaf(2), 2)) == "2(2(_,_),_)");
    // insertion never modifies its argument
    CHECK(to_string(t) == "4(_,_)");
  }

  TEST_CASE("psylv") {
    CHECK(to_string(psylv(parse_word("5451761524"))) == kDisplayTree);
    CHECK(psylv(parse_word("5451761524")) == parse_tree(kDisplayTree));
    CHECK(to_string(psylv(parse_word("13254"))) == "4(2(1(_,_),3(_,_)),5(_,_))");
    CHECK(to_string(psylv(parse_word("23541"))) == "1(_,4(3(2(_,_),_),5(_,_)))");
    CHECK(psylv(Word{}).empty());
  }

  TEST_CASE("psylv always gives a search tree with weakly increasing infix") {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (Word const& w : all_words(3, len)) {
        Bst const t = psylv(w);
        REQUIRE(t.is_search_tree());
        auto const in = symbols(infix(t));
        CHECK(std::is_sorted(in.begin(), in.end()));
        CHECK(in.size() == w.size());
      }
    }
  }

  TEST_CASE("infix") {
    Bst const t = parse_tree(kDisplayTree);
    CHECK(symbols(infix(t)) == std::vector<Symbol>{1, 1, 2, 4, 4, 5, 5, 5, 6, 7});
    CHECK(symbols(infix(Bst::leaf(3))) == std::vector<Symbol>{3});
    CHECK(infix(Bst{}).empty());
    // locators point back at the visited nodes
    for (auto const& v : infix(t)) {
      CHECK(t.label(t.resolve(v.locator)) == v.symbol);
    }
  }

  TEST_CASE("postfix") {
    Bst const u = psylv(parse_word("23541"));
    CHECK(symbols(postfix(u)) == std::vector<Symbol>{2, 3, 5, 4, 1});
    for (std::size_t n = 1; n <= 6; ++n) {
      Word const w = increasing_word(n);
      CHECK(symbols(postfix(psylv(w))) == std::vector<Symbol>(w.begin(), w.end()));
    }
    CHECK(postfix(Bst{}).empty());
    auto const p = postfix(parse_tree(kDisplayTree));
    CHECK(p.back().locator.is_root());
    CHECK(p.size() == 10);
  }

  TEST_CASE("readings") {
    CHECK(readings(psylv(parse_word("132")))
          == std::set<Word>{parse_word("132"), parse_word("312")});
    CHECK(readings(psylv(parse_word("21"))) == std::set<Word>{parse_word("21")});
    CHECK(readings(Bst::leaf(5)) == std::set<Word>{Word{5}});
    CHECK(readings(Bst{}) == std::set<Word>{Word{}});
  }

  TEST_CASE("readings agree with the permutation oracle") {
    for (std::size_t len = 1; len <= 6; ++len) {
      for (Word const& w : all_words(3, len)) {
        Bst const t = psylv(w);
        auto const r = readings(t);
        CHECK(r.contains(w));
        CHECK(r.contains(canonical_reading(t)));
        if (len <= 5) {
          CHECK(r == oracle::readings_by_permutation(t));
        }
      }
    }
  }

  TEST_CASE("standard readings are the linear extensions") {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (Bst const& t : standard_trees(n)) {
        auto const r = readings(t);
        CHECK(r.size() == oracle::linear_extensions(t));
        for (Word const& w : r) {
          CHECK(psylv(w) == t);
        }
      }
    }
  }

  TEST_CASE("readings cap") {
    Bst const t = psylv(increasing_word(7));
    // a comb has one reading; a balanced tree on 7 nodes has 80
    Bst const balanced = psylv(parse_word("1325764"));
    CHECK(readings(t, 1).size() == 1);
    CHECK(readings(balanced).size() == 80);
    CHECK_THROWS_AS((void) readings(balanced, 79), CapExceeded);
    try {
      (void) readings(balanced, 10);
    } catch (CapExceeded const& e) {
      CHECK(e.cap() == 10);
    }
    CHECK_THROWS_AS((void) readings(balanced, 0), InputError);
  }

  TEST_CASE("canonical reading") {
    CHECK(canonical_reading(psylv(parse_word("23541"))) == parse_word("23541"));
    CHECK(canonical_reading(psylv(parse_word("132"))) == parse_word("132"));
    CHECK(canonical_reading(Bst{}).empty());
    for (Word const& w : all_words(3, 4)) {
      Bst const t = psylv(w);
      CHECK(psylv(canonical_reading(t)) == t);
      CHECK(postfix(t).size() == t.size());
    }
  }

  TEST_CASE("left child path") {
    for (std::size_t n = 1; n <= 5; ++n) {
      Bst const t = psylv(increasing_word(n));
      auto      expected = decreasing_word(n);
      CHECK(labels_at(t, left_child_path(t))
            == std::vector<Symbol>(expected.begin(), expected.end()));
    }
    CHECK(left_child_path(Bst::leaf(1)) == std::vector<NodeLocator>{NodeLocator{}});
    Bst const t = parse_tree(kDisplayTree);
    CHECK(labels_at(t, left_child_path(t)) == std::vector<Symbol>{4, 2, 1, 1});
    CHECK_THROWS_AS((void) left_child_path(Bst{}), InputError);
  }

  TEST_CASE("complete subtree") {
    Bst const t = parse_tree(kDisplayTree);
    CHECK(to_string(complete_subtree(t, parse_locator("R")))
          == "5(5(5(_,_),_),6(_,7(_,_)))");
    CHECK(complete_subtree(t, NodeLocator{}) == t);
    CHECK(complete_subtree(Bst::leaf(3), NodeLocator{}) == Bst::leaf(3));
    CHECK_THROWS_AS((void) complete_subtree(t, parse_locator("LLLL")),
                    InvalidLocatorError);
    CHECK_THROWS_AS((void) complete_subtree(Bst{}, NodeLocator{}),
                    InvalidLocatorError);
  }

  TEST_CASE("left-minimal and right-maximal subtrees") {
    Bst const  t    = parse_tree(kDisplayTree);
    auto const root = RootedSubtree::single(t, NodeLocator{});
    CHECK(to_string(left_minimal(t, root)) == "2(1(1(_,_),_),4(_,_))");
    CHECK(to_string(right_maximal(t, root)) == "5(5(5(_,_),_),6(_,7(_,_)))");

    auto const whole = RootedSubtree::complete(t, NodeLocator{});
    CHECK(left_minimal(t, whole).empty());
    CHECK(right_maximal(t, whole).empty());

    auto const b = RootedSubtree::complete(t, parse_locator("L"));
    CHECK(right_maximal(t, b).empty());
    CHECK(left_minimal(t, b).empty());

    // the subtree 2(1,_) inside 2(1(1),4): left-minimal is the lower 1
    RootedSubtree const partial{parse_locator("L"), parse_tree("2(1(_,_),_)")};
    CHECK(to_string(left_minimal(t, partial)) == "1(_,_)");
    CHECK(to_string(right_maximal(t, partial)) == "4(_,_)");

    RootedSubtree const wrong{parse_locator("L"), parse_tree("3(_,_)")};
    CHECK_THROWS_AS((void) left_minimal(t, wrong), InvalidLocatorError);
  }

  TEST_CASE("serialisation") {
    CHECK(to_string(Bst{}) == "_");
    CHECK(parse_tree("_").empty());
    CHECK(to_string(parse_tree("12(10(_,_),_)")) == "12(10(_,_),_)");
    CHECK_THROWS_AS((void) parse_tree("2(3(_,_),_)"), InputError);  // not a BST
    CHECK_THROWS_AS((void) parse_tree("2(_,2(_,_))"), InputError);  // right strict
    CHECK_THROWS_AS((void) parse_tree("2(_,_"), InputError);
    CHECK_THROWS_AS((void) parse_tree("2(_,_)x"), InputError);
    CHECK_THROWS_AS((void) parse_tree("0(_,_)"), InputError);
    for (std::size_t len = 0; len <= 5; ++len) {
      for (Word const& w : all_words(3, len)) {
        Bst const t = psylv(w);
        CHECK(parse_tree(to_string(t)) == t);
      }
    }
  }

  TEST_CASE("dot and ascii rendering") {
    Bst const   t   = psylv(parse_word("21"));
    std::string dot = to_dot(t);
    CHECK(dot.find("digraph T {") == 0);
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    CHECK(dot.find("style=invis") != std::string::npos);
    CHECK(render_ascii(t) == "    2\n1\n");
    CHECK(render_ascii(Bst{}) == "_\n");
  }

  TEST_CASE("structural equality ignores arena layout") {
    // same tree built in two insertion orders
    CHECK(psylv(parse_word("132")) == psylv(parse_word("312")));
    CHECK_FALSE(psylv(parse_word("12")) == psylv(parse_word("21")));
    CHECK(BstHash{}(psylv(parse_word("132"))) == BstHash{}(psylv(parse_word("312"))));
  }

  TEST_CASE("locators") {
    Bst const t = parse_tree(kDisplayTree);
    for (NodeId id = 0; id < static_cast<NodeId>(t.size()); ++id) {
      CHECK(t.resolve(t.locator(id)) == id);
    }
    CHECK(to_string(parse_locator("LrR")) == "LRR");
    CHECK_THROWS_AS((void) parse_locator("LX"), InputError);
  }
}
