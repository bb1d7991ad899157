#ifndef SYLV_MONOID_HPP
#define SYLV_MONOID_HPP

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "sylv/bst.hpp"
#include "sylv/word.hpp"

namespace sylv {

  inline constexpr std::size_t kDefaultRewriteBudget = 1'000'000;

  // An element of the sylvester monoid of rank n, represented by its binary
  // search tree.
  class SylvElement {
   public:
    // The identity of the rank-`rank` monoid.
    explicit SylvElement(std::size_t rank) : rank_(rank) {}
    // Throws RankError if a label exceeds `rank`, InputError if `tree` is not
    // a right-strict BST.
    SylvElement(std::size_t rank, Bst tree);

    [[nodiscard]] std::size_t rank() const noexcept {
      return rank_;
    }
    [[nodiscard]] Bst const& tree() const noexcept {
      return tree_;
    }
    [[nodiscard]] Word reading() const {
      return canonical_reading(tree_);
    }
    [[nodiscard]] bool is_standard() const {
      return tree_.is_standard();
    }

    friend bool operator==(SylvElement const&, SylvElement const&) = default;

   private:
    std::size_t rank_;
    Bst         tree_;
  };

  [[nodiscard]] SylvElement element_of(Word const& w, std::size_t rank);

  [[nodiscard]] bool equivalent(Word const& u, Word const& v, std::size_t rank);

  // Throws RankError on mismatched ranks.
  [[nodiscard]] SylvElement multiply(SylvElement const& s, SylvElement const& t);

  [[nodiscard]] Evaluation evaluation_of(SylvElement const& s);

  // One instance (c a v b, a c v b) of the defining relations, a <= b < c.
  struct RelationInstance {
    Word left;
    Word right;

    // Checks the shape of the pair.
    [[nodiscard]] bool valid() const;
  };

  // Every word obtained from w by one application of a defining relation, in
  // either direction, at any position. Relations only ever swap two adjacent
  // symbols p q (p != q) when some later symbol b has min(p,q) <= b <
  // max(p,q); the returned list has one entry per such position.
  [[nodiscard]] std::vector<Word> relation_moves(Word const& w);

  // The instance that rewrites w at `pos` (swapping positions pos, pos+1),
  // using the leftmost admissible b. Throws InputError if none applies.
  [[nodiscard]] RelationInstance relation_at(Word const& w, std::size_t pos);

  // The class of u under the congruence generated by the defining relations,
  // by breadth-first closure. Throws CapExceeded past `budget` words.
  [[nodiscard]] std::unordered_set<Word, WordHash>
  rewrite_class(Word const& u,
                std::size_t rank,
                std::size_t budget = kDefaultRewriteBudget);

  // Decides u == v in the monoid from the presentation alone, never through
  // insertion. Words of different length or evaluation are rejected at once.
  [[nodiscard]] bool rewrite_equivalent(Word const& u,
                                        Word const& v,
                                        std::size_t rank,
                                        std::size_t budget = kDefaultRewriteBudget);

  struct SylvElementHash {
    std::size_t operator()(SylvElement const& s) const {
      return BstHash{}(s.tree()) ^ (s.rank() * 0x9e3779b97f4a7c15ULL);
    }
  };

}  // namespace sylv

#endif  // SYLV_MONOID_HPP
