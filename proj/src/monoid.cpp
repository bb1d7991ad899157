#include "sylv/monoid.hpp"

#include <deque>

#include "sylv/error.hpp"

namespace sylv {

  SylvElement::SylvElement(std::size_t rank, Bst tree)
      : rank_(rank), tree_(std::move(tree)) {
    if (!tree_.is_search_tree()) {
      throw InputError("not a binary search tree: " + to_string(tree_));
    }
    if (tree_.max_label() > rank_) {
      throw RankError("tree label " + std::to_string(tree_.max_label())
                      + " exceeds rank " + std::to_string(rank_));
    }
  }

  SylvElement element_of(Word const& w, std::size_t rank) {
    check_rank(w, rank);
    return SylvElement(rank, psylv(w));
  }

  bool equivalent(Word const& u, Word const& v, std::size_t rank) {
    check_rank(u, rank);
    check_rank(v, rank);
    return psylv(u) == psylv(v);
  }

  SylvElement multiply(SylvElement const& s, SylvElement const& t) {
    if (s.rank() != t.rank()) {
      throw RankError("cannot multiply elements of ranks "
                      + std::to_string(s.rank()) + " and "
                      + std::to_string(t.rank()));
    }
    return SylvElement(s.rank(), psylv(s.reading() + t.reading()));
  }

  Evaluation evaluation_of(SylvElement const& s) {
    return evaluation(s.reading(), s.rank());
  }

  bool RelationInstance::valid() const {
    // left = c a v b, right = a c v b with a <= b < c
    if (left.size() < 3 || left.size() != right.size()) {
      return false;
    }
    Symbol const c = left[0], a = left[1], b = left[left.size() - 1];
    if (!(a <= b && b < c)) {
      return false;
    }
    if (right[0] != a || right[1] != c) {
      return false;
    }
    return std::equal(left.begin() + 2, left.end(), right.begin() + 2);
  }

  namespace {
    // Index of the leftmost j > pos + 1 with lo <= w[j] < hi, or w.size().
    std::size_t witness_index(Word const& w, std::size_t pos) {
      Symbol const p = w[pos], q = w[pos + 1];
      if (p == q) {
        return w.size();
      }
      Symbol const lo = std::min(p, q), hi = std::max(p, q);
      for (std::size_t j = pos + 2; j < w.size(); ++j) {
        if (lo <= w[j] && w[j] < hi) {
          return j;
        }
      }
      return w.size();
    }

    Word swapped(Word const& w, std::size_t pos) {
      std::vector<Symbol> s(w.begin(), w.end());
      std::swap(s[pos], s[pos + 1]);
      return Word(std::move(s));
    }
  }  // namespace

  std::vector<Word> relation_moves(Word const& w) {
    std::vector<Word> out;
    for (std::size_t pos = 0; pos + 2 < w.size(); ++pos) {
      if (witness_index(w, pos) < w.size()) {
        out.push_back(swapped(w, pos));
      }
    }
    return out;
  }

  RelationInstance relation_at(Word const& w, std::size_t pos) {
    std::size_t j = pos + 2 < w.size() ? witness_index(w, pos) : w.size();
    if (j == w.size()) {
      throw InputError("no defining relation applies to "
                       + to_string(w) + " at position "
                       + std::to_string(pos));
    }
    Word const factor = w.factor(pos, j - pos + 1);
    Word const other  = swapped(w, pos).factor(pos, j - pos + 1);
    // the side starting with the larger symbol is the c a v b side
    return factor[0] > factor[1] ? RelationInstance{factor, other}
                                 : RelationInstance{other, factor};
  }

  std::unordered_set<Word, WordHash>
  rewrite_class(Word const& u, std::size_t rank, std::size_t budget) {
    check_rank(u, rank);
    std::unordered_set<Word, WordHash> seen{u};
    std::deque<Word>                   queue{u};
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      for (Word& next : relation_moves(w)) {
        if (seen.insert(next).second) {
          if (seen.size() > budget) {
            throw CapExceeded("rewrite closure of " + to_string(u)
                                  + " exceeds its budget",
                              budget);
          }
          queue.push_back(std::move(next));
        }
      }
    }
    return seen;
  }

  bool rewrite_equivalent(Word const& u,
                          Word const& v,
                          std::size_t rank,
                          std::size_t budget) {
    check_rank(u, rank);
    check_rank(v, rank);
    if (u.size() != v.size() || evaluation(u, rank) != evaluation(v, rank)) {
      return false;
    }
    return rewrite_class(u, rank, budget).contains(v);
  }

}  // namespace sylv
