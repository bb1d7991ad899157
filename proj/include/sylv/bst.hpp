#ifndef SYLV_BST_HPP
#define SYLV_BST_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sylv/word.hpp"

namespace sylv {

  enum class Dir : std::uint8_t { left, right };

  // Path from the root of a tree: a sequence of left/right steps. The empty
  // path addresses the root.
  class NodeLocator {
   public:
    NodeLocator() = default;
    explicit NodeLocator(std::vector<Dir> steps) : steps_(std::move(steps)) {}

    [[nodiscard]] std::vector<Dir> const& steps() const noexcept {
      return steps_;
    }
    [[nodiscard]] bool is_root() const noexcept {
      return steps_.empty();
    }
    [[nodiscard]] NodeLocator child(Dir d) const {
      NodeLocator result = *this;
      result.steps_.push_back(d);
      return result;
    }

    friend bool operator==(NodeLocator const&, NodeLocator const&)  = default;
    friend auto operator<=>(NodeLocator const&, NodeLocator const&) = default;

   private:
    std::vector<Dir> steps_;
  };

  // "" for the root, otherwise a string over {L, R}.
  [[nodiscard]] std::string to_string(NodeLocator const& loc);
  [[nodiscard]] NodeLocator parse_locator(std::string_view text);

  using NodeId                     = std::int32_t;
  inline constexpr NodeId kNoNode  = -1;

  inline constexpr std::size_t kDefaultReadingsCap = 100'000;

  // Right-strict binary search tree: every label is >= all labels in its left
  // subtree and < all labels in its right subtree. Immutable value; the
  // modifying operations return new trees. Nodes live in an arena indexed by
  // NodeId; ids are only meaningful for the tree that produced them.
  class Bst {
   public:
    struct Node {
      Symbol label;
      NodeId left   = kNoNode;
      NodeId right  = kNoNode;
      NodeId parent = kNoNode;
    };

    Bst() = default;

    // A node labelled `label` over the given subtrees. Throws InputError if
    // the result would not be a right-strict BST.
    [[nodiscard]] static Bst make(Symbol label, Bst const& left, Bst const& right);
    [[nodiscard]] static Bst leaf(Symbol label) {
      return make(label, Bst{}, Bst{});
    }

    [[nodiscard]] bool empty() const noexcept {
      return nodes_.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return nodes_.size();
    }
    [[nodiscard]] NodeId root() const noexcept {
      return nodes_.empty() ? kNoNode : 0;
    }

    [[nodiscard]] Node const& node(NodeId id) const {
      return nodes_[static_cast<std::size_t>(id)];
    }
    [[nodiscard]] Symbol label(NodeId id) const {
      return node(id).label;
    }
    [[nodiscard]] NodeId left(NodeId id) const {
      return node(id).left;
    }
    [[nodiscard]] NodeId right(NodeId id) const {
      return node(id).right;
    }
    [[nodiscard]] NodeId parent(NodeId id) const {
      return node(id).parent;
    }
    [[nodiscard]] NodeId child(NodeId id, Dir d) const {
      return d == Dir::left ? left(id) : right(id);
    }

    // Throws InvalidLocatorError if the path leaves the tree.
    [[nodiscard]] NodeId      resolve(NodeLocator const& loc) const;
    [[nodiscard]] NodeLocator locator(NodeId id) const;

    // The highest node labelled `a`, or kNoNode.
    [[nodiscard]] NodeId find(Symbol a) const;

    // True iff `id` lies in the complete subtree at `ancestor` (a node is
    // below itself).
    [[nodiscard]] bool in_subtree(NodeId id, NodeId ancestor) const;

    // Leaf insertion: descend left when a <= label, right otherwise.
    [[nodiscard]] Bst inserted(Symbol a) const;

    // Copy of the complete subtree at `id` (empty for kNoNode).
    [[nodiscard]] Bst subtree(NodeId id) const;

    // Checks the right-strict search-tree property at every node.
    [[nodiscard]] bool is_search_tree() const;

    // True iff the labels are exactly 1..size(), once each.
    [[nodiscard]] bool is_standard() const;

    [[nodiscard]] Symbol max_label() const noexcept;

    friend bool operator==(Bst const& lhs, Bst const& rhs);

   private:
    NodeId copy_from(Bst const& other, NodeId id, NodeId parent);

    std::vector<Node> nodes_;
  };

  [[nodiscard]] inline Bst insert(Bst const& t, Symbol a) {
    return t.inserted(a);
  }

  // Insert the symbols of w right-to-left into the empty tree.
  [[nodiscard]] Bst psylv(Word const& w);

  struct Visit {
    Symbol      symbol;
    NodeLocator locator;

    friend bool operator==(Visit const&, Visit const&) = default;
  };

  [[nodiscard]] std::vector<Visit> infix(Bst const& t);
  [[nodiscard]] std::vector<Visit> postfix(Bst const& t);

  [[nodiscard]] std::vector<NodeId> infix_nodes(Bst const& t);
  // Postfix order of the complete subtree at `from`.
  [[nodiscard]] std::vector<NodeId> postfix_nodes(Bst const& t, NodeId from);

  // Postfix labels of the whole tree; always a reading.
  [[nodiscard]] Word canonical_reading(Bst const& t);

  // Postfix labels of the complete subtree at `at`, leaving out the complete
  // subtree at `prune` (if it lies inside). Empty word for kNoNode.
  [[nodiscard]] Word subtree_reading(Bst const& t,
                                     NodeId     at,
                                     NodeId     prune = kNoNode);

  // Every word w with psylv(w) == t. Throws CapExceeded as soon as the set
  // is known to be larger than `cap`.
  [[nodiscard]] std::set<Word> readings(Bst const& t,
                                        std::size_t cap = kDefaultReadingsCap);

  // Path of left child nodes from `from`, `from` first.
  [[nodiscard]] std::vector<NodeId> left_path_nodes(Bst const& t, NodeId from);
  // Same path from the root, as locators. Throws InputError on the empty tree.
  [[nodiscard]] std::vector<NodeLocator> left_child_path(Bst const& t);

  [[nodiscard]] Bst complete_subtree(Bst const& t, NodeLocator const& x);

  // A rooted subtree of some tree: the node at `root` plus the nodes under it
  // following the shape of `pattern`, whose labels must agree.
  struct RootedSubtree {
    NodeLocator root;
    Bst         pattern;

    [[nodiscard]] static RootedSubtree single(Bst const& t, NodeLocator const& at);
    [[nodiscard]] static RootedSubtree complete(Bst const& t, NodeLocator const& at);
  };

  // True iff `pattern` appears at `at` in t: same labels, and every child
  // edge of the pattern is a child edge of t.
  [[nodiscard]] bool pattern_at(Bst const& t, NodeId at, Bst const& pattern);

  // Complete subtree at the left child of the left-most node of b (resp. the
  // right child of the right-most node). Possibly empty.
  [[nodiscard]] Bst left_minimal(Bst const& t, RootedSubtree const& b);
  [[nodiscard]] Bst right_maximal(Bst const& t, RootedSubtree const& b);

  // Nested `label(left,right)` with `_` for empty.
  [[nodiscard]] std::string to_string(Bst const& t);
  [[nodiscard]] Bst         parse_tree(std::string_view text);

  // Graphviz rendering of a single tree.
  [[nodiscard]] std::string to_dot(Bst const& t, std::string_view name = "T");

  // Sideways drawing: right subtrees above, left below, one node per line.
  [[nodiscard]] std::string render_ascii(Bst const& t);

  struct BstHash {
    std::size_t operator()(Bst const& t) const;
  };

}  // namespace sylv

#endif  // SYLV_BST_HPP
