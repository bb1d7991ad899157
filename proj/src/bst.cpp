#include "sylv/bst.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "sylv/error.hpp"

namespace sylv {

  std::string to_string(NodeLocator const& loc) {
    std::string out;
    for (Dir d : loc.steps()) {
      out.push_back(d == Dir::left ? 'L' : 'R');
    }
    return out;
  }

  NodeLocator parse_locator(std::string_view text) {
    std::vector<Dir> steps;
    for (char c : text) {
      if (c == 'L' || c == 'l') {
        steps.push_back(Dir::left);
      } else if (c == 'R' || c == 'r') {
        steps.push_back(Dir::right);
      } else {
        throw InputError("malformed locator \"" + std::string(text) + "\"");
      }
    }
    return NodeLocator(std::move(steps));
  }

  ////////////////////////////////////////////////////////////////////////
  // Bst
  ////////////////////////////////////////////////////////////////////////

  NodeId Bst::copy_from(Bst const& other, NodeId id, NodeId parent) {
    if (id == kNoNode) {
      return kNoNode;
    }
    auto self = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{other.label(id), kNoNode, kNoNode, parent});
    NodeId l = copy_from(other, other.left(id), self);
    NodeId r = copy_from(other, other.right(id), self);
    nodes_[static_cast<std::size_t>(self)].left  = l;
    nodes_[static_cast<std::size_t>(self)].right = r;
    return self;
  }

  Bst Bst::make(Symbol label, Bst const& left, Bst const& right) {
    Bst t;
    t.nodes_.push_back(Node{label});
    t.nodes_[0].left  = t.copy_from(left, left.root(), 0);
    t.nodes_[0].right = t.copy_from(right, right.root(), 0);
    if (!t.is_search_tree()) {
      throw InputError("node " + std::to_string(label)
                       + " violates the search-tree order: "
                       + to_string(t));
    }
    return t;
  }

  NodeId Bst::resolve(NodeLocator const& loc) const {
    NodeId id = root();
    for (Dir d : loc.steps()) {
      if (id == kNoNode) {
        break;
      }
      id = child(id, d);
    }
    if (id == kNoNode) {
      throw InvalidLocatorError("locator \"" + to_string(loc)
                                + "\" does not address a node");
    }
    return id;
  }

  NodeLocator Bst::locator(NodeId id) const {
    std::vector<Dir> steps;
    while (parent(id) != kNoNode) {
      NodeId p = parent(id);
      steps.push_back(left(p) == id ? Dir::left : Dir::right);
      id = p;
    }
    std::reverse(steps.begin(), steps.end());
    return NodeLocator(std::move(steps));
  }

  NodeId Bst::find(Symbol a) const {
    NodeId id = root();
    while (id != kNoNode && label(id) != a) {
      id = a <= label(id) ? left(id) : right(id);
    }
    return id;
  }

  bool Bst::in_subtree(NodeId id, NodeId ancestor) const {
    for (; id != kNoNode; id = parent(id)) {
      if (id == ancestor) {
        return true;
      }
    }
    return false;
  }

  Bst Bst::inserted(Symbol a) const {
    Bst  t    = *this;
    auto self = static_cast<NodeId>(t.nodes_.size());
    if (t.nodes_.empty()) {
      t.nodes_.push_back(Node{a});
      return t;
    }
    NodeId id = 0;
    while (true) {
      Node& n = t.nodes_[static_cast<std::size_t>(id)];
      NodeId& next = a <= n.label ? n.left : n.right;
      if (next == kNoNode) {
        next = self;
        t.nodes_.push_back(Node{a, kNoNode, kNoNode, id});
        return t;
      }
      id = next;
    }
  }

  Bst Bst::subtree(NodeId id) const {
    Bst t;
    t.copy_from(*this, id, kNoNode);
    return t;
  }

  bool Bst::is_search_tree() const {
    // every label must lie in the half-open window (lo, hi] imposed by its
    // ancestors
    std::function<bool(NodeId, std::int64_t, std::int64_t)> ok
        = [&](NodeId id, std::int64_t lo, std::int64_t hi) {
            if (id == kNoNode) {
              return true;
            }
            std::int64_t a = label(id);
            return lo < a && a <= hi && ok(left(id), lo, a)
                   && ok(right(id), a, hi);
          };
    return ok(root(), -1, INT64_MAX);
  }

  bool Bst::is_standard() const {
    std::vector<bool> seen(nodes_.size() + 1, false);
    for (Node const& n : nodes_) {
      if (n.label == 0 || n.label > nodes_.size() || seen[n.label]) {
        return false;
      }
      seen[n.label] = true;
    }
    return true;
  }

  Symbol Bst::max_label() const noexcept {
    Symbol m = 0;
    for (Node const& n : nodes_) {
      m = std::max(m, n.label);
    }
    return m;
  }

  bool operator==(Bst const& lhs, Bst const& rhs) {
    if (lhs.size() != rhs.size()) {
      return false;
    }
    std::function<bool(NodeId, NodeId)> same = [&](NodeId a, NodeId b) {
      if (a == kNoNode || b == kNoNode) {
        return a == b;
      }
      return lhs.label(a) == rhs.label(b) && same(lhs.left(a), rhs.left(b))
             && same(lhs.right(a), rhs.right(b));
    };
    return same(lhs.root(), rhs.root());
  }

  ////////////////////////////////////////////////////////////////////////
  // Insertion and traversals
  ////////////////////////////////////////////////////////////////////////

  Bst psylv(Word const& w) {
    Bst t;
    for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) {
      t = t.inserted(*it);
    }
    return t;
  }

  namespace {
    void infix_into(Bst const& t, NodeId id, std::vector<NodeId>& out) {
      if (id == kNoNode) {
        return;
      }
      infix_into(t, t.left(id), out);
      out.push_back(id);
      infix_into(t, t.right(id), out);
    }

    void postfix_into(Bst const&           t,
                      NodeId               id,
                      NodeId               prune,
                      std::vector<NodeId>& out) {
      if (id == kNoNode || id == prune) {
        return;
      }
      postfix_into(t, t.left(id), prune, out);
      postfix_into(t, t.right(id), prune, out);
      out.push_back(id);
    }

    std::vector<Visit> visits(Bst const& t, std::vector<NodeId> const& ids) {
      std::vector<Visit> out;
      out.reserve(ids.size());
      for (NodeId id : ids) {
        out.push_back(Visit{t.label(id), t.locator(id)});
      }
      return out;
    }
  }  // namespace

  std::vector<NodeId> infix_nodes(Bst const& t) {
    std::vector<NodeId> out;
    infix_into(t, t.root(), out);
    return out;
  }

  std::vector<NodeId> postfix_nodes(Bst const& t, NodeId from) {
    std::vector<NodeId> out;
    postfix_into(t, from, kNoNode, out);
    return out;
  }

  std::vector<Visit> infix(Bst const& t) {
    return visits(t, infix_nodes(t));
  }

  std::vector<Visit> postfix(Bst const& t) {
    return visits(t, postfix_nodes(t, t.root()));
  }

  Word subtree_reading(Bst const& t, NodeId at, NodeId prune) {
    std::vector<NodeId> ids;
    postfix_into(t, at, prune, ids);
    Word w;
    for (NodeId id : ids) {
      w.push_back(t.label(id));
    }
    return w;
  }

  Word canonical_reading(Bst const& t) {
    return subtree_reading(t, t.root());
  }

  namespace {
    // All interleavings of a and b, each followed by `tail`.
    void shuffles(Word const&          a,
                  Word const&          b,
                  Symbol               tail,
                  std::vector<Symbol>& buf,
                  std::size_t          i,
                  std::size_t          j,
                  std::set<Word>&      out,
                  std::size_t          cap) {
      if (i == a.size() && j == b.size()) {
        buf.push_back(tail);
        out.emplace(buf);
        buf.pop_back();
        if (out.size() > cap) {
          throw CapExceeded("too many readings", cap);
        }
        return;
      }
      if (i < a.size()) {
        buf.push_back(a[i]);
        shuffles(a, b, tail, buf, i + 1, j, out, cap);
        buf.pop_back();
      }
      if (j < b.size()) {
        buf.push_back(b[j]);
        shuffles(a, b, tail, buf, i, j + 1, out, cap);
        buf.pop_back();
      }
    }

    std::set<Word> readings_at(Bst const& t, NodeId id, std::size_t cap) {
      if (id == kNoNode) {
        return {Word{}};
      }
      std::set<Word> const lhs = readings_at(t, t.left(id), cap);
      std::set<Word> const rhs = readings_at(t, t.right(id), cap);
      std::set<Word>       out;
      std::vector<Symbol>  buf;
      for (Word const& l : lhs) {
        for (Word const& r : rhs) {
          shuffles(l, r, t.label(id), buf, 0, 0, out, cap);
        }
      }
      return out;
    }
  }  // namespace

  std::set<Word> readings(Bst const& t, std::size_t cap) {
    if (cap == 0) {
      throw InputError("readings cap must be positive");
    }
    if (t.empty()) {
      return {Word{}};
    }
    return readings_at(t, t.root(), cap);
  }

  std::vector<NodeId> left_path_nodes(Bst const& t, NodeId from) {
    std::vector<NodeId> out;
    for (NodeId id = from; id != kNoNode; id = t.left(id)) {
      out.push_back(id);
    }
    return out;
  }

  std::vector<NodeLocator> left_child_path(Bst const& t) {
    if (t.empty()) {
      throw InputError("the empty tree has no path of left child nodes");
    }
    std::vector<NodeLocator> out;
    for (NodeId id : left_path_nodes(t, t.root())) {
      out.push_back(t.locator(id));
    }
    return out;
  }

  Bst complete_subtree(Bst const& t, NodeLocator const& x) {
    return t.subtree(t.resolve(x));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rooted subtrees
  ////////////////////////////////////////////////////////////////////////

  RootedSubtree RootedSubtree::single(Bst const& t, NodeLocator const& at) {
    return RootedSubtree{at, Bst::leaf(t.label(t.resolve(at)))};
  }

  RootedSubtree RootedSubtree::complete(Bst const& t, NodeLocator const& at) {
    return RootedSubtree{at, complete_subtree(t, at)};
  }

  bool pattern_at(Bst const& t, NodeId at, Bst const& pattern) {
    std::function<bool(NodeId, NodeId)> match = [&](NodeId p, NodeId x) {
      if (p == kNoNode) {
        return true;
      }
      if (x == kNoNode || pattern.label(p) != t.label(x)) {
        return false;
      }
      return match(pattern.left(p), t.left(x))
             && match(pattern.right(p), t.right(x));
    };
    return !pattern.empty() && match(pattern.root(), at);
  }

  namespace {
    // The node of t matching the end of the pattern's extreme path in
    // direction d, starting from b's root.
    NodeId extreme_node(Bst const& t, RootedSubtree const& b, Dir d) {
      NodeId at = t.resolve(b.root);
      if (!pattern_at(t, at, b.pattern)) {
        throw InvalidLocatorError("subtree pattern " + to_string(b.pattern)
                                  + " does not appear at \""
                                  + to_string(b.root) + "\"");
      }
      for (NodeId p = b.pattern.root(); b.pattern.child(p, d) != kNoNode;
           p        = b.pattern.child(p, d)) {
        at = t.child(at, d);
      }
      return at;
    }
  }  // namespace

  Bst left_minimal(Bst const& t, RootedSubtree const& b) {
    return t.subtree(t.left(extreme_node(t, b, Dir::left)));
  }

  Bst right_maximal(Bst const& t, RootedSubtree const& b) {
    return t.subtree(t.right(extreme_node(t, b, Dir::right)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Bst const& t) {
    std::string                       out;
    std::function<void(NodeId)> write = [&](NodeId id) {
      if (id == kNoNode) {
        out.push_back('_');
        return;
      }
      out += std::to_string(t.label(id));
      out.push_back('(');
      write(t.left(id));
      out.push_back(',');
      write(t.right(id));
      out.push_back(')');
    };
    write(t.root());
    return out;
  }

  namespace {
    class TreeParser {
     public:
      explicit TreeParser(std::string_view text) : text_(text) {}

      Bst parse() {
        Bst t = tree();
        if (pos_ != text_.size()) {
          fail("trailing characters");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw InputError("malformed tree \"" + std::string(text_) + "\" at "
                         + std::to_string(pos_) + ": " + why);
      }

      void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      Bst tree() {
        if (pos_ < text_.size() && text_[pos_] == '_') {
          ++pos_;
          return Bst{};
        }
        Symbol label = 0;
        auto [ptr, ec] = std::from_chars(
            text_.data() + pos_, text_.data() + text_.size(), label);
        if (ec != std::errc() || label == 0) {
          fail("expected a positive label or '_'");
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        expect('(');
        Bst l = tree();
        expect(',');
        Bst r = tree();
        expect(')');
        return Bst::make(label, l, r);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Bst parse_tree(std::string_view text) {
    return TreeParser(text).parse();
  }

  std::string to_dot(Bst const& t, std::string_view name) {
    std::string out = "digraph " + std::string(name) + " {\n";
    out += "  node [shape=circle];\n";
    int invisible = 0;
    for (NodeId id : postfix_nodes(t, t.root())) {
      out += "  n" + std::to_string(id) + " [label=\""
             + std::to_string(t.label(id)) + "\"];\n";
    }
    for (NodeId id : postfix_nodes(t, t.root())) {
      bool const has_l = t.left(id) != kNoNode, has_r = t.right(id) != kNoNode;
      if (!has_l && !has_r) {
        continue;
      }
      for (Dir d : {Dir::left, Dir::right}) {
        NodeId c = t.child(id, d);
        if (c != kNoNode) {
          out += "  n" + std::to_string(id) + " -> n" + std::to_string(c)
                 + ";\n";
        } else {
          // keeps a lone child on its correct side
          std::string ghost = "x" + std::to_string(invisible++);
          out += "  " + ghost + " [style=invis];\n";
          out += "  n" + std::to_string(id) + " -> " + ghost
                 + " [style=invis];\n";
        }
      }
    }
    out += "}\n";
    return out;
  }

  std::string render_ascii(Bst const& t) {
    if (t.empty()) {
      return "_\n";
    }
    std::string                              out;
    std::function<void(NodeId, std::size_t)> draw = [&](NodeId      id,
                                                        std::size_t depth) {
      if (id == kNoNode) {
        return;
      }
      draw(t.right(id), depth + 1);
      out += std::string(depth * 4, ' ') + std::to_string(t.label(id)) + "\n";
      draw(t.left(id), depth + 1);
    };
    draw(t.root(), 0);
    return out;
  }

  std::size_t BstHash::operator()(Bst const& t) const {
    // the postfix reading determines the tree
    return WordHash{}(canonical_reading(t));
  }

}  // namespace sylv
