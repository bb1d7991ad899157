#include "sylv/shift_path.hpp"

#include <algorithm>

#include "sylv/error.hpp"

namespace sylv {

  std::string_view to_string(StepCase c) {
    switch (c) {
      case StepCase::base:
        return "base";
      case StepCase::case1:
        return "case1";
      case StepCase::case2a:
        return "case2a";
      case StepCase::case2b:
        return "case2b";
      case StepCase::case3:
        return "case3";
      case StepCase::case4a:
        return "case4a";
      case StepCase::case4b:
        return "case4b";
    }
    return "?";
  }

  std::string_view to_string(StepKind k) {
    switch (k) {
      case StepKind::case1:
        return "case1";
      case StepKind::case2:
        return "case2";
      case StepKind::case3:
        return "case3";
      case StepKind::case4:
        return "case4";
    }
    return "?";
  }

  StepCase parse_step_case(std::string_view text) {
    for (StepCase c : {StepCase::base,
                       StepCase::case1,
                       StepCase::case2a,
                       StepCase::case2b,
                       StepCase::case3,
                       StepCase::case4a,
                       StepCase::case4b}) {
      if (to_string(c) == text) {
        return c;
      }
    }
    throw InputError("unknown step case \"" + std::string(text) + "\"");
  }

  namespace {

    // Labels of the complete subtree at `id`, as the closed interval they
    // occupy (complete subtrees of a standard tree hold consecutive labels).
    struct Span {
      Symbol lo;
      Symbol hi;
    };

    Span span_of(Bst const& t, NodeId id) {
      NodeId lo = id, hi = id;
      while (t.left(lo) != kNoNode) {
        lo = t.left(lo);
      }
      while (t.right(hi) != kNoNode) {
        hi = t.right(hi);
      }
      return {t.label(lo), t.label(hi)};
    }

    // Standard trees: one node per label.
    NodeId node_of(Bst const& t, Symbol a) {
      NodeId id = t.find(a);
      if (id == kNoNode) {
        throw InternalError("label " + std::to_string(a) + " missing from "
                            + to_string(t));
      }
      return id;
    }

    std::vector<Symbol> postfix_labels(Bst const& t) {
      std::vector<Symbol> out;
      for (NodeId id : postfix_nodes(t, t.root())) {
        out.push_back(t.label(id));
      }
      return out;
    }

    void require(bool cond, std::string_view claim, Bst const& Th, Bst const& U,
                 std::size_t h) {
      if (!cond) {
        throw InternalError("step " + std::to_string(h) + ": " + std::string(claim)
                            + " fails for T_h = " + to_string(Th)
                            + ", U = " + to_string(U));
      }
    }

    void require_standard(Bst const& t, std::string_view what) {
      if (t.empty() || !t.is_standard()) {
        throw NotStandardError(std::string(what) + " must be a non-empty "
                               "standard tree, got " + to_string(t));
      }
    }

  }  // namespace

  TraversalState traversal_state(Bst const& U, std::size_t h) {
    require_standard(U, "U");
    if (h < 1 || h > U.size()) {
      throw InputError("step " + std::to_string(h) + " outside 1.."
                       + std::to_string(U.size()));
    }
    auto const order = postfix_labels(U);
    TraversalState state;
    state.step = h;
    state.visited.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(h));
    for (std::size_t i = 0; i < h; ++i) {
      NodeId const node  = node_of(U, order[i]);
      bool         below = false;
      for (std::size_t j = 0; j < h && !below; ++j) {
        NodeId const other = node_of(U, order[j]);
        below = other != node && U.in_subtree(node, other);
      }
      if (!below) {
        state.tops.push_back(order[i]);
      }
    }
    state.current = U.subtree(node_of(U, order[h - 1]));
    return state;
  }

  StepKind classify_step(Bst const& U, std::size_t h) {
    require_standard(U, "U");
    if (h < 1 || h >= U.size()) {
      throw InputError("induction step " + std::to_string(h) + " outside 1.."
                       + std::to_string(U.size() - 1));
    }
    auto const   order = postfix_labels(U);
    NodeId const a     = node_of(U, order[h - 1]);
    NodeId const b     = node_of(U, order[h]);
    NodeId const p     = U.parent(a);
    if (p == b) {
      if (U.left(b) == a) {
        return StepKind::case3;
      }
      return U.left(b) != kNoNode ? StepKind::case2 : StepKind::case4;
    }
    if (p != kNoNode && U.left(p) == a && U.right(p) != kNoNode
        && U.in_subtree(b, U.right(p))) {
      return StepKind::case1;
    }
    throw InternalError("consecutive postfix nodes "
                        + std::to_string(U.label(a)) + ", "
                        + std::to_string(U.label(b)) + " of " + to_string(U)
                        + " match no case");
  }

  ShiftStep base_step(Bst const& T, Symbol u1) {
    require_standard(T, "T");
    Word const  reading = canonical_reading(T);
    auto const  it      = std::find(reading.begin(), reading.end(), u1);
    if (it == reading.end()) {
      throw InputError("symbol " + std::to_string(u1) + " does not occur in "
                       + to_string(T));
    }
    auto const   cut = static_cast<std::size_t>(it - reading.begin()) + 1;
    ShiftWitness witness{reading.prefix(cut), reading.suffix_from(cut)};
    Bst          next = psylv(witness.y + witness.x);
    if (next.label(next.root()) != u1) {
      throw InternalError("base step did not bring " + std::to_string(u1)
                          + " to the root of " + to_string(next));
    }
    return ShiftStep{std::move(witness), std::move(next), StepCase::base};
  }

  ShiftStep induction_step(Bst const& Th, Bst const& U, std::size_t h) {
    StepKind const kind = classify_step(U, h);
    if (!verify_P1P2(Th, U, h)) {
      throw InternalError("T_" + std::to_string(h) + " = " + to_string(Th)
                          + " violates P1/P2 for U = " + to_string(U));
    }
    auto const   order = postfix_labels(U);
    Symbol const uh = order[h - 1], un = order[h];

    // B_h in U, and where it sits in T_h (at the root, by P1)
    NodeId const bh_in_u = node_of(U, uh);
    Span const   bh      = span_of(U, bh_in_u);
    Word const   bh_word = subtree_reading(U, bh_in_u);

    NodeId const u       = node_of(Th, un);
    NodeId const l_root  = Th.left(node_of(Th, bh.lo));   // left-minimal of B_h
    NodeId const r_root  = Th.right(node_of(Th, bh.hi));  // right-maximal of B_h
    Word const   unw{un};

    ShiftWitness w;
    StepCase     tag{};
    switch (kind) {
      case StepKind::case1: {
        require(r_root != kNoNode && Th.in_subtree(u, r_root),
                "u_{h+1} lies in the right-maximal subtree of B_h", Th, U, h);
        Word const lambda = subtree_reading(Th, l_root);
        Word const delta  = subtree_reading(Th, r_root, u);
        Word const alpha  = subtree_reading(Th, Th.left(u));
        Word const beta   = subtree_reading(Th, Th.right(u));
        w   = {alpha + beta + unw, delta + lambda + bh_word};
        tag = StepCase::case1;
        break;
      }
      case StepKind::case2: {
        NodeId const g_in_u  = U.left(node_of(U, un));
        Span const   bg      = span_of(U, g_in_u);
        Word const   bg_word = subtree_reading(U, g_in_u);
        require(bg.hi + 1 == un && un + 1 == bh.lo,
                "u_{h+1} is the unique symbol between B_g and B_h", Th, U, h);
        NodeId const g       = node_of(Th, U.label(g_in_u));
        NodeId const bh_left = node_of(Th, bh.lo);
        Word const   lambda  = subtree_reading(Th, Th.left(node_of(Th, bg.lo)));
        Word const   delta   = subtree_reading(Th, r_root);
        bool const   on_path = Th.left(bh_left) == u && Th.left(u) == g;
        bool const   in_rmax = Th.left(bh_left) == g
                             && Th.right(node_of(Th, bg.hi)) == u;
        require(on_path != in_rmax,
                "u_{h+1} is either between B_g and B_h or right-maximal in B_g",
                Th, U, h);
        if (on_path) {
          require(Th.right(u) == kNoNode,
                  "u_{h+1} is the unique node between B_g and B_h", Th, U, h);
          w   = {lambda + bg_word + unw, delta + bh_word};
          tag = StepCase::case2a;
        } else {
          require(Th.left(u) == kNoNode && Th.right(u) == kNoNode,
                  "u_{h+1} is the unique node right-maximal in B_g", Th, U, h);
          w   = {unw, lambda + bg_word + delta + bh_word};
          tag = StepCase::case2b;
        }
        break;
      }
      case StepKind::case3: {
        require(r_root != kNoNode && Th.in_subtree(u, r_root) && Th.left(u) == kNoNode,
                "u_{h+1} is the left-most node of the right-maximal subtree of B_h",
                Th, U, h);
        Word const lambda = subtree_reading(Th, l_root);
        Word const delta  = subtree_reading(Th, r_root, u);
        Word const beta   = subtree_reading(Th, Th.right(u));
        w   = {beta + unw, delta + lambda + bh_word};
        tag = StepCase::case3;
        break;
      }
      case StepKind::case4: {
        require(l_root != kNoNode && Th.in_subtree(u, l_root) && Th.right(u) == kNoNode,
                "u_{h+1} is the right-most node of the left-minimal subtree of B_h",
                Th, U, h);
        Word const delta = subtree_reading(Th, r_root);
        if (u == l_root) {
          Word const lambda = subtree_reading(Th, Th.left(u));
          w   = {lambda + unw, delta + bh_word};
          tag = StepCase::case4a;
        } else {
          Word const zeta   = subtree_reading(Th, Th.left(u));
          Word const lambda = subtree_reading(Th, l_root, u);
          w   = {zeta + unw, lambda + delta + bh_word};
          tag = StepCase::case4b;
        }
        break;
      }
    }

    require(psylv(w.x + w.y) == Th,
            std::string(to_string(tag)) + " factorisation x = " + to_string(w.x)
                + ", y = " + to_string(w.y) + " is a reading of T_h",
            Th, U, h);
    Bst next = psylv(w.y + w.x);
    require(verify_P1P2(next, U, h + 1),
            "T_{h+1} = " + to_string(next) + " satisfies P1/P2", Th, U, h);
    return ShiftStep{std::move(w), std::move(next), tag};
  }

  bool verify_P1P2(Bst const& Th, Bst const& U, std::size_t h) {
    if (U.empty() || !U.is_standard() || !Th.is_standard()
        || Th.size() != U.size() || h < 1 || h > U.size()) {
      return false;
    }
    TraversalState const state = traversal_state(U, h);
    // P1
    if (!pattern_at(Th, Th.root(), state.current)) {
      return false;
    }
    // P2: walk down the left path meeting the tops from newest to oldest
    std::vector<NodeId> const path = left_path_nodes(Th, Th.root());
    std::size_t               pos  = 0;
    for (auto it = state.tops.rbegin(); it != state.tops.rend(); ++it) {
      NodeId const at = Th.find(*it);
      auto const   on = std::find(path.begin() + static_cast<std::ptrdiff_t>(pos),
                                  path.end(), at);
      if (on == path.end()
          || !pattern_at(Th, at, U.subtree(U.find(*it)))) {
        return false;
      }
      pos = static_cast<std::size_t>(on - path.begin()) + 1;
    }
    return true;
  }

  PathCertificate shift_path(SylvElement const& T, SylvElement const& U) {
    require_standard(T.tree(), "T");
    require_standard(U.tree(), "U");
    if (T.tree().size() != U.tree().size()) {
      throw InputError("trees with " + std::to_string(T.tree().size()) + " and "
                       + std::to_string(U.tree().size())
                       + " nodes lie in different components");
    }
    if (T.rank() != U.rank()) {
      throw RankError("elements of ranks " + std::to_string(T.rank()) + " and "
                      + std::to_string(U.rank()));
    }
    std::size_t const n     = U.tree().size();
    std::size_t const rank  = T.rank();
    auto const        order = postfix_labels(U.tree());

    PathCertificate cert;
    ShiftStep       step = base_step(T.tree(), order[0]);
    if (!verify_P1P2(step.next, U.tree(), 1)) {
      throw InternalError("T_1 = " + to_string(step.next)
                          + " violates P1/P2 for U = " + to_string(U.tree()));
    }
    cert.steps.push_back({T, step.witness, SylvElement(rank, step.next), step.tag});
    for (std::size_t h = 1; h < n; ++h) {
      SylvElement const& pre = cert.steps.back().post;
      step                   = induction_step(pre.tree(), U.tree(), h);
      cert.steps.push_back({pre, step.witness, SylvElement(rank, step.next), step.tag});
    }
    if (!(cert.steps.back().post == U)) {
      throw InternalError("path ended at " + to_string(cert.steps.back().post.tree())
                          + " instead of " + to_string(U.tree()));
    }
    return cert;
  }

  std::optional<std::string>
  check_certificate(PathCertificate const& cert, SylvElement const& T, SylvElement const& U) {
    std::size_t const n = U.tree().size();
    if (cert.size() != n) {
      return "certificate has " + std::to_string(cert.size()) + " steps, expected "
             + std::to_string(n);
    }
    if (n == 0) {
      return std::nullopt;
    }
    if (!(cert.steps.front().pre == T)) {
      return "first step does not start at T";
    }
    if (!(cert.steps.back().post == U)) {
      return "last step does not end at U";
    }
    for (std::size_t i = 0; i < n; ++i) {
      PathStep const& s = cert.steps[i];
      if (i > 0 && !(cert.steps[i - 1].post == s.pre)) {
        return "steps " + std::to_string(i) + " and " + std::to_string(i + 1)
               + " do not chain";
      }
      if (!s.witness.certifies(s.pre.tree(), s.post.tree())) {
        return "witness x = " + to_string(s.witness.x) + ", y = "
               + to_string(s.witness.y) + " of step " + std::to_string(i + 1)
               + " does not recompute";
      }
      if (!verify_P1P2(s.post.tree(), U.tree(), i + 1)) {
        return "T_" + std::to_string(i + 1) + " = " + to_string(s.post.tree())
               + " violates P1/P2";
      }
    }
    return std::nullopt;
  }

  std::vector<Bst> distinct_trees(PathCertificate const& cert) {
    std::vector<Bst> out;
    if (cert.steps.empty()) {
      return out;
    }
    out.push_back(cert.steps.front().pre.tree());
    for (auto const& s : cert.steps) {
      if (!(s.post.tree() == out.back())) {
        out.push_back(s.post.tree());
      }
    }
    return out;
  }

  std::string transcript(PathCertificate const& cert) {
    auto show = [](Word const& w) {
      return w.empty() ? std::string("ε") : to_string(w);
    };
    std::string out;
    for (std::size_t h = 0; h < cert.size(); ++h) {
      PathStep const& s = cert.steps[h];
      if (h == 0) {
        out += "T_0 = " + to_string(s.pre.tree()) + "\n";
      }
      out += "      psylv(" + show(s.witness.x) + " · " + show(s.witness.y)
             + ") ~ psylv(" + show(s.witness.y) + " · " + show(s.witness.x)
             + ")    [" + std::string(to_string(s.tag)) + "]\n";
      out += "T_" + std::to_string(h + 1) + " = " + to_string(s.post.tree()) + "\n";
    }
    return out;
  }

}  // namespace sylv
