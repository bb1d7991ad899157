#ifndef SYLV_SHIFT_PATH_HPP
#define SYLV_SHIFT_PATH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylv/bst.hpp"
#include "sylv/monoid.hpp"
#include "sylv/shift_graph.hpp"

// Constructive n-step cyclic shift paths between standard trees.
//
// Fix standard trees T and U on n nodes and let u_1, ..., u_n be the nodes of
// U in postfix order. Write B_h for the complete subtree of U at u_h, and
// U_h^top for the nodes among u_1..u_h that are not below another of them.
// The path T = T_0 ~ T_1 ~ ... ~ T_n = U is built so that every T_h (h >= 1)
// satisfies
//
//   P1  B_h sits at the root of T_h (same nodes, same shape);
//   P2  the subtrees B_i for u_i in U_h^top sit, intact and in decreasing
//       order of i, on the path of left child nodes from the root of T_h.
//
// Each step is a single cyclic shift psylv(xy) ~ psylv(yx) whose words are
// assembled from readings of pieces of T_h; which pieces depends on how
// u_h and u_{h+1} sit in U (see StepKind). Every structural claim used to
// assemble a step is checked at runtime; a failure raises InternalError with
// the offending trees.
namespace sylv {

  enum class StepCase { base, case1, case2a, case2b, case3, case4a, case4b };

  // Relative position of u_h and u_{h+1} in U:
  //   case1  u_h is a left child and u_{h+1} is in the right subtree of its
  //          parent (u_{h+1} is then a leaf);
  //   case2  u_h is the right child of u_{h+1}, whose left subtree is not
  //          empty;
  //   case3  u_h is the left child of u_{h+1};
  //   case4  u_h is the right child of u_{h+1}, whose left subtree is empty.
  enum class StepKind { case1, case2, case3, case4 };

  [[nodiscard]] std::string_view to_string(StepCase c);
  [[nodiscard]] std::string_view to_string(StepKind k);
  [[nodiscard]] StepCase         parse_step_case(std::string_view text);

  struct TraversalState {
    std::size_t         step = 0;  // h
    std::vector<Symbol> visited;   // u_1, ..., u_h
    std::vector<Symbol> tops;      // U_h^top, in increasing order of index
    Bst                 current;   // B_h
  };

  // 1 <= h <= n; throws InputError otherwise or if U is not standard.
  [[nodiscard]] TraversalState traversal_state(Bst const& U, std::size_t h);

  // 1 <= h < n. Throws InternalError if no case applies, which would mean
  // the postfix order was computed wrongly.
  [[nodiscard]] StepKind classify_step(Bst const& U, std::size_t h);

  struct ShiftStep {
    ShiftWitness witness;
    Bst          next;
    StepCase     tag;
  };

  // Factor the canonical reading of T as w u_1 w' and shift to w' w u_1:
  // the witness is x = w u_1, y = w'. The new tree has root u_1.
  [[nodiscard]] ShiftStep base_step(Bst const& T, Symbol u1);

  // From T_h satisfying P1 and P2 to T_{h+1} satisfying them. Readings of the
  // designated pieces are their postfix readings.
  [[nodiscard]] ShiftStep induction_step(Bst const& Th, Bst const& U, std::size_t h);

  // False for non-standard inputs, mismatched sizes or h outside 1..n.
  [[nodiscard]] bool verify_P1P2(Bst const& Th, Bst const& U, std::size_t h);

  struct PathStep {
    SylvElement  pre;
    ShiftWitness witness;
    SylvElement  post;
    StepCase     tag;
  };

  struct PathCertificate {
    std::vector<PathStep> steps;

    [[nodiscard]] std::size_t size() const noexcept {
      return steps.size();
    }
  };

  // Exactly n steps (trivial shifts included). Throws NotStandardError or
  // InputError on bad arguments.
  [[nodiscard]] PathCertificate shift_path(SylvElement const& T, SylvElement const& U);

  // Independent re-check of a certificate against its endpoints: length,
  // chaining, every witness, and P1/P2 after each step. Returns a
  // description of the first problem, or nothing if the certificate holds.
  [[nodiscard]] std::optional<std::string>
  check_certificate(PathCertificate const& cert, SylvElement const& T, SylvElement const& U);

  // The trees T_0, ..., T_n with consecutive repeats removed. Display only.
  [[nodiscard]] std::vector<Bst> distinct_trees(PathCertificate const& cert);

  // Human-readable, one shift per line: psylv(x·y) ~ psylv(y·x).
  [[nodiscard]] std::string transcript(PathCertificate const& cert);

}  // namespace sylv

#endif  // SYLV_SHIFT_PATH_HPP
