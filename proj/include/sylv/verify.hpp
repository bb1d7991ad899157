#ifndef SYLV_VERIFY_HPP
#define SYLV_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylv/monoid.hpp"
#include "sylv/shift_graph.hpp"
#include "sylv/shift_path.hpp"

// Exhaustive desk-scale checks of the combinatorial claims the library is
// built on. Each suite stops at the first counterexample and reports it in a
// form that can be replayed from the command line.
namespace sylv::verify {

  struct Options {
    std::size_t rank   = 4;  // alphabet size for word-based suites
    std::size_t maxlen = 6;  // longest word for word-based suites
    std::size_t n      = 5;  // largest standard size for tree-based suites
    GraphLimits limits;
    std::size_t budget = kDefaultRewriteBudget;
    // Called with short progress messages; may be empty.
    std::function<void(std::string_view)> progress;
  };

  struct Report {
    std::string                suite;
    bool                       passed  = true;
    std::size_t                checked = 0;
    std::string                detail;
    std::optional<std::string> counterexample;
  };

  // Presentation versus insertion: for all words u, v over A_rank of equal
  // length <= maxlen and equal evaluation, rewrite_equivalent(u, v) ==
  // equivalent(u, v).
  [[nodiscard]] Report oracle(Options const& opt);

  // Congruence, multihomogeneity and associativity of multiply, over A_rank
  // with lengths <= maxlen (associativity: total length <= maxlen).
  [[nodiscard]] Report monoid_laws(Options const& opt);

  // Every standard tree on <= n nodes: all readings share one cocharge
  // sequence.
  [[nodiscard]] Report cocharge_congruence(Options const& opt);

  // Every standard word xy of length <= n, every split: cochseq(xy) and
  // cochseq(yx) differ by at most one in each component.
  [[nodiscard]] Report cocharge_cyclic(Options const& opt);

  // Every standard word ua of length <= n with a != 1: cochseq(au) is
  // cochseq(ua) plus one in component a, and agrees elsewhere.
  [[nodiscard]] Report cocharge_rotation(Options const& opt);

  // Every evaluation class over A_rank of total length <= maxlen is one
  // connected component.
  [[nodiscard]] Report connectivity(Options const& opt);

  // For 2 <= k <= n, the standard component has diameter in [k - 1, k].
  // `diameters` (if non-null) receives the exact values.
  [[nodiscard]] Report diameter_bounds(Options const& opt,
                                       std::map<std::size_t, std::size_t>* diameters = nullptr);

  // For k <= n: the increasing and decreasing standard trees are at least
  // k - 1 apart, and every standard pair is at least its cocharge bound
  // apart.
  [[nodiscard]] Report lower_bound(Options const& opt);

  // For k <= n, every ordered pair of standard trees: shift_path returns a
  // certificate that check_certificate accepts, of length k and never
  // shorter than the graph distance. `coverage` (if non-null) counts the
  // step cases used.
  [[nodiscard]] Report paths(Options const& opt,
                             std::map<StepCase, std::size_t>* coverage = nullptr);

  // For m < k <= n: the neighbours of each standard rank-m element agree
  // with those found by splitting every rank-k word that inserts to it.
  [[nodiscard]] Report induced(Options const& opt);

  // Names accepted by run(), in a fixed order.
  [[nodiscard]] std::vector<std::string_view> suite_names();

  // Throws InputError for unknown names.
  [[nodiscard]] Report run(std::string_view name, Options const& opt);

}  // namespace sylv::verify

#endif  // SYLV_VERIFY_HPP
