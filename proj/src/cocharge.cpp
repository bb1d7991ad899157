#include "sylv/cocharge.hpp"

#include <numeric>

#include "sylv/error.hpp"

namespace sylv {

  std::size_t CochargeSeq::sum() const noexcept {
    return std::accumulate(labels.begin(), labels.end(), std::size_t{0});
  }

  bool CochargeSeq::well_formed() const noexcept {
    if (labels.empty() || labels[0] != 0) {
      return false;
    }
    for (std::size_t i = 1; i < labels.size(); ++i) {
      if (labels[i] != labels[i - 1] && labels[i] != labels[i - 1] + 1) {
        return false;
      }
    }
    return true;
  }

  CochargeSeq cochseq(Word const& u) {
    if (u.empty() || !is_standard(u)) {
      throw NotStandardError("cocharge sequences need a non-empty standard "
                             "word, got \""
                             + to_string(u) + "\"");
    }
    std::vector<std::size_t> position(u.size() + 1);
    for (std::size_t p = 0; p < u.size(); ++p) {
      position[u[p]] = p;
    }
    CochargeSeq result{std::vector<std::size_t>(u.size(), 0)};
    for (std::size_t i = 1; i < u.size(); ++i) {
      bool const before_wrap = position[i + 1] < position[i];
      result.labels[i]       = result.labels[i - 1] + (before_wrap ? 1 : 0);
    }
    return result;
  }

  CochargeSeq cochseq(SylvElement const& t, bool verify_all, std::size_t readings_cap) {
    if (t.tree().empty() || !t.is_standard()) {
      throw NotStandardError("cocharge sequences need a non-empty standard "
                             "tree, got "
                             + to_string(t.tree()));
    }
    CochargeSeq const seq = cochseq(t.reading());
    if (verify_all) {
      for (Word const& w : readings(t.tree(), readings_cap)) {
        if (cochseq(w) != seq) {
          throw InternalError("readings " + to_string(t.reading()) + " and "
                              + to_string(w) + " of "
                              + to_string(t.tree())
                              + " have different cocharge sequences");
        }
      }
    }
    return seq;
  }

  std::size_t max_component_gap(CochargeSeq const& a, CochargeSeq const& b) {
    if (a.size() != b.size()) {
      throw InputError("cocharge sequences of lengths "
                       + std::to_string(a.size()) + " and "
                       + std::to_string(b.size()) + " are not comparable");
    }
    std::size_t gap = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::size_t const d = a.labels[i] > b.labels[i] ? a.labels[i] - b.labels[i]
                                                      : b.labels[i] - a.labels[i];
      gap = std::max(gap, d);
    }
    return gap;
  }

  std::size_t cocharge_lower_bound(SylvElement const& s, SylvElement const& t) {
    if (s.tree().size() != t.tree().size()) {
      throw InputError("elements with " + std::to_string(s.tree().size())
                       + " and " + std::to_string(t.tree().size())
                       + " nodes lie in different components");
    }
    return max_component_gap(cochseq(s), cochseq(t));
  }

}  // namespace sylv
