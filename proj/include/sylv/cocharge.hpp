#ifndef SYLV_COCHARGE_HPP
#define SYLV_COCHARGE_HPP

#include <cstddef>
#include <vector>

#include "sylv/monoid.hpp"
#include "sylv/word.hpp"

namespace sylv {

  // Cocharge sequence of a standard word: labels[i] is the label given to
  // symbol i + 1. Starts at 0, and each term equals its predecessor or
  // exceeds it by one.
  struct CochargeSeq {
    std::vector<std::size_t> labels;

    [[nodiscard]] std::size_t size() const noexcept {
      return labels.size();
    }
    // The classical cocharge statistic.
    [[nodiscard]] std::size_t sum() const noexcept;
    // Checks the shape invariants above.
    [[nodiscard]] bool well_formed() const noexcept;

    friend bool operator==(CochargeSeq const&, CochargeSeq const&) = default;
  };

  // Label 1 with 0. Having labelled i with k, look for i + 1 by scanning
  // backwards from i, wrapping from the first position to the last: i + 1
  // gets k + 1 if it is met before the wrap, and k otherwise. In other
  // words, the label increases exactly when i + 1 occurs to the left of i.
  //
  // Throws NotStandardError unless u is standard and non-empty.
  [[nodiscard]] CochargeSeq cochseq(Word const& u);

  // The sequence of any reading of a standard tree. With `verify_all`, every
  // reading is computed and an InternalError is thrown if two disagree.
  [[nodiscard]] CochargeSeq cochseq(SylvElement const& t,
                                    bool verify_all = false,
                                    std::size_t readings_cap = kDefaultReadingsCap);

  // max_i |cochseq(s)[i] - cochseq(t)[i]|. One cyclic shift moves each
  // component by at most one, so this bounds the distance between s and t
  // in the cyclic shift graph from below.
  [[nodiscard]] std::size_t cocharge_lower_bound(SylvElement const& s,
                                                 SylvElement const& t);

  // max_i |a[i] - b[i]| for sequences of equal length.
  [[nodiscard]] std::size_t max_component_gap(CochargeSeq const& a,
                                              CochargeSeq const& b);

}  // namespace sylv

#endif  // SYLV_COCHARGE_HPP
