#ifndef SYLV_WORD_HPP
#define SYLV_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylv {

  // Alphabet symbols are 1-based: the rank-n alphabet is {1 < 2 < ... < n}.
  using Symbol = std::uint32_t;

  // A finite word over the ordered alphabet. Plain value type.
  class Word {
   public:
    using value_type     = Symbol;
    using const_iterator = std::vector<Symbol>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    template <typename It>
    Word(It first, It last) : symbols_(first, last) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return symbols_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return symbols_.empty();
    }
    [[nodiscard]] Symbol operator[](std::size_t i) const {
      return symbols_[i];
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return symbols_.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return symbols_.end();
    }
    [[nodiscard]] std::span<Symbol const> symbols() const noexcept {
      return symbols_;
    }

    void push_back(Symbol a) {
      symbols_.push_back(a);
    }
    Word& operator+=(Word const& other) {
      symbols_.insert(symbols_.end(), other.begin(), other.end());
      return *this;
    }

    // The factor of length `len` starting at `pos`.
    [[nodiscard]] Word factor(std::size_t pos, std::size_t len) const {
      return Word(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                  symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    }
    [[nodiscard]] Word prefix(std::size_t len) const {
      return factor(0, len);
    }
    [[nodiscard]] Word suffix_from(std::size_t pos) const {
      return factor(pos, size() - pos);
    }

    // Largest symbol, 0 for the empty word.
    [[nodiscard]] Symbol max_symbol() const noexcept;

    friend bool operator==(Word const&, Word const&)  = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Symbol> symbols_;
  };

  [[nodiscard]] inline Word operator+(Word lhs, Word const& rhs) {
    lhs += rhs;
    return lhs;
  }

  // Multiplicities of each symbol; counts[i] is the number of occurrences of
  // symbol i + 1. The length of `counts` is the rank.
  struct Evaluation {
    std::vector<std::size_t> counts;

    [[nodiscard]] std::size_t rank() const noexcept {
      return counts.size();
    }
    [[nodiscard]] std::size_t total() const noexcept;

    friend bool operator==(Evaluation const&, Evaluation const&)  = default;
    friend auto operator<=>(Evaluation const&, Evaluation const&) = default;
  };

  [[nodiscard]] Evaluation operator+(Evaluation const& lhs,
                                     Evaluation const& rhs);

  // Throws RankError if a symbol is 0 or exceeds `rank`.
  void check_rank(Word const& w, std::size_t rank);

  [[nodiscard]] Evaluation evaluation(Word const& w, std::size_t rank);

  // True iff w is a permutation of 1..|w|. The empty word is standard.
  [[nodiscard]] bool is_standard(Word const& w);

  // The standard word 1 2 ... n and its reverse n ... 2 1.
  [[nodiscard]] Word increasing_word(std::size_t n);
  [[nodiscard]] Word decreasing_word(std::size_t n);

  // Text format. Compact digits when every symbol is at most 9 ("13254");
  // otherwise dot-delimited decimals ("1.3.12.5"). A single symbol above 9
  // is written with a trailing dot ("12.") so that it reads back unchanged.
  // The empty word is "" (the parser also takes "ε").
  [[nodiscard]] std::string to_string(Word const& w);
  [[nodiscard]] Word        parse_word(std::string_view text);

  // Comma-separated counts, e.g. "2,1,0,2".
  [[nodiscard]] std::string to_string(Evaluation const& e);
  [[nodiscard]] Evaluation  parse_evaluation(std::string_view text);

  // All words of a given evaluation, in lexicographic order.
  [[nodiscard]] std::vector<Word> words_with_evaluation(Evaluation const& e);

  // All words of length `len` over the rank-`rank` alphabet, lexicographic.
  [[nodiscard]] std::vector<Word> all_words(std::size_t rank, std::size_t len);

  // All evaluations of rank `rank` with total exactly `total`.
  [[nodiscard]] std::vector<Evaluation> evaluations(std::size_t rank,
                                                    std::size_t total);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace sylv

#endif  // SYLV_WORD_HPP
