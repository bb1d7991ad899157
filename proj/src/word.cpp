#include "sylv/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sylv/error.hpp"

namespace sylv {

  Symbol Word::max_symbol() const noexcept {
    return symbols_.empty() ? 0 : *std::max_element(begin(), end());
  }

  std::size_t Evaluation::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  }

  Evaluation operator+(Evaluation const& lhs, Evaluation const& rhs) {
    if (lhs.rank() != rhs.rank()) {
      throw RankError("cannot add evaluations of ranks "
                      + std::to_string(lhs.rank()) + " and "
                      + std::to_string(rhs.rank()));
    }
    Evaluation result = lhs;
    for (std::size_t i = 0; i < rhs.rank(); ++i) {
      result.counts[i] += rhs.counts[i];
    }
    return result;
  }

  void check_rank(Word const& w, std::size_t rank) {
    for (Symbol a : w) {
      if (a == 0 || a > rank) {
        throw RankError("symbol " + std::to_string(a)
                        + " is outside the alphabet of rank "
                        + std::to_string(rank));
      }
    }
  }

  Evaluation evaluation(Word const& w, std::size_t rank) {
    check_rank(w, rank);
    Evaluation e{std::vector<std::size_t>(rank, 0)};
    for (Symbol a : w) {
      ++e.counts[a - 1];
    }
    return e;
  }

  bool is_standard(Word const& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (Symbol a : w) {
      if (a == 0 || a > w.size() || seen[a]) {
        return false;
      }
      seen[a] = true;
    }
    return true;
  }

  Word increasing_word(std::size_t n) {
    std::vector<Symbol> s(n);
    std::iota(s.begin(), s.end(), Symbol{1});
    return Word(std::move(s));
  }

  Word decreasing_word(std::size_t n) {
    std::vector<Symbol> s(n);
    std::iota(s.rbegin(), s.rend(), Symbol{1});
    return Word(std::move(s));
  }

  std::string to_string(Word const& w) {
    std::string out;
    if (w.max_symbol() <= 9) {
      for (Symbol a : w) {
        out.push_back(static_cast<char>('0' + a));
      }
      return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out.push_back('.');
      }
      out += std::to_string(w[i]);
    }
    if (w.size() == 1) {
      out.push_back('.');
    }
    return out;
  }

  namespace {
    Symbol parse_symbol(std::string_view tok, std::string_view whole) {
      Symbol value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()
          || value == 0) {
        throw InputError("malformed word \"" + std::string(whole)
                         + "\": bad symbol \"" + std::string(tok) + "\"");
      }
      return value;
    }
  }  // namespace

  Word parse_word(std::string_view text) {
    if (text.empty() || text == "ε") {
      return Word{};
    }
    std::vector<Symbol> symbols;
    if (text.find('.') == std::string_view::npos) {
      for (char c : text) {
        if (c < '1' || c > '9') {
          throw InputError("malformed word \"" + std::string(text)
                           + "\": compact words use the digits 1-9");
        }
        symbols.push_back(static_cast<Symbol>(c - '0'));
      }
      return Word(std::move(symbols));
    }
    std::string_view rest = text;
    // a single trailing dot marks a one-symbol word
    if (rest.back() == '.') {
      rest.remove_suffix(1);
    }
    while (true) {
      auto dot = rest.find('.');
      symbols.push_back(parse_symbol(rest.substr(0, dot), text));
      if (dot == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(dot + 1);
    }
    return Word(std::move(symbols));
  }

  std::string to_string(Evaluation const& e) {
    std::string out;
    for (std::size_t i = 0; i < e.counts.size(); ++i) {
      if (i > 0) {
        out.push_back(',');
      }
      out += std::to_string(e.counts[i]);
    }
    return out;
  }

  Evaluation parse_evaluation(std::string_view text) {
    Evaluation e;
    std::string_view rest = text;
    while (!rest.empty()) {
      auto        comma = rest.find(',');
      auto        tok   = rest.substr(0, comma);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InputError("malformed evaluation \"" + std::string(text) + "\"");
      }
      e.counts.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(comma + 1);
      if (rest.empty()) {
        throw InputError("malformed evaluation \"" + std::string(text) + "\"");
      }
    }
    if (e.counts.empty()) {
      throw InputError("empty evaluation");
    }
    return e;
  }

  std::vector<Word> words_with_evaluation(Evaluation const& e) {
    std::vector<Symbol> symbols;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      symbols.insert(symbols.end(), e.counts[i], static_cast<Symbol>(i + 1));
    }
    std::vector<Word> out;
    do {
      out.emplace_back(symbols);
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return out;
  }

  std::vector<Word> all_words(std::size_t rank, std::size_t len) {
    std::vector<Word>   out;
    std::vector<Symbol> current(len, 1);
    if (rank == 0) {
      if (len == 0) {
        out.emplace_back();
      }
      return out;
    }
    while (true) {
      out.emplace_back(current);
      std::size_t i = len;
      while (i > 0 && current[i - 1] == rank) {
        current[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++current[i - 1];
    }
    return out;
  }

  std::vector<Evaluation> evaluations(std::size_t rank, std::size_t total) {
    std::vector<Evaluation>  out;
    std::vector<std::size_t> counts(rank, 0);
    // compositions of `total` into `rank` parts, lexicographically decreasing
    // in the first part
    auto recurse = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i + 1 == rank) {
        counts[i] = left;
        out.push_back(Evaluation{counts});
        return;
      }
      for (std::size_t c = 0; c <= left; ++c) {
        counts[i] = c;
        self(self, i + 1, left - c);
      }
    };
    if (rank > 0) {
      recurse(recurse, 0, total);
    }
    return out;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Symbol a : w) {
      h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace sylv
