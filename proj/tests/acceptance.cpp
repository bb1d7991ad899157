// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Every criterion runs even if an earlier one fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sylv/bst.hpp"
#include "sylv/cocharge.hpp"
#include "sylv/shift_graph.hpp"
#include "sylv/shift_path.hpp"
#include "sylv/verify.hpp"

using namespace sylv;

namespace {

  struct Outcome {
    bool        passed = true;
    std::string detail;
  };

  Outcome from_report(verify::Report const& r) {
    Outcome o{r.passed, r.detail};
    if (r.counterexample) {
      o.detail += " counterexample: " + *r.counterexample;
    }
    return o;
  }

  std::string join(std::vector<std::size_t> const& v) {
    std::string out;
    for (std::size_t x : v) {
      out += (out.empty() ? "" : " ") + std::to_string(x);
    }
    return out;
  }

  Outcome golden_insertion() {
    char const* const expected = "4(2(1(1(_,_),_),4(_,_)),5(5(5(_,_),_),6(_,7(_,_))))";
    Bst const         t        = psylv(parse_word("5451761524"));
    return {t == parse_tree(expected) && to_string(t) == expected, to_string(t)};
  }

  Outcome golden_cocharge() {
    CochargeSeq const c = cochseq(parse_word("1246375"));
    return {c.labels == std::vector<std::size_t>{0, 0, 0, 1, 1, 2, 2}, join(c.labels)};
  }

  Outcome endpoints() {
    for (std::size_t n = 1; n <= 7; ++n) {
      SylvElement const inc = element_of(increasing_word(n), n);
      SylvElement const dec = element_of(decreasing_word(n), n);
      std::vector<std::size_t> zeros(n, 0), stairs(n);
      for (std::size_t i = 0; i < n; ++i) {
        stairs[i] = i;
      }
      if (cochseq(inc).labels != zeros || cochseq(dec).labels != stairs
          || cocharge_lower_bound(inc, dec) != n - 1) {
        return {false, "n = " + std::to_string(n)};
      }
    }
    return {true, "n <= 7"};
  }

  Outcome presentation_oracle() {
    verify::Options opt;
    opt.rank   = 4;
    opt.maxlen = 6;
    return from_report(verify::oracle(opt));
  }

  Outcome congruence_invariance() {
    verify::Options opt;
    opt.n = 7;
    return from_report(verify::cocharge_congruence(opt));
  }

  Outcome cyclic_shift_moves() {
    verify::Options opt;
    opt.n = 6;
    return from_report(verify::cocharge_cyclic(opt));
  }

  Outcome connectivity() {
    Outcome     total;
    std::size_t classes = 0;
    for (std::size_t rank = 1; rank <= 4; ++rank) {
      verify::Options opt;
      opt.rank   = rank;
      opt.maxlen = 6;
      auto const r = verify::connectivity(opt);
      classes += r.checked;
      if (!r.passed) {
        return from_report(r);
      }
    }
    total.detail = std::to_string(classes) + " classes, ranks 1..4, length <= 6";
    return total;
  }

  Outcome diameter_bounds() {
    verify::Options                    opt;
    std::map<std::size_t, std::size_t> d;
    opt.n        = 5;
    Outcome o    = from_report(verify::diameter_bounds(opt, &d));
    o.detail     = "";
    for (auto const& [n, v] : d) {
      o.detail += (o.detail.empty() ? "" : ", ") + ("d_" + std::to_string(n)) + " = "
                  + std::to_string(v);
    }
    return o;
  }

  Outcome lower_bound() {
    verify::Options opt;
    opt.n = 5;
    return from_report(verify::lower_bound(opt));
  }

  Outcome paths() {
    verify::Options opt;
    opt.n = 5;
    return from_report(verify::paths(opt));
  }

  Outcome worked_example() {
    SylvElement const T    = element_of(parse_word("13254"), 5);
    SylvElement const U    = element_of(parse_word("23541"), 5);
    auto const        cert = shift_path(T, U);
    char const* const trees[] = {"54132", "12543", "41235", "12354", "23541"};
    if (cert.size() != 5) {
      return {false, "certificate has " + std::to_string(cert.size()) + " steps"};
    }
    for (std::size_t h = 0; h < 5; ++h) {
      if (cert.steps[h].post.tree() != psylv(parse_word(trees[h]))) {
        return {false, "T_" + std::to_string(h + 1) + " = "
                           + to_string(cert.steps[h].post.tree())};
      }
    }
    if (auto problem = check_certificate(cert, T, U)) {
      return {false, *problem};
    }
    // The hand-written sequence: each pair is a word and one of its
    // rotations, and consecutive pairs chain through equal trees.
    std::pair<char const*, char const*> const written[] = {
        {"13254", "54132"}, {"54312", "12543"}, {"54123", "41235"},
        {"41235", "12354"}, {"12354", "23541"}};
    Bst previous = T.tree();
    for (auto const& [from, to] : written) {
      Word const  a = parse_word(from);
      Word const  b = parse_word(to);
      bool        rotation = false;
      for (std::size_t split = 0; split <= a.size(); ++split) {
        rotation = rotation || a.suffix_from(split) + a.prefix(split) == b;
      }
      bool listed = false;
      for (auto const& nb : neighbors(element_of(a, 5))) {
        listed = listed || nb.element.tree() == psylv(b);
      }
      if (psylv(a) != previous || !rotation || !listed) {
        return {false, std::string("written step ") + from + " ~ " + to};
      }
      previous = psylv(b);
    }
    if (previous != U.tree()) {
      return {false, "written sequence does not end at U"};
    }
    return {true, "5 steps, written sequence replays"};
  }

  Outcome induced() {
    verify::Options opt;
    opt.n = 4;
    return from_report(verify::induced(opt));
  }

  struct Criterion {
    char const*            name;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {"golden insertion of 5451761524", golden_insertion},
      {"golden cocharge of 1246375", golden_cocharge},
      {"increasing/decreasing cocharge endpoints, n <= 7", endpoints},
      {"presentation agrees with insertion over A_4, length <= 6", presentation_oracle},
      {"readings share a cocharge sequence, n <= 7", congruence_invariance},
      {"one cyclic shift moves cocharge by <= 1, length <= 6", cyclic_shift_moves},
      {"evaluation classes are connected, rank <= 4, length <= 6", connectivity},
      {"standard diameters within [n-1, n], n = 2..5", diameter_bounds},
      {"distances meet the cocharge lower bound, n <= 5", lower_bound},
      {"n-step certificates for all standard pairs, n <= 5", paths},
      {"worked path 13254 to 23541", worked_example},
      {"neighbour sets are induced, m < n <= 4", induced},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                      - start)
                            .count();
    failures += o.passed ? 0 : 1;
    std::printf("%s %2zu  %s  (%.2fs)  %s\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
