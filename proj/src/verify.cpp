#include "sylv/verify.hpp"

#include <set>

#include "sylv/cocharge.hpp"
#include "sylv/error.hpp"
#include "sylv/parallel.hpp"

namespace sylv::verify {

  namespace {
    void note(Options const& opt, std::string const& msg) {
      if (opt.progress) {
        opt.progress(msg);
      }
    }

    Report fail(Report r, std::string counterexample) {
      r.passed         = false;
      r.counterexample = std::move(counterexample);
      return r;
    }

    std::string words(Word const& u, Word const& v) {
      return to_string(u) + " " + to_string(v);
    }

    // First failure among per-index results, if any.
    std::optional<std::string>
    first_failure(std::vector<std::optional<std::string>> const& results) {
      for (auto const& r : results) {
        if (r) {
          return r;
        }
      }
      return std::nullopt;
    }

    Evaluation standard_evaluation(std::size_t n) {
      return Evaluation{std::vector<std::size_t>(n, 1)};
    }
  }  // namespace

  Report oracle(Options const& opt) {
    Report r{"oracle"};
    for (std::size_t len = 0; len <= opt.maxlen; ++len) {
      note(opt, "oracle: length " + std::to_string(len));
      for (Evaluation const& e : evaluations(opt.rank, len)) {
        auto const ws = words_with_evaluation(e);
        for (Word const& u : ws) {
          auto const cls = rewrite_class(u, opt.rank, opt.budget);
          for (Word const& v : ws) {
            ++r.checked;
            if (cls.contains(v) != equivalent(u, v, opt.rank)) {
              return fail(r, words(u, v));
            }
          }
        }
      }
    }
    r.detail = std::to_string(r.checked) + " word pairs";
    return r;
  }

  Report monoid_laws(Options const& opt) {
    Report            r{"monoid"};
    std::vector<Word> ws;
    for (std::size_t len = 0; len <= opt.maxlen; ++len) {
      auto more = all_words(opt.rank, len);
      ws.insert(ws.end(), more.begin(), more.end());
    }
    // congruence and multihomogeneity, grouping words by element
    std::map<Word, std::vector<Word>> classes;
    for (Word const& w : ws) {
      classes[canonical_reading(psylv(w))].push_back(w);
    }
    note(opt, "monoid: congruence over " + std::to_string(classes.size()) + " classes");
    for (auto const& [ku, us] : classes) {
      for (Word const& u : us) {
        if (evaluation(u, opt.rank) != evaluation(ku, opt.rank)) {
          return fail(r, words(u, ku));
        }
      }
    }
    for (auto const& [ku, us] : classes) {
      for (auto const& [kv, vs] : classes) {
        if (ku.size() + kv.size() > opt.maxlen) {
          continue;
        }
        Bst const expected = psylv(ku + kv);
        for (Word const& u : us) {
          for (Word const& v : vs) {
            ++r.checked;
            if (!(psylv(u + v) == expected)) {
              return fail(r, words(u, v));
            }
          }
        }
      }
    }
    // associativity of multiply on elements
    std::vector<SylvElement> elems;
    for (auto const& [k, us] : classes) {
      elems.push_back(element_of(k, opt.rank));
    }
    note(opt, "monoid: associativity over " + std::to_string(elems.size()) + " elements");
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        for (auto const& c : elems) {
          if (a.tree().size() + b.tree().size() + c.tree().size() > opt.maxlen) {
            continue;
          }
          ++r.checked;
          if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)))) {
            return fail(r, to_string(a.reading()) + " " + to_string(b.reading())
                               + " " + to_string(c.reading()));
          }
        }
      }
    }
    r.detail = std::to_string(r.checked) + " products";
    return r;
  }

  Report cocharge_congruence(Options const& opt) {
    Report r{"cocharge-congruence"};
    for (std::size_t k = 1; k <= opt.n; ++k) {
      note(opt, "cocharge-congruence: " + std::to_string(k) + " nodes");
      for (Bst const& t : standard_trees(k)) {
        SylvElement const s(k, t);
        CochargeSeq const seq = cochseq(s);
        for (Word const& w : readings(t, opt.limits.max_readings)) {
          ++r.checked;
          if (cochseq(w) != seq) {
            return fail(r, words(s.reading(), w));
          }
        }
      }
    }
    r.detail = std::to_string(r.checked) + " readings";
    return r;
  }

  Report cocharge_cyclic(Options const& opt) {
    Report r{"cocharge-cyclic"};
    for (std::size_t k = 1; k <= opt.n; ++k) {
      for (Word const& w : words_with_evaluation(standard_evaluation(k))) {
        CochargeSeq const base = cochseq(w);
        if (!base.well_formed()) {
          return fail(r, to_string(w));
        }
        for (std::size_t split = 0; split <= k; ++split) {
          ++r.checked;
          Word const shifted = w.suffix_from(split) + w.prefix(split);
          if (max_component_gap(base, cochseq(shifted)) > 1) {
            return fail(r, words(w.prefix(split), w.suffix_from(split)));
          }
        }
      }
    }
    r.detail = std::to_string(r.checked) + " shifts";
    return r;
  }

  Report cocharge_rotation(Options const& opt) {
    Report r{"cocharge-rotation"};
    for (std::size_t k = 2; k <= opt.n; ++k) {
      for (Word const& ua : words_with_evaluation(standard_evaluation(k))) {
        Symbol const a = ua[k - 1];
        if (a == 1) {
          continue;
        }
        ++r.checked;
        Word const  au       = Word{a} + ua.prefix(k - 1);
        CochargeSeq expected = cochseq(ua);
        ++expected.labels[a - 1];
        if (cochseq(au) != expected) {
          return fail(r, to_string(ua));
        }
      }
    }
    r.detail = std::to_string(r.checked)
               + " rotations; moving the last symbol a != 1 to the front adds 1 "
                 "to component a";
    return r;
  }

  Report connectivity(Options const& opt) {
    Report r{"connectivity"};
    for (std::size_t len = 0; len <= opt.maxlen; ++len) {
      note(opt, "connectivity: length " + std::to_string(len));
      for (Evaluation const& e : evaluations(opt.rank, len)) {
        ++r.checked;
        ComponentGraph const g = component(e, opt.limits);
        if (!g.connected()) {
          return fail(r, to_string(e));
        }
      }
    }
    r.detail = std::to_string(r.checked) + " evaluation classes";
    return r;
  }

  Report diameter_bounds(Options const& opt, std::map<std::size_t, std::size_t>* diameters) {
    Report      r{"diameter-bounds"};
    std::string values;
    for (std::size_t k = 2; k <= opt.n; ++k) {
      note(opt, "diameter-bounds: n = " + std::to_string(k));
      ComponentGraph const g = standard_component(k, opt.limits);
      DiameterResult const d = diameter(g, opt.limits.jobs);
      ++r.checked;
      if (diameters != nullptr) {
        (*diameters)[k] = d.value;
      }
      values += (values.empty() ? "" : ", ") + ("d_" + std::to_string(k)) + " = "
                + std::to_string(d.value);
      if (d.value + 1 < k || d.value > k) {
        return fail(r, "n = " + std::to_string(k) + " diameter "
                           + std::to_string(d.value));
      }
    }
    r.detail = values;
    return r;
  }

  Report lower_bound(Options const& opt) {
    Report r{"lower-bound"};
    for (std::size_t k = 1; k <= opt.n; ++k) {
      note(opt, "lower-bound: n = " + std::to_string(k));
      ComponentGraph const g = standard_component(k, opt.limits);
      SylvElement const    inc = element_of(increasing_word(k), k);
      SylvElement const    dec = element_of(decreasing_word(k), k);
      ++r.checked;
      if (distance(g, inc, dec) + 1 < k) {
        return fail(r, words(inc.reading(), dec.reading()));
      }
      std::vector<CochargeSeq> seqs;
      for (SylvElement const& s : g.vertices()) {
        seqs.push_back(cochseq(s));
      }
      std::vector<std::optional<std::string>> bad(g.vertex_count());
      detail::parallel_for(g.vertex_count(), opt.limits.jobs, [&](std::size_t a) {
        auto const dist = bfs_distances(g, a);
        for (std::size_t b = 0; b < g.vertex_count(); ++b) {
          if (dist[b] < max_component_gap(seqs[a], seqs[b])) {
            bad[a] = words(g.vertices()[a].reading(), g.vertices()[b].reading());
            return;
          }
        }
      });
      r.checked += g.vertex_count() * g.vertex_count();
      if (auto f = first_failure(bad)) {
        return fail(r, *f);
      }
    }
    r.detail = std::to_string(r.checked) + " pairs";
    return r;
  }

  Report paths(Options const& opt, std::map<StepCase, std::size_t>* coverage) {
    Report r{"path"};
    std::map<StepCase, std::size_t> used;
    for (std::size_t k = 1; k <= opt.n; ++k) {
      note(opt, "path: n = " + std::to_string(k));
      ComponentGraph const g = standard_component(k, opt.limits);
      std::size_t const    m = g.vertex_count();
      std::vector<std::optional<std::string>>         bad(m);
      std::vector<std::map<StepCase, std::size_t>>    counts(m);
      detail::parallel_for(m, opt.limits.jobs, [&](std::size_t a) {
        auto const         dist = bfs_distances(g, a);
        SylvElement const& T    = g.vertices()[a];
        for (std::size_t b = 0; b < m; ++b) {
          SylvElement const& U     = g.vertices()[b];
          std::string const  label = words(T.reading(), U.reading());
          try {
            PathCertificate const cert = shift_path(T, U);
            if (auto problem = check_certificate(cert, T, U)) {
              bad[a] = label + " (" + *problem + ")";
              return;
            }
            if (dist[b] > cert.size()) {
              bad[a] = label + " (certificate shorter than the graph distance)";
              return;
            }
            for (auto const& s : cert.steps) {
              ++counts[a][s.tag];
            }
          } catch (InternalError const& e) {
            bad[a] = label + " (" + e.what() + ")";
            return;
          }
        }
      });
      r.checked += m * m;
      if (auto f = first_failure(bad)) {
        return fail(r, *f);
      }
      for (auto const& c : counts) {
        for (auto const& [tag, count] : c) {
          used[tag] += count;
        }
      }
    }
    if (coverage != nullptr) {
      *coverage = used;
    }
    r.detail = std::to_string(r.checked) + " ordered pairs; cases used:";
    for (auto const& [tag, count] : used) {
      r.detail += " " + std::string(to_string(tag)) + "=" + std::to_string(count);
    }
    return r;
  }

  Report induced(Options const& opt) {
    Report r{"induced"};
    for (std::size_t k = 2; k <= opt.n; ++k) {
      for (std::size_t m = 1; m < k; ++m) {
        note(opt, "induced: m = " + std::to_string(m) + ", n = " + std::to_string(k));
        auto const big_words = all_words(k, m);
        for (Bst const& t : standard_trees(m)) {
          SylvElement const s(m, t);
          std::set<Word>    small;
          for (Neighbor const& nb : neighbors(s, opt.limits.max_readings)) {
            small.insert(nb.element.reading());
          }
          std::set<Word> big;
          for (Word const& w : big_words) {
            if (!(psylv(w) == t)) {
              continue;
            }
            for (std::size_t split = 0; split <= m; ++split) {
              big.insert(canonical_reading(psylv(w.suffix_from(split) + w.prefix(split))));
            }
          }
          ++r.checked;
          if (small != big) {
            return fail(r, to_string(s.reading()) + " m=" + std::to_string(m)
                               + " n=" + std::to_string(k));
          }
        }
      }
    }
    r.detail = std::to_string(r.checked) + " elements";
    return r;
  }

  std::vector<std::string_view> suite_names() {
    return {"oracle",
            "monoid",
            "cocharge-congruence",
            "cocharge-cyclic",
            "cocharge-rotation",
            "connectivity",
            "diameter-bounds",
            "lower-bound",
            "path",
            "induced"};
  }

  Report run(std::string_view name, Options const& opt) {
    if (name == "oracle") {
      return oracle(opt);
    }
    if (name == "monoid") {
      return monoid_laws(opt);
    }
    if (name == "cocharge-congruence") {
      return cocharge_congruence(opt);
    }
    if (name == "cocharge-cyclic") {
      return cocharge_cyclic(opt);
    }
    if (name == "cocharge-rotation") {
      return cocharge_rotation(opt);
    }
    if (name == "connectivity") {
      return connectivity(opt);
    }
    if (name == "diameter-bounds") {
      return diameter_bounds(opt);
    }
    if (name == "lower-bound") {
      return lower_bound(opt);
    }
    if (name == "path") {
      return paths(opt);
    }
    if (name == "induced") {
      return induced(opt);
    }
    throw InputError("unknown verification suite \"" + std::string(name) + "\"");
  }

}  // namespace sylv::verify
