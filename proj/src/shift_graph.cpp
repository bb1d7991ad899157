#include "sylv/shift_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sylv/error.hpp"
#include "sylv/parallel.hpp"

namespace sylv {

  std::vector<Neighbor> neighbors(SylvElement const& s, std::size_t readings_cap) {
    // keyed by canonical reading so the output order is fixed
    std::map<Word, Neighbor> found;
    for (Word const& w : readings(s.tree(), readings_cap)) {
      for (std::size_t split = 0; split <= w.size(); ++split) {
        Word x = w.prefix(split), y = w.suffix_from(split);
        Bst  t = psylv(y + x);
        Word key = canonical_reading(t);
        if (!found.contains(key)) {
          found.emplace(std::move(key),
                        Neighbor{SylvElement(s.rank(), std::move(t)),
                                 ShiftWitness{std::move(x), std::move(y)}});
        }
      }
    }
    std::vector<Neighbor> out;
    out.reserve(found.size());
    for (auto& [key, nb] : found) {
      out.push_back(std::move(nb));
    }
    return out;
  }

  namespace {
    void generate_trees(std::vector<std::size_t> const& counts,
                        std::size_t                     cap,
                        std::vector<Bst>&               out) {
      std::size_t total = 0;
      for (std::size_t c : counts) {
        total += c;
      }
      if (total == 0) {
        out.emplace_back();
        return;
      }
      for (std::size_t r = 0; r < counts.size(); ++r) {
        if (counts[r] == 0) {
          continue;
        }
        std::vector<std::size_t> lower(counts.size(), 0), upper(counts.size(), 0);
        std::copy(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(r),
                  lower.begin());
        lower[r] = counts[r] - 1;
        std::copy(counts.begin() + static_cast<std::ptrdiff_t>(r) + 1,
                  counts.end(),
                  upper.begin() + static_cast<std::ptrdiff_t>(r) + 1);
        std::vector<Bst> lefts, rights;
        generate_trees(lower, cap, lefts);
        generate_trees(upper, cap, rights);
        for (Bst const& l : lefts) {
          for (Bst const& rt : rights) {
            out.push_back(Bst::make(static_cast<Symbol>(r + 1), l, rt));
            if (out.size() > cap) {
              throw CapExceeded("too many trees with evaluation", cap);
            }
          }
        }
      }
    }
  }  // namespace

  std::vector<Bst> trees_with_evaluation(Evaluation const& e, std::size_t cap) {
    std::vector<Bst> trees;
    generate_trees(e.counts, cap, trees);
    std::vector<std::pair<Word, Bst>> keyed;
    keyed.reserve(trees.size());
    for (Bst& t : trees) {
      keyed.emplace_back(canonical_reading(t), std::move(t));
    }
    std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    std::vector<Bst> out;
    out.reserve(keyed.size());
    for (auto& [key, t] : keyed) {
      out.push_back(std::move(t));
    }
    return out;
  }

  std::vector<Bst> standard_trees(std::size_t n) {
    return trees_with_evaluation(Evaluation{std::vector<std::size_t>(n, 1)});
  }

  ////////////////////////////////////////////////////////////////////////
  // ComponentGraph
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> ComponentGraph::index_of(Bst const& t) const {
    auto it = index_.find(canonical_reading(t));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<std::size_t> ComponentGraph::index_of(SylvElement const& s) const {
    if (s.rank() != rank()) {
      return std::nullopt;
    }
    return index_of(s.tree());
  }

  std::vector<std::vector<std::size_t>> ComponentGraph::parts() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool>                     seen(vertex_count(), false);
    for (std::size_t start = 0; start < vertex_count(); ++start) {
      if (seen[start]) {
        continue;
      }
      std::vector<std::size_t> part{start};
      seen[start] = true;
      for (std::size_t k = 0; k < part.size(); ++k) {
        for (std::size_t w : adjacency_[part[k]]) {
          if (!seen[w]) {
            seen[w] = true;
            part.push_back(w);
          }
        }
      }
      std::sort(part.begin(), part.end());
      out.push_back(std::move(part));
    }
    return out;
  }

  ComponentGraph component(Evaluation const& e, GraphLimits const& limits) {
    if (e.rank() == 0) {
      throw InputError("evaluation of rank 0");
    }
    ComponentGraph g;
    g.evaluation_ = e;
    for (Bst& t : trees_with_evaluation(e, limits.max_vertices)) {
      g.index_.emplace(canonical_reading(t), g.vertices_.size());
      g.vertices_.emplace_back(e.rank(), std::move(t));
    }
    std::size_t const n = g.vertices_.size();

    std::vector<std::vector<Neighbor>> found(n);
    detail::parallel_for(n, limits.jobs, [&](std::size_t i) {
      found[i] = neighbors(g.vertices_[i], limits.max_readings);
    });

    g.adjacency_.assign(n, {});
    std::vector<std::vector<std::size_t>> seen_from(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Neighbor& nb : found[i]) {
        auto j = g.index_of(nb.element.tree());
        if (!j) {
          throw InternalError("neighbour " + to_string(nb.element.tree())
                              + " of " + to_string(g.vertices_[i].tree())
                              + " has a different evaluation");
        }
        if (*j == i) {
          continue;
        }
        g.adjacency_[i].push_back(*j);
        if (i < *j) {
          g.edges_.push_back({i, *j, std::move(nb.witness)});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : g.adjacency_[i]) {
        auto const& back = g.adjacency_[j];
        if (std::find(back.begin(), back.end(), i) == back.end()) {
          throw InternalError("cyclic shift edge "
                              + to_string(g.vertices_[i].tree()) + " -> "
                              + to_string(g.vertices_[j].tree())
                              + " has no reverse");
        }
      }
    }
    return g;
  }

  ComponentGraph standard_component(std::size_t n, GraphLimits const& limits) {
    return component(Evaluation{std::vector<std::size_t>(n, 1)}, limits);
  }

  std::vector<std::size_t> bfs_distances(ComponentGraph const& g, std::size_t source) {
    std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
    std::deque<std::size_t>  queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : g.adjacent(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  std::size_t distance(ComponentGraph const& g,
                       SylvElement const&    s,
                       SylvElement const&    t) {
    auto a = g.index_of(s), b = g.index_of(t);
    if (!a || !b) {
      throw InputError(to_string(!a ? s.tree() : t.tree())
                       + " is not a vertex of the component with evaluation "
                       + to_string(g.evaluation()));
    }
    std::size_t d = bfs_distances(g, *a)[*b];
    if (d == kUnreachable) {
      throw DisconnectedError("no path between " + to_string(s.tree())
                                  + " and " + to_string(t.tree()),
                              g.parts());
    }
    return d;
  }

  DiameterResult diameter(ComponentGraph const& g, unsigned jobs) {
    auto parts = g.parts();
    if (parts.size() > 1) {
      throw DisconnectedError("component with evaluation "
                                  + to_string(g.evaluation()) + " splits into "
                                  + std::to_string(parts.size()) + " parts",
                              std::move(parts));
    }
    std::size_t const              n = g.vertex_count();
    std::vector<DiameterResult> ecc(n);
    detail::parallel_for(n, jobs, [&](std::size_t v) {
      auto dist = bfs_distances(g, v);
      auto far  = std::max_element(dist.begin(), dist.end());
      ecc[v]    = {*far, v, static_cast<std::size_t>(far - dist.begin())};
    });
    DiameterResult best;
    for (auto const& e : ecc) {
      if (e.value > best.value) {
        best = e;
      }
    }
    return best;
  }

  std::string to_dot(ComponentGraph const& g, DotLabel label) {
    std::string out = "graph K {\n";
    out += "  node [shape=box];\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      Bst const&  t    = g.vertices()[v].tree();
      std::string text = label == DotLabel::reading ? to_string(canonical_reading(t))
                                                    : to_string(t);
      out += "  v" + std::to_string(v) + " [label=\"" + text + "\"];\n";
    }
    for (auto const& e : g.edges()) {
      out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b)
             + " [tooltip=\"x=" + to_string(e.witness.x)
             + " y=" + to_string(e.witness.y) + "\"];\n";
    }
    out += "}\n";
    return out;
  }

  std::string tsv_header() {
    return "evaluation\tvertices\tedges\tdiameter\tfrom\tto";
  }

  std::string tsv_row(ComponentGraph const& g, DiameterResult const& d) {
    auto reading = [&](std::size_t v) {
      return to_string(g.vertices()[v].reading());
    };
    return to_string(g.evaluation()) + "\t" + std::to_string(g.vertex_count())
           + "\t" + std::to_string(g.edge_count()) + "\t"
           + std::to_string(d.value) + "\t" + reading(d.from) + "\t"
           + reading(d.to);
  }

}  // namespace sylv
