#ifndef SYLV_SHIFT_GRAPH_HPP
#define SYLV_SHIFT_GRAPH_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sylv/bst.hpp"
#include "sylv/monoid.hpp"
#include "sylv/word.hpp"

namespace sylv {

  inline constexpr std::size_t kDefaultVertexCap = 20'000;
  inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  // Words x, y certifying an edge s ~ t: psylv(xy) = s and psylv(yx) = t.
  struct ShiftWitness {
    Word x;
    Word y;

    [[nodiscard]] ShiftWitness swapped() const {
      return ShiftWitness{y, x};
    }
    [[nodiscard]] bool certifies(Bst const& s, Bst const& t) const {
      return psylv(x + y) == s && psylv(y + x) == t;
    }

    friend bool operator==(ShiftWitness const&, ShiftWitness const&) = default;
  };

  struct Neighbor {
    SylvElement  element;
    ShiftWitness witness;
  };

  // { element(yx) : xy a reading of s, every split point }, sorted by the
  // canonical reading of the neighbour. Includes s itself (y empty). The
  // witness kept for each neighbour is the first found, scanning readings
  // in lexicographic order and split points left to right.
  [[nodiscard]] std::vector<Neighbor>
  neighbors(SylvElement const& s, std::size_t readings_cap = kDefaultReadingsCap);

  // Every distinct right-strict BST with the given label multiset, sorted by
  // canonical reading. Generated recursively: the root takes some value r,
  // the left subtree gets every smaller label and the other copies of r, the
  // right subtree every larger label.
  [[nodiscard]] std::vector<Bst>
  trees_with_evaluation(Evaluation const& e, std::size_t cap = kDefaultVertexCap);

  [[nodiscard]] std::vector<Bst> standard_trees(std::size_t n);

  struct GraphLimits {
    std::size_t max_vertices = kDefaultVertexCap;
    std::size_t max_readings = kDefaultReadingsCap;
    unsigned    jobs         = 1;
  };

  // The vertices of K(sylv_n) with a fixed evaluation, and the cyclic shift
  // edges between them (self-loops dropped). Vertices are sorted by
  // canonical reading; each edge {a, b} has a < b and a witness with
  // psylv(xy) = vertex a, psylv(yx) = vertex b.
  class ComponentGraph {
   public:
    struct Edge {
      std::size_t  a;
      std::size_t  b;
      ShiftWitness witness;
    };

    [[nodiscard]] std::size_t rank() const noexcept {
      return evaluation_.rank();
    }
    [[nodiscard]] Evaluation const& evaluation() const noexcept {
      return evaluation_;
    }
    [[nodiscard]] std::vector<SylvElement> const& vertices() const noexcept {
      return vertices_;
    }
    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    [[nodiscard]] std::vector<std::size_t> const& adjacent(std::size_t v) const {
      return adjacency_[v];
    }
    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return vertices_.size();
    }
    [[nodiscard]] std::size_t edge_count() const noexcept {
      return edges_.size();
    }

    [[nodiscard]] std::optional<std::size_t> index_of(SylvElement const& s) const;
    [[nodiscard]] std::optional<std::size_t> index_of(Bst const& t) const;

    // Vertex indices of each connected part, parts ordered by their
    // smallest member.
    [[nodiscard]] std::vector<std::vector<std::size_t>> parts() const;
    [[nodiscard]] bool connected() const {
      return parts().size() <= 1;
    }

   private:
    friend ComponentGraph component(Evaluation const&, GraphLimits const&);

    Evaluation                               evaluation_;
    std::vector<SylvElement>                 vertices_;
    std::unordered_map<Word, std::size_t, WordHash> index_;
    std::vector<std::vector<std::size_t>>    adjacency_;
    std::vector<Edge>                        edges_;
  };

  // Throws CapExceeded if the class has more than limits.max_vertices trees.
  [[nodiscard]] ComponentGraph component(Evaluation const& e,
                                         GraphLimits const& limits = {});
  [[nodiscard]] ComponentGraph standard_component(std::size_t n,
                                                  GraphLimits const& limits = {});

  // Breadth-first distances from `source`; kUnreachable where appropriate.
  [[nodiscard]] std::vector<std::size_t> bfs_distances(ComponentGraph const& g,
                                                       std::size_t source);

  // Throws InputError if s or t is not a vertex of g, DisconnectedError if
  // no path exists.
  [[nodiscard]] std::size_t distance(ComponentGraph const& g,
                                     SylvElement const&    s,
                                     SylvElement const&    t);

  struct DiameterResult {
    std::size_t value = 0;
    std::size_t from  = 0;
    std::size_t to    = 0;
  };

  // One BFS per vertex. The extremal pair reported is the first in vertex
  // order. Throws DisconnectedError (with the partition) if g is not
  // connected.
  [[nodiscard]] DiameterResult diameter(ComponentGraph const& g, unsigned jobs = 1);

  enum class DotLabel { reading, tree };

  [[nodiscard]] std::string to_dot(ComponentGraph const& g,
                                   DotLabel label = DotLabel::reading);

  // evaluation, vertex count, edge count, diameter, extremal pair.
  [[nodiscard]] std::string tsv_header();
  [[nodiscard]] std::string tsv_row(ComponentGraph const& g, DiameterResult const& d);

}  // namespace sylv

#endif  // SYLV_SHIFT_GRAPH_HPP
