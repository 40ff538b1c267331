#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace rvor {

using VertexId = std::int32_t;

// Repo-wide sentinel for "unreachable". Strictly greater than every finite
// distance and absorbing under addition, so min-folds never pick up garbage.
inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 0.0;
};

struct Neighbor {
  VertexId to;
  double w;
};

/// Undirected graph with non-negative edge weights. Immutable after
/// construction; adjacency is CSR so million-vertex instances stay cheap to
/// walk and the structure is safe to share across threads read-only.
class WeightedGraph {
 public:
  // Validates ids, non-negative finite weights and absence of self-loops;
  // connectivity is computed and exposed as a flag (engines that require a
  // connected input check it and throw).
  WeightedGraph(VertexId n, std::vector<Edge> edges);

  VertexId num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool connected() const { return connected_; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adj_.data() + offset_[static_cast<std::size_t>(v)],
            adj_.data() + offset_[static_cast<std::size_t>(v) + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offset_[static_cast<std::size_t>(v) + 1] -
           offset_[static_cast<std::size_t>(v)];
  }

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_;
  std::vector<Neighbor> adj_;
  bool connected_ = false;
};

/// Dense pairwise-distance view over n points. Construction validates zero
/// diagonal, symmetry and non-negativity; the O(n^3) triangle-inequality scan
/// runs only up to kTriangleCheckLimit points unless forced.
class MetricSpace {
 public:
  enum class TriangleCheck { Auto, Force, Skip };
  static constexpr VertexId kTriangleCheckLimit = 128;
  static constexpr double kTolerance = 1e-9;

  MetricSpace(VertexId n, std::vector<double> dist_row_major,
              TriangleCheck check = TriangleCheck::Auto);

  VertexId num_points() const { return n_; }
  double dist(VertexId x, VertexId y) const {
    return d_[static_cast<std::size_t>(x) * n_ + y];
  }

  // Full O(n^3) check; throws on the first violated triple.
  void validate_triangle_inequality() const;

 private:
  VertexId n_ = 0;
  std::vector<double> d_;
};

/// Ordered terminal list; the order of `ids` is the ordering the engines
/// consume.
struct TerminalSet {
  std::vector<VertexId> ids;

  int size() const { return static_cast<int>(ids.size()); }
};

// Throws std::invalid_argument unless terminals are nonempty, distinct and
// all inside [0, n).
void check_terminals(const TerminalSet& terminals, VertexId n);

/// Single-source shortest paths (Dijkstra, binary heap). Unreachable
/// vertices get kInfDist, which is how disconnected inputs surface.
std::vector<double> shortest_paths_from(const WeightedGraph& g,
                                        VertexId source);

/// Distance from every vertex to its nearest terminal, as one multi-source
/// Dijkstra run (all terminals seeded at distance zero), not k single-source
/// runs.
std::vector<double> terminal_distances(const WeightedGraph& g,
                                       const TerminalSet& terminals);

/// Metric counterpart: per-point min over the terminal rows, O(nk).
std::vector<double> terminal_distances(const MetricSpace& m,
                                       const TerminalSet& terminals);

/// Shortest-path metric of a connected graph. Throws if g is disconnected.
MetricSpace metric_from_graph(const WeightedGraph& g);

}  // namespace rvor
