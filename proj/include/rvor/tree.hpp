#pragma once

#include <cstdint>

#include "rvor/clustering.hpp"
#include "rvor/core.hpp"

namespace rvor {

/// A tree rooted at an arbitrary vertex. Owns the underlying graph;
/// construction throws if the graph is not a tree (n-1 edges and connected).
///
/// Internally vertices are relabeled by BFS position: a position's children
/// occupy one contiguous position range and its parent lies in the previous
/// BFS level, so the linear-time passes walk memory almost sequentially
/// instead of chasing vertex ids around (at a million vertices that is the
/// difference between bandwidth-bound and latency-bound).
class RootedTree {
 public:
  RootedTree(WeightedGraph g, VertexId root);

  const WeightedGraph& graph() const { return g_; }
  VertexId root() const { return root_; }
  VertexId num_vertices() const { return g_.num_vertices(); }

  // Id-space views.
  VertexId parent(VertexId v) const {
    const VertexId p = parent_pos_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)])];
    return p < 0 ? -1 : order_[static_cast<std::size_t>(p)];
  }
  double parent_weight(VertexId v) const {
    return parent_w_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)])];
  }
  const std::vector<VertexId>& bfs_order() const { return order_; }

  // Position-space internals consumed by the linear-time passes.
  VertexId pos_of(VertexId id) const { return pos_[static_cast<std::size_t>(id)]; }
  VertexId id_at(VertexId pos) const { return order_[static_cast<std::size_t>(pos)]; }
  VertexId parent_pos(VertexId pos) const {
    return parent_pos_[static_cast<std::size_t>(pos)];
  }
  double parent_weight_at(VertexId pos) const {
    return parent_w_[static_cast<std::size_t>(pos)];
  }
  // children of position p are exactly positions [child_begin(p), child_end(p))
  VertexId child_begin(VertexId pos) const {
    return child_begin_[static_cast<std::size_t>(pos)];
  }
  VertexId child_end(VertexId pos) const {
    return child_begin_[static_cast<std::size_t>(pos) + 1];
  }

 private:
  WeightedGraph g_;
  VertexId root_;
  std::vector<VertexId> order_;       // position -> id
  std::vector<VertexId> pos_;        // id -> position
  std::vector<VertexId> parent_pos_;  // position -> parent position (-1 at root)
  std::vector<double> parent_w_;     // position -> weight of the parent edge
  std::vector<VertexId> child_begin_;  // size n+1
};

/// Nearest-terminal distance for every vertex (indexed by id) in two sweeps:
/// an upward pass accumulating the best descendant terminal, then a downward
/// pass folding in paths through the parent. Each edge is touched exactly
/// twice.
std::vector<double> tree_terminal_distances(const RootedTree& t,
                                            const TerminalSet& terminals,
                                            std::uint64_t* edge_touches = nullptr);

/// Distances from the root (indexed by id) with a plain FIFO traversal
/// instead of a heap; the first visit is final because tree paths are unique.
/// One touch per edge.
std::vector<double> tree_root_distances(const RootedTree& t,
                                        std::uint64_t* edge_touches = nullptr);

struct SprTreeResult {
  TerminalSet order;          // terminals sorted by root distance (ties: id)
  TerminalPartition partition;
  InducedMinor minor;         // a tree on the terminals: exactly k-1 edges
  std::uint64_t edge_touches = 0;
};

/// Whole tree pipeline: root-distance ordering, uniform magnitudes
/// (default 3), linear-time cluster growth where the frontier distance to the
/// terminal is exact on first touch, and minor emission from the crossing
/// edges. Adjacency traversals total at most 4n.
SprTreeResult spr_tree(const RootedTree& t, const TerminalSet& terminals,
                       double magnitude = 3.0);

}  // namespace rvor
