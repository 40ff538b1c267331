#pragma once

#include <cstdint>

#include "rvor/core.hpp"
#include "rvor/tree.hpp"

namespace rvor {

/// Complete binary tree of the given height (>= 1), unit weights, heap
/// numbering: 2^(h+1)-1 vertices rooted at 0, leaves occupying the contiguous
/// id range [2^h - 1, 2^(h+1) - 2] in left-to-right order.
RootedTree complete_binary_tree(int height);

/// Random-parent tree: vertex i attaches to a uniform parent in [0, i) with a
/// uniform weight in [wmin, wmax]. Deterministic per seed.
WeightedGraph random_tree(VertexId n, double wmin, double wmax,
                          std::uint64_t seed);

/// Random tree plus m-(n-1) extra distinct edges, so always connected.
WeightedGraph random_connected_graph(VertexId n, std::size_t m, double wmin,
                                     double wmax, std::uint64_t seed);

/// side x side integer grid under the l_p norm (default p = 1, whose
/// distances coincide with the unit grid graph's shortest paths).
MetricSpace grid_metric(int side, double p = 1.0);

/// The unit-weight grid graph on side x side vertices.
WeightedGraph grid_graph(int side);

/// Degree-one vertices in ascending id order (the single vertex when n == 1).
TerminalSet leaf_terminals(const WeightedGraph& g);

/// k distinct vertices of [0, n) in random order. Deterministic per seed.
TerminalSet random_terminals(VertexId n, int k, std::uint64_t seed);

/// Greedy-net doubling-dimension estimate: nets at halving scales; for each
/// scale r, the max number of (r/2)-net points inside any radius-r ball,
/// log2'd, maximized over scales. An upper-bound heuristic meant to suggest
/// a ddim parameter, not a tight value. Throws on an all-zero metric.
double estimate_ddim(const MetricSpace& m);

}  // namespace rvor
