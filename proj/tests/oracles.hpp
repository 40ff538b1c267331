#pragma once

// Brute-force reference implementations the engines are checked against.
// These stay deliberately naive and share as little code as possible with the
// library paths they verify: distances come from the Floyd-Warshall matrix,
// sets are std::set, and the claiming loops follow the pseudocode rather than
// any library structure.

#include <set>
#include <vector>

#include "rvor/clustering.hpp"
#include "rvor/core.hpp"

namespace rvor::testing {

// Sequential enlarged-Voronoi on a metric, transliterated: for each terminal
// in order, claim every still-unmapped point x with d(t_j, x) <= R_j * D(x).
Retraction naive_metric_rv(const MetricSpace& m, const TerminalSet& terminals,
                           const std::vector<double>& magnitudes);

// Whole-graph sequential clustering, transliterated with explicit N and U
// sets; the frontier pick is "smallest id in N", a discipline the engine does
// not use. All distances come from floyd_warshall.
std::vector<std::vector<VertexId>> naive_graphic_rv(
    const WeightedGraph& g, const TerminalSet& terminals,
    const std::vector<double>& magnitudes);

// Expected single-cluster membership: every vertex connected to t through
// unclustered vertices that themselves pass d_G(., t) <= R * D(.).
std::vector<VertexId> reachable_passing_set(
    const WeightedGraph& g, const std::vector<std::uint8_t>& unclustered,
    VertexId t, double magnitude, const std::vector<double>& terminal_dist,
    const std::vector<double>& dist_to_t);

// Farthest-first order recomputing the argmax from scratch at every step.
std::vector<VertexId> naive_gonzalez(const MetricSpace& m,
                                     const std::vector<VertexId>& terminals,
                                     VertexId start);

// Unique-path distance on a tree by walking parent pointers from a DFS.
double tree_path_distance(const WeightedGraph& tree, VertexId a, VertexId b);

}  // namespace rvor::testing
