#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rvor/core.hpp"
#include "rvor/magnitudes.hpp"

namespace rvor {

/// Point -> terminal-id map fixing every terminal.
struct Retraction {
  std::vector<VertexId> assignment;
};

/// Disjoint connected clusters covering V, one terminal each. clusters[i]
/// contains the i-th terminal of the ordering used to build it; owner maps a
/// vertex to its cluster index. Cluster vertex lists are sorted ascending.
struct TerminalPartition {
  std::vector<std::vector<VertexId>> clusters;
  std::vector<std::int32_t> owner;

  int num_clusters() const { return static_cast<int>(clusters.size()); }
};

struct MinorEdge {
  int i = 0;
  int j = 0;       // cluster indices, i < j
  double w = 0.0;  // original-graph distance between the two terminals
};

/// Contraction of a terminal partition: vertex set = terminals, an edge
/// between clusters iff some original edge crosses them, weighted by the
/// original-graph terminal distance. Edges sorted by (i, j).
struct InducedMinor {
  int k = 0;
  std::vector<MinorEdge> edges;
};

enum class FrontierOrder { Fifo, Lifo };

/// The cluster-claiming test d <= R * D, with the D == 0 corner pinned so an
/// infinite magnitude never produces 0 * inf.
inline bool claim_test(double d, double magnitude, double terminal_dist) {
  if (terminal_dist == 0.0) return d <= 0.0;
  return d <= magnitude * terminal_dist;
}

/// Sequential enlarged-Voronoi clustering of a metric: terminals claim, in
/// order, every still-unmapped point x with d(t_j, x) <= R_j * D(x). Total
/// whenever all magnitudes are >= 1.
Retraction metric_relaxed_voronoi(const MetricSpace& m,
                                  const TerminalSet& ordered_terminals,
                                  const MagnitudeVector& magnitudes);

/// Plain Voronoi map: each point to its nearest terminal, ties to the
/// earliest terminal in the given order.
Retraction voronoi_baseline(const MetricSpace& m,
                            const TerminalSet& ordered_terminals);

/// Grows one cluster from t_j through currently unclustered vertices,
/// Dijkstra-like: a frontier vertex v joins iff d_G(v, t_j) <= R_j * D(v);
/// rejected vertices are parked and not revisited. Membership depends only on
/// the test and on reachability through accepted vertices, not on the pop
/// order. Returns the sorted cluster, always containing t_j.
std::vector<VertexId> create_cluster(const WeightedGraph& g,
                                     const std::vector<std::uint8_t>& unclustered,
                                     VertexId t_j, double magnitude,
                                     const std::vector<double>& terminal_dist,
                                     const std::vector<double>& dist_to_tj,
                                     FrontierOrder order = FrontierOrder::Fifo);

/// Precomputed shortest-path data for one (graph, terminals) pair so that
/// randomized trials only pay for the clustering itself.
class GraphicContext {
 public:
  GraphicContext(const WeightedGraph& g, TerminalSet ordered_terminals);

  const WeightedGraph& graph() const { return *g_; }
  const TerminalSet& terminals() const { return terminals_; }
  const std::vector<double>& nearest_terminal_dist() const { return dist_K_; }
  // d_G(t_i, v) for every vertex v.
  const std::vector<double>& terminal_row(int i) const {
    return rows_[static_cast<std::size_t>(i)];
  }
  double terminal_pair_dist(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)]
                [static_cast<std::size_t>(terminals_.ids[static_cast<std::size_t>(j)])];
  }

  TerminalPartition run(const MagnitudeVector& magnitudes,
                        FrontierOrder order = FrontierOrder::Fifo) const;

 private:
  const WeightedGraph* g_;
  TerminalSet terminals_;
  std::vector<double> dist_K_;
  std::vector<std::vector<double>> rows_;
};

/// Whole-graph sequential clustering (connected version): clusters built in
/// terminal order via create_cluster, leftover vertices claimed by later
/// terminals. Output satisfies the terminal-partition invariants for any
/// magnitudes >= 1.
TerminalPartition graphic_relaxed_voronoi(const WeightedGraph& g,
                                          const TerminalSet& ordered_terminals,
                                          const MagnitudeVector& magnitudes,
                                          FrontierOrder order = FrontierOrder::Fifo);

/// Checks disjointness, coverage, terminal containment and per-cluster
/// connectivity; returns a message naming the violated invariant, or nullopt.
std::optional<std::string> partition_violation(const WeightedGraph& g,
                                               const TerminalSet& terminals,
                                               const TerminalPartition& p);

/// Contracts a valid terminal partition. Throws (naming the invariant) on an
/// invalid partition. Terminal pair distances come from one single-source run
/// per terminal unless supplied.
InducedMinor induce_minor(const WeightedGraph& g, const TerminalSet& terminals,
                          const TerminalPartition& p);
InducedMinor induce_minor(const WeightedGraph& g, const TerminalSet& terminals,
                          const TerminalPartition& p,
                          const std::vector<std::vector<double>>& terminal_rows);

/// The minor as a standalone graph on cluster indices 0..k-1.
WeightedGraph minor_graph(const InducedMinor& minor);

Retraction to_retraction(const TerminalPartition& p,
                         const TerminalSet& terminals);

/// Validation level for engine outputs: Off, or Always. The default comes
/// from the RV_VALIDATE environment variable (off|debug|always); "debug"
/// enables validation only in assert-enabled builds.
bool engine_validation_enabled();
void set_engine_validation(bool enabled);

}  // namespace rvor
