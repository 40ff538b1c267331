#pragma once

#include <cstdint>
#include <vector>

#include "rvor/clustering.hpp"
#include "rvor/core.hpp"
#include "rvor/magnitudes.hpp"

namespace rvor {

/// Worst-case distortion of an induced minor: max over terminal pairs of
/// minor distance / original distance. pair_i/pair_j index the terminal
/// ordering; per_pair (k*k row-major, optional) holds the full ratio table.
struct DistortionReport {
  double max_distortion = 1.0;
  int pair_i = -1;
  int pair_j = -1;
  std::vector<double> per_pair;

  bool has_pair() const { return pair_i >= 0; }
};

/// Exact distortion via shortest paths inside the minor (k single-source runs
/// on the k-vertex minor) against distances in g. k = 1 reports distortion 1
/// with no witness pair.
DistortionReport minor_distortion(const WeightedGraph& g,
                                  const TerminalSet& terminals,
                                  const InducedMinor& minor,
                                  bool want_table = false);

/// Same, with d_G(t_i, t_j) already available as a k*k matrix.
DistortionReport minor_distortion(const std::vector<std::vector<double>>& term_pair_dist,
                                  const InducedMinor& minor,
                                  bool want_table = false);

struct StretchPair {
  VertexId x = 0;
  VertexId y = 0;
  double dist = 0.0;             // d(x, y)
  double mean_image_dist = 0.0;  // mean over trials of d(f(x), f(y))

  double mean_stretch() const { return dist > 0.0 ? mean_image_dist / dist : 0.0; }
};

/// Monte-Carlo estimate of the expected stretch of a randomized retraction:
/// per sampled pair, the mean over trials of the image distance. Identical
/// (instance, config, seed) reproduces the report bitwise.
struct StretchReport {
  std::vector<StretchPair> pairs;
  double max_mean_stretch = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Metric engine stretch: pairs are exhaustive when n <= 100, otherwise
/// `pair_sample` distinct pairs drawn from the seed. Magnitudes are resampled
/// every trial with a derived sub-seed.
StretchReport expected_stretch_metric(const MetricSpace& m,
                                      const TerminalSet& ordered_terminals,
                                      const MagnitudePolicy& magnitudes,
                                      int pair_sample, int trials,
                                      std::uint64_t seed);

/// Graphic engine stretch over the edges of g (the triangle-inequality
/// reduction): per edge, mean over trials of d_G(f(u), f(v)) / d_G(u, v).
/// Every trial's partition is validated before its stretch is accumulated.
StretchReport expected_stretch_graphic(const WeightedGraph& g,
                                       const TerminalSet& ordered_terminals,
                                       const MagnitudePolicy& magnitudes,
                                       int trials, std::uint64_t seed,
                                       FrontierOrder order = FrontierOrder::Fifo);

/// Exact all-pairs distances by dynamic programming; the brute-force oracle
/// behind the Dijkstra-based paths. Unreachable pairs get kInfDist.
/// Throws when n exceeds `cap` (use per-source Dijkstra instead).
std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g,
                                                VertexId cap = 512);

}  // namespace rvor
