#include "rvor/evaluation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rvor/rng.hpp"

namespace rvor {

namespace {

DistortionReport distortion_from_matrices(
    const std::vector<std::vector<double>>& d_g,
    const std::vector<std::vector<double>>& d_m, int k, bool want_table) {
  DistortionReport report;
  if (want_table)
    report.per_pair.assign(static_cast<std::size_t>(k) * k, 1.0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const double dg = d_g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const double dm = d_m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      // Coincident terminals cannot be stretched; treat the pair as ratio 1.
      const double ratio = dg > 0.0 ? dm / dg : 1.0;
      if (want_table)
        report.per_pair[static_cast<std::size_t>(i) * k + j] = ratio;
      if (i < j && (ratio > report.max_distortion || report.pair_i < 0)) {
        report.max_distortion = std::max(ratio, 1.0);
        report.pair_i = i;
        report.pair_j = j;
      }
    }
  }
  return report;
}

}  // namespace

DistortionReport minor_distortion(const std::vector<std::vector<double>>& term_pair_dist,
                                  const InducedMinor& minor, bool want_table) {
  const int k = minor.k;
  if (k == 1) return DistortionReport{};
  const WeightedGraph mg = minor_graph(minor);
  std::vector<std::vector<double>> d_m;
  d_m.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    d_m.push_back(shortest_paths_from(mg, static_cast<VertexId>(i)));
  return distortion_from_matrices(term_pair_dist, d_m, k, want_table);
}

DistortionReport minor_distortion(const WeightedGraph& g,
                                  const TerminalSet& terminals,
                                  const InducedMinor& minor, bool want_table) {
  const int k = terminals.size();
  if (minor.k != k)
    throw std::invalid_argument("minor size does not match terminal set");
  if (k == 1) return DistortionReport{};
  std::vector<std::vector<double>> d_g(static_cast<std::size_t>(k),
                                       std::vector<double>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    const std::vector<double> row =
        shortest_paths_from(g, terminals.ids[static_cast<std::size_t>(i)]);
    for (int j = 0; j < k; ++j)
      d_g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(terminals.ids[static_cast<std::size_t>(j)])];
  }
  return minor_distortion(d_g, minor, want_table);
}

namespace {

// The sampled pair set is a fixed function of (n, pair_sample), not of the
// run seed: runs with different seeds then estimate the same functional, so
// cross-seed comparisons see only engine randomness.
std::vector<std::pair<VertexId, VertexId>> sample_pairs(VertexId n,
                                                        int pair_sample) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const std::uint64_t total =
      static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
  if (n <= 100 || total <= static_cast<std::uint64_t>(pair_sample)) {
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    return pairs;
  }
  SplitMix64 rng(derive_seed(static_cast<std::uint64_t>(n), seed_role::kPairs,
                             static_cast<std::uint64_t>(pair_sample)));
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(static_cast<std::size_t>(pair_sample) * 2);
  while (pairs.size() < static_cast<std::size_t>(pair_sample)) {
    const std::uint64_t idx = rng.below(total);
    if (!taken.insert(idx).second) continue;
    // idx -> (x, y) with x < y, row-major over the strict upper triangle
    std::uint64_t row = 0;
    std::uint64_t remaining = idx;
    std::uint64_t row_len = static_cast<std::uint64_t>(n) - 1;
    while (remaining >= row_len) {
      remaining -= row_len;
      --row_len;
      ++row;
    }
    pairs.emplace_back(static_cast<VertexId>(row),
                       static_cast<VertexId>(row + 1 + remaining));
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

StretchReport expected_stretch_metric(const MetricSpace& m,
                                      const TerminalSet& ordered_terminals,
                                      const MagnitudePolicy& magnitudes,
                                      int pair_sample, int trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  check_terminals(ordered_terminals, m.num_points());
  const int k = ordered_terminals.size();

  const auto pair_ids = sample_pairs(m.num_points(), pair_sample);
  std::vector<double> image_sum(pair_ids.size(), 0.0);

  for (int trial = 0; trial < trials; ++trial) {
    MagnitudePolicy per_trial = magnitudes;
    per_trial.seed = derive_seed(seed, seed_role::kTrial,
                                 static_cast<std::uint64_t>(trial));
    const Retraction f =
        metric_relaxed_voronoi(m, ordered_terminals, make_magnitudes(per_trial, k));
    for (std::size_t p = 0; p < pair_ids.size(); ++p) {
      const auto [x, y] = pair_ids[p];
      image_sum[p] += m.dist(f.assignment[static_cast<std::size_t>(x)],
                             f.assignment[static_cast<std::size_t>(y)]);
    }
  }

  StretchReport report;
  report.trials = trials;
  report.seed = seed;
  report.pairs.reserve(pair_ids.size());
  for (std::size_t p = 0; p < pair_ids.size(); ++p) {
    const auto [x, y] = pair_ids[p];
    StretchPair sp{x, y, m.dist(x, y), image_sum[p] / trials};
    report.max_mean_stretch = std::max(report.max_mean_stretch, sp.mean_stretch());
    report.pairs.push_back(sp);
  }
  return report;
}

StretchReport expected_stretch_graphic(const WeightedGraph& g,
                                       const TerminalSet& ordered_terminals,
                                       const MagnitudePolicy& magnitudes,
                                       int trials, std::uint64_t seed,
                                       FrontierOrder order) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const GraphicContext ctx(g, ordered_terminals);
  const int k = ordered_terminals.size();

  // True shortest-path distance per edge; edge weights may overshoot it.
  // One row at a time keeps this O(n) space.
  std::vector<double> edge_dist(g.num_edges());
  {
    std::vector<std::vector<std::size_t>> edges_by_source(
        static_cast<std::size_t>(g.num_vertices()));
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      edges_by_source[static_cast<std::size_t>(g.edges()[e].u)].push_back(e);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      if (edges_by_source[static_cast<std::size_t>(u)].empty()) continue;
      const std::vector<double> row = shortest_paths_from(g, u);
      for (std::size_t e : edges_by_source[static_cast<std::size_t>(u)])
        edge_dist[e] = row[static_cast<std::size_t>(g.edges()[e].v)];
    }
  }

  std::vector<double> image_sum(g.num_edges(), 0.0);
  for (int trial = 0; trial < trials; ++trial) {
    MagnitudePolicy per_trial = magnitudes;
    per_trial.seed = derive_seed(seed, seed_role::kTrial,
                                 static_cast<std::uint64_t>(trial));
    const TerminalPartition p = ctx.run(make_magnitudes(per_trial, k), order);
    if (auto why = partition_violation(g, ordered_terminals, p))
      throw std::logic_error("trial produced invalid partition: " + *why);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const int a = p.owner[static_cast<std::size_t>(g.edges()[e].u)];
      const int b = p.owner[static_cast<std::size_t>(g.edges()[e].v)];
      image_sum[e] += ctx.terminal_pair_dist(a, b);
    }
  }

  StretchReport report;
  report.trials = trials;
  report.seed = seed;
  report.pairs.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    StretchPair sp{g.edges()[e].u, g.edges()[e].v, edge_dist[e],
                   image_sum[e] / trials};
    report.max_mean_stretch = std::max(report.max_mean_stretch, sp.mean_stretch());
    report.pairs.push_back(sp);
  }
  return report;
}

std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g,
                                                VertexId cap) {
  const VertexId n = g.num_vertices();
  if (n > cap)
    throw std::invalid_argument(
        "floyd_warshall capped at n = " + std::to_string(cap) +
        "; use per-source Dijkstra for larger graphs");
  std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n),
                                                         kInfDist));
  for (VertexId v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0.0;
  for (const Edge& e : g.edges()) {
    auto& duv = d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    auto& dvu = d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
    duv = std::min(duv, e.w);
    dvu = std::min(dvu, e.w);
  }
  for (VertexId mid = 0; mid < n; ++mid)
    for (VertexId i = 0; i < n; ++i) {
      const double dim = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(mid)];
      if (dim == kInfDist) continue;
      for (VertexId j = 0; j < n; ++j) {
        const double cand = dim + d[static_cast<std::size_t>(mid)][static_cast<std::size_t>(j)];
        if (cand < d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cand;
      }
    }
  return d;
}

}  // namespace rvor
