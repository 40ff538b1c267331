#include "rvor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "rvor/rng.hpp"

namespace rvor {

RootedTree complete_binary_tree(int height) {
  if (height < 1) throw std::invalid_argument("tree height must be >= 1");
  if (height > 29) throw std::invalid_argument("tree height too large");
  const VertexId n = (VertexId{1} << (height + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (VertexId v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v, 1.0});
  return RootedTree(WeightedGraph(n, std::move(edges)), 0);
}

WeightedGraph random_tree(VertexId n, double wmin, double wmax,
                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree size must be >= 1");
  if (!(wmin >= 0.0) || wmax < wmin)
    throw std::invalid_argument("bad weight range");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (VertexId v = 1; v < n; ++v) {
    const VertexId parent =
        static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(v)));
    edges.push_back({parent, v, rng.uniform(wmin, wmax)});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph random_connected_graph(VertexId n, std::size_t m, double wmin,
                                     double wmax, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("graph size must be >= 1");
  const std::size_t max_edges =
      static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  if (m + 1 < static_cast<std::size_t>(n) || m > max_edges)
    throw std::invalid_argument("edge count out of range for connected graph");

  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> used;
  auto key = [n](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + b;
  };

  std::vector<Edge> edges;
  edges.reserve(m);
  for (VertexId v = 1; v < n; ++v) {
    const VertexId parent =
        static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(v)));
    edges.push_back({parent, v, rng.uniform(wmin, wmax)});
    used.insert(key(parent, v));
  }
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
    const auto v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (!used.insert(key(u, v)).second) continue;
    edges.push_back({u, v, rng.uniform(wmin, wmax)});
  }
  return WeightedGraph(n, std::move(edges));
}

MetricSpace grid_metric(int side, double p) {
  if (side < 2) throw std::invalid_argument("grid side must be >= 2");
  if (!(p >= 1.0)) throw std::invalid_argument("p-norm must be >= 1");
  const VertexId n = static_cast<VertexId>(side) * side;
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (VertexId a = 0; a < n; ++a) {
    const double ar = a / side, ac = a % side;
    for (VertexId b = 0; b < n; ++b) {
      const double dr = std::abs(ar - b / side);
      const double dc = std::abs(ac - b % side);
      double dist;
      if (p == 1.0)
        dist = dr + dc;
      else if (p == 2.0)
        dist = std::hypot(dr, dc);
      else
        dist = std::pow(std::pow(dr, p) + std::pow(dc, p), 1.0 / p);
      d[static_cast<std::size_t>(a) * n + b] = dist;
    }
  }
  return MetricSpace(n, std::move(d));
}

WeightedGraph grid_graph(int side) {
  if (side < 2) throw std::invalid_argument("grid side must be >= 2");
  const VertexId n = static_cast<VertexId>(side) * side;
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(side) * (side - 1));
  for (VertexId v = 0; v < n; ++v) {
    if (v % side + 1 < side) edges.push_back({v, v + 1, 1.0});
    if (v / side + 1 < side) edges.push_back({v, v + side, 1.0});
  }
  return WeightedGraph(n, std::move(edges));
}

TerminalSet leaf_terminals(const WeightedGraph& g) {
  TerminalSet terminals;
  if (g.num_vertices() == 1) {
    terminals.ids.push_back(0);
    return terminals;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 1) terminals.ids.push_back(v);
  return terminals;
}

TerminalSet random_terminals(VertexId n, int k, std::uint64_t seed) {
  if (k < 1 || k > n) throw std::invalid_argument("terminal count out of range");
  SplitMix64 rng(derive_seed(seed, seed_role::kTerminals, 0));
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  TerminalSet terminals;
  terminals.ids.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const std::size_t j =
        static_cast<std::size_t>(i) +
        rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    terminals.ids.push_back(pool[static_cast<std::size_t>(i)]);
  }
  return terminals;
}

double estimate_ddim(const MetricSpace& m) {
  const VertexId n = m.num_points();
  if (n < 2) throw std::invalid_argument("need at least two points");
  double dmax = 0.0;
  double dmin_pos = kInfDist;
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y) {
      const double d = m.dist(x, y);
      dmax = std::max(dmax, d);
      if (d > 0.0) dmin_pos = std::min(dmin_pos, d);
    }
  if (dmax == 0.0)
    throw std::invalid_argument("degenerate metric: all distances zero");

  // Greedy net at scale r: keep a point iff it is > r from every kept point.
  auto build_net = [&](double r) {
    std::vector<VertexId> net;
    for (VertexId x = 0; x < n; ++x) {
      bool covered = false;
      for (VertexId c : net)
        if (m.dist(x, c) <= r) {
          covered = true;
          break;
        }
      if (!covered) net.push_back(x);
    }
    return net;
  };

  double estimate = 0.0;
  for (double r = dmax; r >= dmin_pos / 2.0; r /= 2.0) {
    const std::vector<VertexId> fine = build_net(r / 2.0);
    std::size_t worst = 0;
    for (VertexId center = 0; center < n; ++center) {
      std::size_t count = 0;
      for (VertexId q : fine)
        if (m.dist(center, q) <= r) ++count;
      worst = std::max(worst, count);
    }
    if (worst > 0)
      estimate = std::max(estimate, std::log2(static_cast<double>(worst)));
  }
  return estimate;
}

}  // namespace rvor
