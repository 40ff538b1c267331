#include "rvor/core.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace rvor {

WeightedGraph::WeightedGraph(VertexId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w >= 0.0) || !std::isfinite(e.w))
      throw std::invalid_argument("edge weight must be finite and >= 0");
  }

  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++offset_[static_cast<std::size_t>(e.u) + 1];
    ++offset_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < offset_.size(); ++i) offset_[i] += offset_[i - 1];
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offset_.begin(), offset_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, e.w};
    adj_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, e.w};
  }

  // Connectivity flag via BFS.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(nb.to)]) {
        seen[static_cast<std::size_t>(nb.to)] = 1;
        ++reached;
        stack.push_back(nb.to);
      }
    }
  }
  connected_ = (reached == static_cast<std::size_t>(n));
}

MetricSpace::MetricSpace(VertexId n, std::vector<double> dist_row_major,
                         TriangleCheck check)
    : n_(n), d_(std::move(dist_row_major)) {
  if (n <= 0) throw std::invalid_argument("metric needs at least one point");
  if (d_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("distance matrix size mismatch");
  for (VertexId x = 0; x < n_; ++x) {
    if (std::abs(dist(x, x)) > kTolerance)
      throw std::invalid_argument("nonzero diagonal at point " +
                                  std::to_string(x));
    for (VertexId y = 0; y < n_; ++y) {
      const double dxy = dist(x, y);
      if (!(dxy >= 0.0) || !std::isfinite(dxy))
        throw std::invalid_argument("distances must be finite and >= 0");
      if (std::abs(dxy - dist(y, x)) > kTolerance)
        throw std::invalid_argument("asymmetric distance between " +
                                    std::to_string(x) + " and " +
                                    std::to_string(y));
    }
  }
  if (check == TriangleCheck::Force ||
      (check == TriangleCheck::Auto && n_ <= kTriangleCheckLimit))
    validate_triangle_inequality();
}

void MetricSpace::validate_triangle_inequality() const {
  for (VertexId x = 0; x < n_; ++x)
    for (VertexId z = 0; z < n_; ++z)
      for (VertexId y = 0; y < n_; ++y)
        if (dist(x, y) > dist(x, z) + dist(z, y) + kTolerance)
          throw std::invalid_argument(
              "triangle inequality violated on (" + std::to_string(x) + "," +
              std::to_string(y) + "," + std::to_string(z) + ")");
}

void check_terminals(const TerminalSet& terminals, VertexId n) {
  if (terminals.ids.empty())
    throw std::invalid_argument("terminal set must be nonempty");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (VertexId t : terminals.ids) {
    if (t < 0 || t >= n)
      throw std::invalid_argument("terminal id out of range: " +
                                  std::to_string(t));
    if (seen[static_cast<std::size_t>(t)])
      throw std::invalid_argument("duplicate terminal id: " +
                                  std::to_string(t));
    seen[static_cast<std::size_t>(t)] = 1;
  }
}

namespace {

using HeapItem = std::pair<double, VertexId>;

std::vector<double> dijkstra(const WeightedGraph& g,
                             std::span<const VertexId> sources) {
  std::vector<double> dist(static_cast<std::size_t>(g.num_vertices()),
                           kInfDist);
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  for (VertexId s : sources) {
    dist[static_cast<std::size_t>(s)] = 0.0;
    heap.emplace(0.0, s);
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;  // stale entry
    for (const Neighbor& nb : g.neighbors(v)) {
      const double cand = d + nb.w;
      if (cand < dist[static_cast<std::size_t>(nb.to)]) {
        dist[static_cast<std::size_t>(nb.to)] = cand;
        heap.emplace(cand, nb.to);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<double> shortest_paths_from(const WeightedGraph& g,
                                        VertexId source) {
  if (source < 0 || source >= g.num_vertices())
    throw std::invalid_argument("source vertex out of range");
  const VertexId sources[] = {source};
  return dijkstra(g, sources);
}

std::vector<double> terminal_distances(const WeightedGraph& g,
                                       const TerminalSet& terminals) {
  check_terminals(terminals, g.num_vertices());
  return dijkstra(g, terminals.ids);
}

std::vector<double> terminal_distances(const MetricSpace& m,
                                       const TerminalSet& terminals) {
  check_terminals(terminals, m.num_points());
  std::vector<double> dist(static_cast<std::size_t>(m.num_points()), kInfDist);
  for (VertexId x = 0; x < m.num_points(); ++x)
    for (VertexId t : terminals.ids)
      dist[static_cast<std::size_t>(x)] =
          std::min(dist[static_cast<std::size_t>(x)], m.dist(x, t));
  return dist;
}

MetricSpace metric_from_graph(const WeightedGraph& g) {
  if (!g.connected())
    throw std::invalid_argument(
        "metric_from_graph requires a connected graph");
  const VertexId n = g.num_vertices();
  std::vector<double> d(static_cast<std::size_t>(n) * n);
  for (VertexId s = 0; s < n; ++s) {
    std::vector<double> row = shortest_paths_from(g, s);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::size_t>(s) * n);
  }
  // Rows from opposite endpoints can disagree in the last ulp (different
  // summation order along the same path); force bitwise symmetry.
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y)
      d[static_cast<std::size_t>(y) * n + x] =
          d[static_cast<std::size_t>(x) * n + y];
  return MetricSpace(n, std::move(d));
}

}  // namespace rvor
