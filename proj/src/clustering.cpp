#include "rvor/clustering.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <stdexcept>

namespace rvor {

namespace {

bool default_validation_from_env() {
  const char* v = std::getenv("RV_VALIDATE");
  if (v != nullptr) {
    if (std::strcmp(v, "always") == 0) return true;
    if (std::strcmp(v, "off") == 0) return false;
    // anything else, including "debug", falls through to the build default
  }
#ifdef NDEBUG
  return false;
#else
  return true;
#endif
}

bool g_engine_validation = default_validation_from_env();

void check_magnitudes(const MagnitudeVector& magnitudes, int k) {
  if (magnitudes.size() != k)
    throw std::invalid_argument("magnitude vector size mismatch");
  for (double r : magnitudes.values)
    if (!(r >= 1.0))
      throw std::invalid_argument("magnitudes must be >= 1");
}

}  // namespace

bool engine_validation_enabled() { return g_engine_validation; }
void set_engine_validation(bool enabled) { g_engine_validation = enabled; }

Retraction metric_relaxed_voronoi(const MetricSpace& m,
                                  const TerminalSet& ordered_terminals,
                                  const MagnitudeVector& magnitudes) {
  check_terminals(ordered_terminals, m.num_points());
  check_magnitudes(magnitudes, ordered_terminals.size());
  const std::vector<double> dist_K = terminal_distances(m, ordered_terminals);

  Retraction f;
  f.assignment.assign(static_cast<std::size_t>(m.num_points()), -1);
  for (int j = 0; j < ordered_terminals.size(); ++j) {
    const VertexId t = ordered_terminals.ids[static_cast<std::size_t>(j)];
    for (VertexId x = 0; x < m.num_points(); ++x) {
      if (f.assignment[static_cast<std::size_t>(x)] != -1) continue;
      if (claim_test(m.dist(t, x), magnitudes[j],
                     dist_K[static_cast<std::size_t>(x)]))
        f.assignment[static_cast<std::size_t>(x)] = t;
    }
  }
  // Every point is claimed no later than its nearest terminal's turn once all
  // magnitudes are >= 1.
  for (VertexId x = 0; x < m.num_points(); ++x)
    assert(f.assignment[static_cast<std::size_t>(x)] != -1);
  return f;
}

Retraction voronoi_baseline(const MetricSpace& m,
                            const TerminalSet& ordered_terminals) {
  check_terminals(ordered_terminals, m.num_points());
  Retraction f;
  f.assignment.resize(static_cast<std::size_t>(m.num_points()));
  for (VertexId x = 0; x < m.num_points(); ++x) {
    VertexId best = ordered_terminals.ids[0];
    double best_d = m.dist(x, best);
    for (VertexId t : ordered_terminals.ids) {
      const double d = m.dist(x, t);
      if (d < best_d) {  // strict: ties stay with the earlier terminal
        best_d = d;
        best = t;
      }
    }
    f.assignment[static_cast<std::size_t>(x)] = best;
  }
  return f;
}

std::vector<VertexId> create_cluster(const WeightedGraph& g,
                                     const std::vector<std::uint8_t>& unclustered,
                                     VertexId t_j, double magnitude,
                                     const std::vector<double>& terminal_dist,
                                     const std::vector<double>& dist_to_tj,
                                     FrontierOrder order) {
  // 0 untouched, 1 in frontier, 2 accepted, 3 rejected
  std::vector<std::uint8_t> state(static_cast<std::size_t>(g.num_vertices()), 0);
  std::deque<VertexId> frontier;
  std::vector<VertexId> cluster{t_j};
  state[static_cast<std::size_t>(t_j)] = 2;

  auto enqueue_neighbors = [&](VertexId v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!unclustered[static_cast<std::size_t>(nb.to)]) continue;
      if (state[static_cast<std::size_t>(nb.to)] != 0) continue;
      state[static_cast<std::size_t>(nb.to)] = 1;
      frontier.push_back(nb.to);
    }
  };
  enqueue_neighbors(t_j);

  while (!frontier.empty()) {
    VertexId v;
    if (order == FrontierOrder::Fifo) {
      v = frontier.front();
      frontier.pop_front();
    } else {
      v = frontier.back();
      frontier.pop_back();
    }
    if (claim_test(dist_to_tj[static_cast<std::size_t>(v)], magnitude,
                   terminal_dist[static_cast<std::size_t>(v)])) {
      state[static_cast<std::size_t>(v)] = 2;
      cluster.push_back(v);
      enqueue_neighbors(v);
    } else {
      state[static_cast<std::size_t>(v)] = 3;
    }
  }
  std::sort(cluster.begin(), cluster.end());
  return cluster;
}

GraphicContext::GraphicContext(const WeightedGraph& g,
                               TerminalSet ordered_terminals)
    : g_(&g), terminals_(std::move(ordered_terminals)) {
  check_terminals(terminals_, g.num_vertices());
  if (!g.connected())
    throw std::invalid_argument("graphic engine requires a connected graph");
  dist_K_ = terminal_distances(g, terminals_);
  rows_.reserve(terminals_.ids.size());
  for (VertexId t : terminals_.ids) rows_.push_back(shortest_paths_from(g, t));
}

TerminalPartition GraphicContext::run(const MagnitudeVector& magnitudes,
                                      FrontierOrder order) const {
  const int k = terminals_.size();
  check_magnitudes(magnitudes, k);
  const VertexId n = g_->num_vertices();

  std::vector<std::uint8_t> unclustered(static_cast<std::size_t>(n), 1);
  for (VertexId t : terminals_.ids) unclustered[static_cast<std::size_t>(t)] = 0;

  TerminalPartition p;
  p.clusters.resize(static_cast<std::size_t>(k));
  p.owner.assign(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < k; ++j) {
    const VertexId t = terminals_.ids[static_cast<std::size_t>(j)];
    std::vector<VertexId> cluster = create_cluster(
        *g_, unclustered, t, magnitudes[j], dist_K_,
        rows_[static_cast<std::size_t>(j)], order);
    for (VertexId v : cluster) {
      unclustered[static_cast<std::size_t>(v)] = 0;
      p.owner[static_cast<std::size_t>(v)] = j;
    }
    p.clusters[static_cast<std::size_t>(j)] = std::move(cluster);
  }

  if (engine_validation_enabled()) {
    if (auto why = partition_violation(*g_, terminals_, p))
      throw std::logic_error("graphic engine produced invalid partition: " +
                             *why);
  }
  return p;
}

TerminalPartition graphic_relaxed_voronoi(const WeightedGraph& g,
                                          const TerminalSet& ordered_terminals,
                                          const MagnitudeVector& magnitudes,
                                          FrontierOrder order) {
  return GraphicContext(g, ordered_terminals).run(magnitudes, order);
}

std::optional<std::string> partition_violation(const WeightedGraph& g,
                                               const TerminalSet& terminals,
                                               const TerminalPartition& p) {
  const VertexId n = g.num_vertices();
  const int k = terminals.size();
  if (p.num_clusters() != k) return "cluster count differs from terminal count";
  if (p.owner.size() != static_cast<std::size_t>(n))
    return "owner array size differs from vertex count";

  std::vector<std::int32_t> seen(static_cast<std::size_t>(n), -1);
  std::size_t covered = 0;
  for (int i = 0; i < k; ++i) {
    for (VertexId v : p.clusters[static_cast<std::size_t>(i)]) {
      if (v < 0 || v >= n) return "cluster vertex out of range";
      if (seen[static_cast<std::size_t>(v)] != -1)
        return "clusters not disjoint: vertex " + std::to_string(v) +
               " in clusters " +
               std::to_string(seen[static_cast<std::size_t>(v)]) + " and " +
               std::to_string(i);
      seen[static_cast<std::size_t>(v)] = i;
      ++covered;
    }
    if (p.owner.size() == static_cast<std::size_t>(n))
      for (VertexId v : p.clusters[static_cast<std::size_t>(i)])
        if (p.owner[static_cast<std::size_t>(v)] != i)
          return "owner map disagrees with cluster list at vertex " +
                 std::to_string(v);
  }
  if (covered != static_cast<std::size_t>(n))
    return "clusters do not cover all vertices (" + std::to_string(covered) +
           " of " + std::to_string(n) + ")";

  for (int i = 0; i < k; ++i) {
    const VertexId t = terminals.ids[static_cast<std::size_t>(i)];
    if (seen[static_cast<std::size_t>(t)] != i)
      return "terminal " + std::to_string(t) + " not inside its own cluster " +
             std::to_string(i);
  }

  // Connectivity of every induced subgraph G[V_i], one BFS per cluster.
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack;
  for (int i = 0; i < k; ++i) {
    const auto& cluster = p.clusters[static_cast<std::size_t>(i)];
    stack.assign(1, terminals.ids[static_cast<std::size_t>(i)]);
    visited[static_cast<std::size_t>(stack[0])] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (seen[static_cast<std::size_t>(nb.to)] != i) continue;
        if (visited[static_cast<std::size_t>(nb.to)]) continue;
        visited[static_cast<std::size_t>(nb.to)] = 1;
        ++reached;
        stack.push_back(nb.to);
      }
    }
    if (reached != cluster.size())
      return "cluster " + std::to_string(i) + " induces a disconnected subgraph";
  }
  return std::nullopt;
}

InducedMinor induce_minor(const WeightedGraph& g, const TerminalSet& terminals,
                          const TerminalPartition& p,
                          const std::vector<std::vector<double>>& terminal_rows) {
  if (auto why = partition_violation(g, terminals, p))
    throw std::invalid_argument("induce_minor: invalid partition: " + *why);

  InducedMinor minor;
  minor.k = terminals.size();
  std::vector<std::pair<int, int>> crossing;
  for (const Edge& e : g.edges()) {
    const int a = p.owner[static_cast<std::size_t>(e.u)];
    const int b = p.owner[static_cast<std::size_t>(e.v)];
    if (a != b) crossing.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(crossing.begin(), crossing.end());
  crossing.erase(std::unique(crossing.begin(), crossing.end()), crossing.end());

  minor.edges.reserve(crossing.size());
  for (auto [i, j] : crossing) {
    const VertexId tj = terminals.ids[static_cast<std::size_t>(j)];
    minor.edges.push_back(
        {i, j, terminal_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(tj)]});
  }
  return minor;
}

InducedMinor induce_minor(const WeightedGraph& g, const TerminalSet& terminals,
                          const TerminalPartition& p) {
  std::vector<std::vector<double>> rows;
  rows.reserve(terminals.ids.size());
  for (VertexId t : terminals.ids) rows.push_back(shortest_paths_from(g, t));
  return induce_minor(g, terminals, p, rows);
}

WeightedGraph minor_graph(const InducedMinor& minor) {
  std::vector<Edge> edges;
  edges.reserve(minor.edges.size());
  for (const MinorEdge& e : minor.edges)
    edges.push_back({static_cast<VertexId>(e.i), static_cast<VertexId>(e.j), e.w});
  return WeightedGraph(static_cast<VertexId>(minor.k), std::move(edges));
}

Retraction to_retraction(const TerminalPartition& p,
                         const TerminalSet& terminals) {
  Retraction f;
  f.assignment.resize(p.owner.size());
  for (std::size_t v = 0; v < p.owner.size(); ++v)
    f.assignment[v] = terminals.ids[static_cast<std::size_t>(p.owner[v])];
  return f;
}

}  // namespace rvor
