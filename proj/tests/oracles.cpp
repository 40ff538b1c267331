#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "rvor/evaluation.hpp"

namespace rvor::testing {

Retraction naive_metric_rv(const MetricSpace& m, const TerminalSet& terminals,
                           const std::vector<double>& magnitudes) {
  const VertexId n = m.num_points();
  std::vector<double> nearest(static_cast<std::size_t>(n), kInfDist);
  for (VertexId x = 0; x < n; ++x)
    for (VertexId t : terminals.ids)
      nearest[static_cast<std::size_t>(x)] =
          std::min(nearest[static_cast<std::size_t>(x)], m.dist(x, t));

  Retraction f;
  f.assignment.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < terminals.ids.size(); ++j) {
    const VertexId t = terminals.ids[j];
    for (VertexId x = 0; x < n; ++x) {
      if (f.assignment[static_cast<std::size_t>(x)] != -1) continue;
      const double bound = magnitudes[j] * nearest[static_cast<std::size_t>(x)];
      if (nearest[static_cast<std::size_t>(x)] == 0.0
              ? m.dist(t, x) <= 0.0
              : m.dist(t, x) <= bound)
        f.assignment[static_cast<std::size_t>(x)] = t;
    }
  }
  return f;
}

std::vector<std::vector<VertexId>> naive_graphic_rv(
    const WeightedGraph& g, const TerminalSet& terminals,
    const std::vector<double>& magnitudes) {
  const VertexId n = g.num_vertices();
  const auto dist = floyd_warshall(g);
  std::vector<double> nearest(static_cast<std::size_t>(n), kInfDist);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId t : terminals.ids)
      nearest[static_cast<std::size_t>(v)] =
          std::min(nearest[static_cast<std::size_t>(v)],
                   dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)]);

  std::set<VertexId> unclustered;
  for (VertexId v = 0; v < n; ++v) unclustered.insert(v);
  for (VertexId t : terminals.ids) unclustered.erase(t);

  std::vector<std::vector<VertexId>> clusters;
  for (std::size_t j = 0; j < terminals.ids.size(); ++j) {
    const VertexId t = terminals.ids[j];
    std::set<VertexId> cluster{t};
    std::set<VertexId> rejected;
    std::set<VertexId> frontier;
    for (const Neighbor& nb : g.neighbors(t))
      if (unclustered.count(nb.to)) frontier.insert(nb.to);

    while (!frontier.empty()) {
      const VertexId v = *frontier.begin();
      frontier.erase(frontier.begin());
      const double d =
          dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
      const double D = nearest[static_cast<std::size_t>(v)];
      if (D == 0.0 ? d <= 0.0 : d <= magnitudes[j] * D) {
        cluster.insert(v);
        for (const Neighbor& nb : g.neighbors(v))
          if (unclustered.count(nb.to) && !rejected.count(nb.to) &&
              !cluster.count(nb.to))
            frontier.insert(nb.to);
      } else {
        rejected.insert(v);
      }
    }
    for (VertexId v : cluster) unclustered.erase(v);
    clusters.emplace_back(cluster.begin(), cluster.end());
  }
  return clusters;
}

std::vector<VertexId> reachable_passing_set(
    const WeightedGraph& g, const std::vector<std::uint8_t>& unclustered,
    VertexId t, double magnitude, const std::vector<double>& terminal_dist,
    const std::vector<double>& dist_to_t) {
  auto passes = [&](VertexId v) {
    const double D = terminal_dist[static_cast<std::size_t>(v)];
    const double d = dist_to_t[static_cast<std::size_t>(v)];
    return D == 0.0 ? d <= 0.0 : d <= magnitude * D;
  };
  std::set<VertexId> members{t};
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : std::vector<VertexId>(members.begin(), members.end()))
      for (const Neighbor& nb : g.neighbors(v)) {
        if (members.count(nb.to)) continue;
        if (!unclustered[static_cast<std::size_t>(nb.to)]) continue;
        if (!passes(nb.to)) continue;
        members.insert(nb.to);
        changed = true;
      }
  }
  return {members.begin(), members.end()};
}

std::vector<VertexId> naive_gonzalez(const MetricSpace& m,
                                     const std::vector<VertexId>& terminals,
                                     VertexId start) {
  std::vector<VertexId> order{start};
  std::set<VertexId> left(terminals.begin(), terminals.end());
  left.erase(start);
  while (!left.empty()) {
    VertexId best = -1;
    double best_d = -1.0;
    for (VertexId cand : left) {
      double to_prefix = kInfDist;
      for (VertexId chosen : order)
        to_prefix = std::min(to_prefix, m.dist(cand, chosen));
      if (to_prefix > best_d) {  // std::set iterates ascending: lowest id wins ties
        best_d = to_prefix;
        best = cand;
      }
    }
    order.push_back(best);
    left.erase(best);
  }
  return order;
}

double tree_path_distance(const WeightedGraph& tree, VertexId a, VertexId b) {
  const VertexId n = tree.num_vertices();
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -2);
  std::vector<double> parent_w(static_cast<std::size_t>(n), 0.0);
  std::vector<VertexId> stack{a};
  parent[static_cast<std::size_t>(a)] = -1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : tree.neighbors(v)) {
      if (parent[static_cast<std::size_t>(nb.to)] != -2) continue;
      parent[static_cast<std::size_t>(nb.to)] = v;
      parent_w[static_cast<std::size_t>(nb.to)] = nb.w;
      stack.push_back(nb.to);
    }
  }
  if (parent[static_cast<std::size_t>(b)] == -2)
    throw std::logic_error("tree_path_distance: disconnected input");
  double total = 0.0;
  for (VertexId v = b; v != a; v = parent[static_cast<std::size_t>(v)])
    total += parent_w[static_cast<std::size_t>(v)];
  return total;
}

}  // namespace rvor::testing
