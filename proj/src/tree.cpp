#include "rvor/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rvor {

RootedTree::RootedTree(WeightedGraph g, VertexId root)
    : g_(std::move(g)), root_(root) {
  const VertexId n = g_.num_vertices();
  if (root < 0 || root >= n)
    throw std::invalid_argument("tree root out of range");
  if (g_.num_edges() != static_cast<std::size_t>(n) - 1 || !g_.connected())
    throw std::invalid_argument("input graph is not a tree");

  order_.reserve(static_cast<std::size_t>(n));
  order_.push_back(root);
  pos_.assign(static_cast<std::size_t>(n), -1);
  pos_[static_cast<std::size_t>(root)] = 0;
  parent_pos_.assign(static_cast<std::size_t>(n), -1);
  parent_w_.assign(static_cast<std::size_t>(n), 0.0);
  child_begin_.assign(static_cast<std::size_t>(n) + 1, 0);

  for (std::size_t head = 0; head < order_.size(); ++head) {
    child_begin_[head] = static_cast<VertexId>(order_.size());
    const VertexId v = order_[head];
    for (const Neighbor& nb : g_.neighbors(v)) {
      if (pos_[static_cast<std::size_t>(nb.to)] != -1) continue;
      const VertexId child_pos = static_cast<VertexId>(order_.size());
      pos_[static_cast<std::size_t>(nb.to)] = child_pos;
      parent_pos_[static_cast<std::size_t>(child_pos)] =
          static_cast<VertexId>(head);
      parent_w_[static_cast<std::size_t>(child_pos)] = nb.w;
      order_.push_back(nb.to);
    }
  }
  child_begin_[static_cast<std::size_t>(n)] = n;
}

namespace {

// Position-space two-sweep; the public wrapper scatters back to id space.
std::vector<double> terminal_distances_by_pos(const RootedTree& t,
                                              const TerminalSet& terminals,
                                              std::uint64_t* edge_touches) {
  const VertexId n = t.num_vertices();
  std::uint64_t touches = 0;

  // Upward: best terminal among descendants (kInfDist when none).
  std::vector<double> dist(static_cast<std::size_t>(n), kInfDist);
  for (VertexId v : terminals.ids)
    dist[static_cast<std::size_t>(t.pos_of(v))] = 0.0;
  for (VertexId pos = n - 1; pos >= 1; --pos) {
    const VertexId p = t.parent_pos(pos);
    const double through =
        dist[static_cast<std::size_t>(pos)] + t.parent_weight_at(pos);
    ++touches;
    if (through < dist[static_cast<std::size_t>(p)])
      dist[static_cast<std::size_t>(p)] = through;
  }

  // Downward: fold in the best path through the parent.
  for (VertexId pos = 1; pos < n; ++pos) {
    const double through =
        dist[static_cast<std::size_t>(t.parent_pos(pos))] +
        t.parent_weight_at(pos);
    ++touches;
    if (through < dist[static_cast<std::size_t>(pos)])
      dist[static_cast<std::size_t>(pos)] = through;
  }

  if (edge_touches) *edge_touches += touches;
  return dist;
}

std::vector<double> root_distances_by_pos(const RootedTree& t,
                                          std::uint64_t* edge_touches) {
  const VertexId n = t.num_vertices();
  std::vector<double> dist(static_cast<std::size_t>(n));
  dist[0] = 0.0;
  for (VertexId pos = 1; pos < n; ++pos)
    dist[static_cast<std::size_t>(pos)] =
        dist[static_cast<std::size_t>(t.parent_pos(pos))] +
        t.parent_weight_at(pos);
  if (edge_touches) *edge_touches += static_cast<std::uint64_t>(n) - 1;
  return dist;
}

std::vector<double> to_id_space(const RootedTree& t,
                                const std::vector<double>& by_pos) {
  std::vector<double> by_id(by_pos.size());
  for (VertexId pos = 0; pos < t.num_vertices(); ++pos)
    by_id[static_cast<std::size_t>(t.id_at(pos))] =
        by_pos[static_cast<std::size_t>(pos)];
  return by_id;
}

}  // namespace

std::vector<double> tree_terminal_distances(const RootedTree& t,
                                            const TerminalSet& terminals,
                                            std::uint64_t* edge_touches) {
  check_terminals(terminals, t.num_vertices());
  return to_id_space(t, terminal_distances_by_pos(t, terminals, edge_touches));
}

std::vector<double> tree_root_distances(const RootedTree& t,
                                        std::uint64_t* edge_touches) {
  return to_id_space(t, root_distances_by_pos(t, edge_touches));
}

SprTreeResult spr_tree(const RootedTree& t, const TerminalSet& terminals,
                       double magnitude) {
  const VertexId n = t.num_vertices();
  check_terminals(terminals, n);
  if (!(magnitude >= 1.0))
    throw std::invalid_argument("magnitude must be >= 1");

  SprTreeResult result;
  const std::vector<double> root_dist =
      root_distances_by_pos(t, &result.edge_touches);

  result.order = terminals;
  std::sort(result.order.ids.begin(), result.order.ids.end(),
            [&](VertexId a, VertexId b) {
              const double da = root_dist[static_cast<std::size_t>(t.pos_of(a))];
              const double db = root_dist[static_cast<std::size_t>(t.pos_of(b))];
              if (da != db) return da < db;
              return a < b;
            });
  const int k = result.order.size();

  const std::vector<double> dist_K =
      terminal_distances_by_pos(t, terminals, &result.edge_touches);

  std::vector<std::uint8_t> is_terminal(static_cast<std::size_t>(n), 0);
  for (VertexId v : terminals.ids)
    is_terminal[static_cast<std::size_t>(t.pos_of(v))] = 1;

  // Cluster growth in position space. A candidate's distance to the terminal
  // is exact on first touch because tree paths are unique, so no rejected-set
  // bookkeeping is needed; a rejected vertex can only be reached again from a
  // different cluster.
  std::vector<std::int32_t> owner(static_cast<std::size_t>(n), -1);
  std::vector<double> dist_in_cluster(static_cast<std::size_t>(n), 0.0);
  std::vector<VertexId> frontier;
  for (int j = 0; j < k; ++j) {
    const VertexId t_j = t.pos_of(result.order.ids[static_cast<std::size_t>(j)]);
    owner[static_cast<std::size_t>(t_j)] = j;
    dist_in_cluster[static_cast<std::size_t>(t_j)] = 0.0;
    frontier.clear();

    auto try_claim = [&](VertexId cand, double cand_dist) {
      if (owner[static_cast<std::size_t>(cand)] != -1) return;
      if (is_terminal[static_cast<std::size_t>(cand)]) return;
      ++result.edge_touches;  // one claim test per edge across the whole run
      if (!claim_test(cand_dist, magnitude, dist_K[static_cast<std::size_t>(cand)]))
        return;
      owner[static_cast<std::size_t>(cand)] = j;
      dist_in_cluster[static_cast<std::size_t>(cand)] = cand_dist;
      frontier.push_back(cand);
    };
    auto grow = [&](VertexId p) {
      const double base = dist_in_cluster[static_cast<std::size_t>(p)];
      if (p != 0) try_claim(t.parent_pos(p), base + t.parent_weight_at(p));
      for (VertexId c = t.child_begin(p); c < t.child_end(p); ++c)
        try_claim(c, base + t.parent_weight_at(c));
    };
    grow(t_j);
    for (std::size_t head = 0; head < frontier.size(); ++head)
      grow(frontier[head]);
  }

  // Back to id space: owner per vertex, clusters listed in ascending id.
  // Cluster sizes are counted first so the per-cluster vectors are allocated
  // exactly once.
  result.partition.owner.assign(static_cast<std::size_t>(n), -1);
  result.partition.clusters.assign(static_cast<std::size_t>(k), {});
  std::vector<VertexId> cluster_size(static_cast<std::size_t>(k), 0);
  for (VertexId pos = 0; pos < n; ++pos) {
    const std::int32_t c = owner[static_cast<std::size_t>(pos)];
    if (c == -1)
      throw std::logic_error("tree clustering left a vertex unclustered");
    ++cluster_size[static_cast<std::size_t>(c)];
    result.partition.owner[static_cast<std::size_t>(t.id_at(pos))] = c;
  }
  for (int c = 0; c < k; ++c)
    result.partition.clusters[static_cast<std::size_t>(c)].reserve(
        static_cast<std::size_t>(cluster_size[static_cast<std::size_t>(c)]));
  for (VertexId v = 0; v < n; ++v)
    result.partition.clusters[static_cast<std::size_t>(
        result.partition.owner[static_cast<std::size_t>(v)])].push_back(v);

  // Minor from crossing edges. Both endpoints carry their exact distance to
  // their own terminal, so each crossing edge prices the unique terminal-to-
  // terminal path directly. On a tree there are exactly k-1 crossing edges.
  result.minor.k = k;
  for (VertexId pos = 1; pos < n; ++pos) {
    const int a = owner[static_cast<std::size_t>(pos)];
    const int b = owner[static_cast<std::size_t>(t.parent_pos(pos))];
    if (a == b) continue;
    const double w =
        dist_in_cluster[static_cast<std::size_t>(pos)] + t.parent_weight_at(pos) +
        dist_in_cluster[static_cast<std::size_t>(t.parent_pos(pos))];
    result.minor.edges.push_back({std::min(a, b), std::max(a, b), w});
  }
  std::sort(result.minor.edges.begin(), result.minor.edges.end(),
            [](const MinorEdge& x, const MinorEdge& y) {
              return std::make_pair(x.i, x.j) < std::make_pair(y.i, y.j);
            });

  if (engine_validation_enabled()) {
    if (auto why = partition_violation(t.graph(), result.order, result.partition))
      throw std::logic_error("tree pipeline produced invalid partition: " + *why);
  }
  return result;
}

}  // namespace rvor
