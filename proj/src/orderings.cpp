#include "rvor/orderings.hpp"

#include <algorithm>
#include <stdexcept>

namespace rvor {

namespace {

TerminalSet order_by_key(const TerminalSet& terminals,
                         const std::vector<double>& key) {
  TerminalSet out = terminals;
  std::stable_sort(out.ids.begin(), out.ids.end(), [&](VertexId a, VertexId b) {
    const double ka = key[static_cast<std::size_t>(a)];
    const double kb = key[static_cast<std::size_t>(b)];
    if (ka != kb) return ka < kb;
    return a < b;
  });
  return out;
}

// Farthest-first over an abstract distance callback.
template <typename DistFn>
TerminalSet gonzalez_generic(const TerminalSet& terminals, VertexId start,
                             DistFn dist) {
  const auto& ids = terminals.ids;
  if (std::find(ids.begin(), ids.end(), start) == ids.end())
    throw std::invalid_argument("gonzalez start must be a terminal");

  std::vector<VertexId> remaining;
  for (VertexId t : ids)
    if (t != start) remaining.push_back(t);
  std::sort(remaining.begin(), remaining.end());

  TerminalSet out;
  out.ids.reserve(ids.size());
  out.ids.push_back(start);
  std::vector<double> to_prefix(remaining.size());
  for (std::size_t i = 0; i < remaining.size(); ++i)
    to_prefix[i] = dist(remaining[i], start);

  while (!remaining.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i)
      if (to_prefix[i] > to_prefix[best]) best = i;  // ties: lower id wins
    const VertexId chosen = remaining[best];
    out.ids.push_back(chosen);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    to_prefix.erase(to_prefix.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t i = 0; i < remaining.size(); ++i)
      to_prefix[i] = std::min(to_prefix[i], dist(remaining[i], chosen));
  }
  return out;
}

}  // namespace

OrderingPolicy parse_order_spec(const std::string& spec) {
  OrderingPolicy p;
  if (spec == "given") {
    p.kind = OrderingPolicy::Kind::Given;
  } else if (spec.rfind("root:", 0) == 0) {
    p.kind = OrderingPolicy::Kind::RootDistance;
    p.anchor = static_cast<VertexId>(std::stol(spec.substr(5)));
  } else if (spec == "gonzalez") {
    p.kind = OrderingPolicy::Kind::Gonzalez;
  } else if (spec.rfind("gonzalez:", 0) == 0) {
    p.kind = OrderingPolicy::Kind::Gonzalez;
    p.anchor = static_cast<VertexId>(std::stol(spec.substr(9)));
  } else {
    throw std::invalid_argument("bad order spec: " + spec);
  }
  return p;
}

std::string format_order_spec(const OrderingPolicy& policy) {
  switch (policy.kind) {
    case OrderingPolicy::Kind::Given:
      return "given";
    case OrderingPolicy::Kind::RootDistance:
      return "root:" + std::to_string(policy.anchor.value_or(0));
    case OrderingPolicy::Kind::Gonzalez:
      return policy.anchor ? "gonzalez:" + std::to_string(*policy.anchor)
                           : "gonzalez";
  }
  return "given";
}

TerminalSet root_distance_order(const WeightedGraph& g,
                                const TerminalSet& terminals, VertexId root) {
  check_terminals(terminals, g.num_vertices());
  if (root < 0 || root >= g.num_vertices())
    throw std::invalid_argument("ordering root out of range");
  return order_by_key(terminals, shortest_paths_from(g, root));
}

TerminalSet root_distance_order(const MetricSpace& m,
                                const TerminalSet& terminals, VertexId root) {
  check_terminals(terminals, m.num_points());
  if (root < 0 || root >= m.num_points())
    throw std::invalid_argument("ordering root out of range");
  std::vector<double> key(static_cast<std::size_t>(m.num_points()));
  for (VertexId v = 0; v < m.num_points(); ++v) key[v] = m.dist(root, v);
  return order_by_key(terminals, key);
}

TerminalSet gonzalez_order(const MetricSpace& m, const TerminalSet& terminals,
                           VertexId start) {
  check_terminals(terminals, m.num_points());
  return gonzalez_generic(terminals, start,
                          [&](VertexId a, VertexId b) { return m.dist(a, b); });
}

TerminalSet gonzalez_order(const WeightedGraph& g, const TerminalSet& terminals,
                           VertexId start) {
  check_terminals(terminals, g.num_vertices());
  // Distance rows only for the terminals themselves.
  std::vector<std::vector<double>> rows;
  rows.reserve(terminals.ids.size());
  std::vector<int> row_of(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < terminals.ids.size(); ++i) {
    row_of[static_cast<std::size_t>(terminals.ids[i])] = static_cast<int>(i);
    rows.push_back(shortest_paths_from(g, terminals.ids[i]));
  }
  return gonzalez_generic(terminals, start, [&](VertexId a, VertexId b) {
    return rows[static_cast<std::size_t>(row_of[static_cast<std::size_t>(b)])]
               [static_cast<std::size_t>(a)];
  });
}

namespace {

VertexId lowest_id(const TerminalSet& terminals) {
  return *std::min_element(terminals.ids.begin(), terminals.ids.end());
}

}  // namespace

TerminalSet apply_ordering(const OrderingPolicy& policy, const WeightedGraph& g,
                           const TerminalSet& terminals) {
  switch (policy.kind) {
    case OrderingPolicy::Kind::Given:
      return terminals;
    case OrderingPolicy::Kind::RootDistance:
      return root_distance_order(g, terminals, policy.anchor.value_or(0));
    case OrderingPolicy::Kind::Gonzalez:
      return gonzalez_order(g, terminals,
                            policy.anchor.value_or(lowest_id(terminals)));
  }
  return terminals;
}

TerminalSet apply_ordering(const OrderingPolicy& policy, const MetricSpace& m,
                           const TerminalSet& terminals) {
  switch (policy.kind) {
    case OrderingPolicy::Kind::Given:
      return terminals;
    case OrderingPolicy::Kind::RootDistance:
      return root_distance_order(m, terminals, policy.anchor.value_or(0));
    case OrderingPolicy::Kind::Gonzalez:
      return gonzalez_order(m, terminals,
                            policy.anchor.value_or(lowest_id(terminals)));
  }
  return terminals;
}

}  // namespace rvor
