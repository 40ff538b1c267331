#pragma once

#include <optional>
#include <string>

#include "rvor/core.hpp"

namespace rvor {

/// How the terminal ordering is produced. Anchor is the root vertex for
/// RootDistance and the start terminal for Gonzalez; when absent, Gonzalez
/// starts from the lowest-id terminal.
struct OrderingPolicy {
  enum class Kind { Given, RootDistance, Gonzalez };
  Kind kind = Kind::Given;
  std::optional<VertexId> anchor;
};

// Parses "given" | "root:<id>" | "gonzalez" | "gonzalez:<id>".
OrderingPolicy parse_order_spec(const std::string& spec);
std::string format_order_spec(const OrderingPolicy& policy);

/// Terminals sorted by increasing distance from `root`, ties broken by lower
/// vertex id.
TerminalSet root_distance_order(const WeightedGraph& g,
                                const TerminalSet& terminals, VertexId root);
TerminalSet root_distance_order(const MetricSpace& m,
                                const TerminalSet& terminals, VertexId root);

/// Farthest-first traversal of the terminals: t1 = start, each next terminal
/// maximizes its distance to the prefix, ties broken by lower point id.
/// `start` must be a terminal.
TerminalSet gonzalez_order(const MetricSpace& m, const TerminalSet& terminals,
                           VertexId start);
// Graph flavor; distances between terminals come from one single-source run
// per terminal.
TerminalSet gonzalez_order(const WeightedGraph& g, const TerminalSet& terminals,
                           VertexId start);

TerminalSet apply_ordering(const OrderingPolicy& policy, const WeightedGraph& g,
                           const TerminalSet& terminals);
TerminalSet apply_ordering(const OrderingPolicy& policy, const MetricSpace& m,
                           const TerminalSet& terminals);

}  // namespace rvor
