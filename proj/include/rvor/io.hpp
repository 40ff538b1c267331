#pragma once

#include <iosfwd>
#include <string>

#include "rvor/core.hpp"

namespace rvor {

struct GraphInstance {
  WeightedGraph graph;
  TerminalSet terminals;  // file order is the ordering pi
};

// Plain-text instance format:
//   line 1: n m k
//   line 2: k whitespace-separated terminal ids (pi order)
//   then m lines: u v w
// Lines starting with '#' are skipped anywhere.
GraphInstance parse_graph_text(std::istream& in);
GraphInstance read_graph_file(const std::string& path);

void write_graph_text(std::ostream& out, const WeightedGraph& g,
                      const TerminalSet& terminals);
void write_graph_file(const std::string& path, const WeightedGraph& g,
                      const TerminalSet& terminals);

}  // namespace rvor
