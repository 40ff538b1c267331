#include "rvor/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rvor {

namespace {

// Pulls the next line that is neither blank nor a '#' comment.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

GraphInstance parse_graph_text(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line))
    throw std::runtime_error("graph text: missing header line");
  long long n = 0, m = 0, k = 0;
  {
    std::istringstream h(line);
    if (!(h >> n >> m >> k))
      throw std::runtime_error("graph text: header must be 'n m k'");
  }
  if (n <= 0 || m < 0 || k <= 0)
    throw std::runtime_error("graph text: header values out of range");

  if (!next_data_line(in, line))
    throw std::runtime_error("graph text: missing terminal line");
  TerminalSet terminals;
  {
    std::istringstream t(line);
    long long id = 0;
    while (t >> id) terminals.ids.push_back(static_cast<VertexId>(id));
  }
  if (static_cast<long long>(terminals.ids.size()) != k)
    throw std::runtime_error("graph text: expected " + std::to_string(k) +
                             " terminal ids, got " +
                             std::to_string(terminals.ids.size()));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw std::runtime_error("graph text: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    std::istringstream e(line);
    long long u = 0, v = 0;
    double w = 0.0;
    if (!(e >> u >> v >> w))
      throw std::runtime_error("graph text: bad edge line: " + line);
    edges.push_back(
        {static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }

  GraphInstance inst{WeightedGraph(static_cast<VertexId>(n), std::move(edges)),
                     std::move(terminals)};
  check_terminals(inst.terminals, inst.graph.num_vertices());
  return inst;
}

GraphInstance read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph_text(in);
}

void write_graph_text(std::ostream& out, const WeightedGraph& g,
                      const TerminalSet& terminals) {
  out << g.num_vertices() << ' ' << g.num_edges() << ' '
      << terminals.ids.size() << '\n';
  for (std::size_t i = 0; i < terminals.ids.size(); ++i)
    out << (i ? " " : "") << terminals.ids[i];
  out << '\n';
  out << std::setprecision(17);
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_graph_file(const std::string& path, const WeightedGraph& g,
                      const TerminalSet& terminals) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  write_graph_text(out, g, terminals);
}

}  // namespace rvor
