#include <algorithm>
#include <cmath>

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rvor/evaluation.hpp"
#include "rvor/generators.hpp"
#include "rvor/orderings.hpp"

using namespace rvor;

TEST_CASE("root distance order on a forced path") {
  const WeightedGraph path(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  const TerminalSet ordered =
      root_distance_order(path, TerminalSet{{3, 1}}, 0);
  CHECK(ordered.ids == std::vector<VertexId>{1, 3});
}

TEST_CASE("a terminal root comes first") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const WeightedGraph g = random_connected_graph(25, 50, 1.0, 10.0, seed);
    const TerminalSet terminals = random_terminals(25, 5, seed);
    const VertexId root = terminals.ids[2];
    const TerminalSet ordered = root_distance_order(g, terminals, root);
    CHECK(ordered.ids.front() == root);
  }
}

TEST_CASE("root distance order matches sorting the oracle row") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const WeightedGraph tree = random_tree(30, 1.0, 10.0, seed);
    const TerminalSet terminals = random_terminals(30, 8, seed + 100);
    const VertexId root = static_cast<VertexId>(seed % 30);
    const TerminalSet ordered = root_distance_order(tree, terminals, root);

    const auto fw = floyd_warshall(tree);
    TerminalSet expected = terminals;
    std::sort(expected.ids.begin(), expected.ids.end(),
              [&](VertexId a, VertexId b) {
                if (fw[root][a] != fw[root][b]) return fw[root][a] < fw[root][b];
                return a < b;
              });
    CHECK(ordered.ids == expected.ids);
  }
}

TEST_CASE("gonzalez on collinear points is farthest-first") {
  // points at coordinates 0, 3, 10
  const std::vector<double> coords{0.0, 3.0, 10.0};
  std::vector<double> d(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      d[static_cast<std::size_t>(i) * 3 + j] = std::abs(coords[i] - coords[j]);
  const MetricSpace m(3, std::move(d));
  const TerminalSet ordered = gonzalez_order(m, TerminalSet{{0, 1, 2}}, 0);
  CHECK(ordered.ids == std::vector<VertexId>{0, 2, 1});
}

TEST_CASE("gonzalez singleton and bad start") {
  const MetricSpace m(2, {0.0, 1.0, 1.0, 0.0});
  CHECK(gonzalez_order(m, TerminalSet{{1}}, 1).ids == std::vector<VertexId>{1});
  CHECK_THROWS_AS(gonzalez_order(m, TerminalSet{{1}}, 0),
                  std::invalid_argument);
}

TEST_CASE("gonzalez matches step-by-step recomputation on random points") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    SplitMix64 rng(seed);
    const int n = 20;
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      xs[static_cast<std::size_t>(i)] = rng.next_unit();
      ys[static_cast<std::size_t>(i)] = rng.next_unit();
    }
    std::vector<double> d(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[static_cast<std::size_t>(i) * n + j] =
            std::hypot(xs[i] - xs[j], ys[i] - ys[j]);
    const MetricSpace m(n, std::move(d));
    const TerminalSet terminals = random_terminals(n, 8, seed + 7);
    const VertexId start = terminals.ids[0];

    const TerminalSet ordered = gonzalez_order(m, terminals, start);
    CHECK(ordered.ids == testing::naive_gonzalez(m, terminals.ids, start));
  }
}

TEST_CASE("orders are permutations and deterministic") {
  const WeightedGraph g = random_connected_graph(40, 80, 1.0, 10.0, 17);
  const MetricSpace m = metric_from_graph(g);
  const TerminalSet terminals = random_terminals(40, 10, 18);

  const TerminalSet by_root = root_distance_order(g, terminals, 0);
  const TerminalSet by_far = gonzalez_order(m, terminals, terminals.ids[0]);
  for (const TerminalSet& ordered : {by_root, by_far}) {
    auto sorted_in = terminals.ids;
    auto sorted_out = ordered.ids;
    std::sort(sorted_in.begin(), sorted_in.end());
    std::sort(sorted_out.begin(), sorted_out.end());
    CHECK(sorted_in == sorted_out);
  }
  CHECK(root_distance_order(g, terminals, 0).ids == by_root.ids);
  CHECK(gonzalez_order(m, terminals, terminals.ids[0]).ids == by_far.ids);
}

TEST_CASE("gonzalez insertion radii never increase") {
  const MetricSpace m = grid_metric(7);
  const TerminalSet terminals = random_terminals(49, 12, 5);
  const TerminalSet ordered = gonzalez_order(m, terminals, terminals.ids[0]);
  double prev = kInfDist;
  for (std::size_t i = 1; i < ordered.ids.size(); ++i) {
    double r = kInfDist;
    for (std::size_t j = 0; j < i; ++j)
      r = std::min(r, m.dist(ordered.ids[i], ordered.ids[j]));
    CHECK(r <= prev + 1e-12);
    prev = r;
  }
}

TEST_CASE("order specs parse and format") {
  CHECK(parse_order_spec("given").kind == OrderingPolicy::Kind::Given);
  const OrderingPolicy root = parse_order_spec("root:5");
  CHECK(root.kind == OrderingPolicy::Kind::RootDistance);
  CHECK(root.anchor == 5);
  const OrderingPolicy gz = parse_order_spec("gonzalez");
  CHECK(gz.kind == OrderingPolicy::Kind::Gonzalez);
  CHECK_FALSE(gz.anchor.has_value());
  CHECK(parse_order_spec("gonzalez:3").anchor == 3);
  CHECK_THROWS_AS(parse_order_spec("nope"), std::invalid_argument);
  CHECK(format_order_spec(root) == "root:5");
}
