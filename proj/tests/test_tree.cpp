#include <algorithm>

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rvor/evaluation.hpp"
#include "rvor/generators.hpp"
#include "rvor/tree.hpp"

using namespace rvor;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("rooted tree rejects non-trees") {
  CHECK_THROWS_AS(RootedTree(WeightedGraph(3, {{0, 1, 1.0}}), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      RootedTree(WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}), 0),
      std::invalid_argument);
  CHECK_THROWS_AS(RootedTree(random_tree(5, 1.0, 2.0, 0), 9),
                  std::invalid_argument);
  CHECK_NOTHROW(RootedTree(random_tree(5, 1.0, 2.0, 0), 4));
}

TEST_CASE("terminal distances when the root is the only terminal") {
  const RootedTree t(random_tree(30, 1.0, 10.0, 5), 0);
  const auto d = tree_terminal_distances(t, TerminalSet{{0}});
  const auto expected = tree_root_distances(t);
  for (VertexId v = 0; v < 30; ++v)
    CHECK(d[v] == doctest::Approx(expected[v]).epsilon(kTol));
}

TEST_CASE("two-sweep distances on a forced path") {
  const WeightedGraph path(
      4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  const RootedTree t(path, 0);
  const auto d = tree_terminal_distances(t, TerminalSet{{0, 3}});
  CHECK(d[0] == 0.0);
  CHECK(d[1] == doctest::Approx(1.0));
  CHECK(d[2] == doctest::Approx(1.0));
  CHECK(d[3] == 0.0);
}

TEST_CASE("two-sweep distances equal multi-source dijkstra on a big tree") {
  const WeightedGraph g = random_tree(10'000, 1.0, 10.0, 11);
  const RootedTree t(g, 0);
  const TerminalSet terminals = random_terminals(10'000, 64, 12);
  std::uint64_t touches = 0;
  const auto fast = tree_terminal_distances(t, terminals, &touches);
  const auto reference = terminal_distances(g, terminals);
  for (VertexId v = 0; v < 10'000; ++v)
    CHECK(fast[v] == doctest::Approx(reference[v]).epsilon(kTol));
  CHECK(touches == 2 * (10'000 - 1));
}

TEST_CASE("queue-based root distances match heap dijkstra") {
  const WeightedGraph g = random_tree(5'000, 1.0, 10.0, 21);
  for (VertexId root : {VertexId{0}, VertexId{4'321}}) {
    const RootedTree t(g, root);
    const auto fast = tree_root_distances(t);
    const auto reference = shortest_paths_from(g, root);
    for (VertexId v = 0; v < 5'000; ++v)
      CHECK(fast[v] == doctest::Approx(reference[v]).epsilon(kTol));
    CHECK(fast[root] == 0.0);
  }
}

TEST_CASE("root distances on a star") {
  const WeightedGraph star(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
  const auto d = tree_root_distances(RootedTree(star, 0));
  CHECK(d[0] == 0.0);
  for (VertexId v = 1; v < 4; ++v) CHECK(d[v] == doctest::Approx(1.0));
}

TEST_CASE("spr on a single terminal is trivial") {
  const RootedTree t(random_tree(20, 1.0, 10.0, 31), 0);
  const SprTreeResult r = spr_tree(t, TerminalSet{{7}});
  CHECK(r.minor.k == 1);
  CHECK(r.minor.edges.empty());
  CHECK(r.partition.clusters[0].size() == 20);
  const DistortionReport report =
      minor_distortion(t.graph(), r.order, r.minor);
  CHECK(report.max_distortion == 1.0);
  CHECK_FALSE(report.has_pair());
}

TEST_CASE("complete binary tree of height 6 reproduces the known minor") {
  const RootedTree t = complete_binary_tree(6);
  const TerminalSet leaves = leaf_terminals(t.graph());
  const SprTreeResult r = spr_tree(t, leaves);

  // all leaves are equidistant from the root, so pi is the id order
  CHECK(r.order.ids == leaves.ids);
  CHECK(r.minor.edges.size() == 63);

  const DistortionReport report =
      minor_distortion(t.graph(), r.order, r.minor, /*want_table=*/true);
  CHECK(report.max_distortion <= 8.0 + kTol);

  // the known witness: terminals #64 and #60 (indices 63 and 59), tree
  // distance 6, minor distance 32
  const WeightedGraph mg = minor_graph(r.minor);
  const auto dm = shortest_paths_from(mg, 63);
  CHECK(dm[59] == doctest::Approx(32.0));
  const auto dg = shortest_paths_from(t.graph(), r.order.ids[63]);
  CHECK(dg[r.order.ids[59]] == doctest::Approx(6.0));
  CHECK(report.per_pair[63 * 64 + 59] == doctest::Approx(32.0 / 6.0));
}

TEST_CASE("distortion stays below 8 on random trees") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const VertexId n = 2 + static_cast<VertexId>(seed % 120);
    const WeightedGraph g = random_tree(n, 1.0, 10.0, seed);
    const int k = 1 + static_cast<int>(seed % std::min<VertexId>(n, 20));
    const TerminalSet terminals = random_terminals(n, k, seed * 3 + 1);
    const RootedTree t(g, static_cast<VertexId>(seed % n));
    const SprTreeResult r = spr_tree(t, terminals);
    const DistortionReport report = minor_distortion(g, r.order, r.minor);
    CHECK(report.max_distortion <= 8.0 + kTol);
  }
}

TEST_CASE("tree pipeline matches the general engine exactly") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const VertexId n = 2 + static_cast<VertexId>((seed * 37) % 300);
    const WeightedGraph g = random_tree(n, 1.0, 10.0, seed);
    const int k = 1 + static_cast<int>(seed % std::min<VertexId>(n, 12));
    const TerminalSet terminals = random_terminals(n, k, seed);
    const RootedTree t(g, 0);
    const SprTreeResult fast = spr_tree(t, terminals);

    MagnitudeVector threes;
    threes.values.assign(static_cast<std::size_t>(k), 3.0);
    const TerminalPartition general =
        graphic_relaxed_voronoi(g, fast.order, threes);
    CHECK(fast.partition.clusters == general.clusters);

    const InducedMinor general_minor = induce_minor(g, fast.order, general);
    REQUIRE(fast.minor.edges.size() == general_minor.edges.size());
    for (std::size_t e = 0; e < general_minor.edges.size(); ++e) {
      CHECK(fast.minor.edges[e].i == general_minor.edges[e].i);
      CHECK(fast.minor.edges[e].j == general_minor.edges[e].j);
      CHECK(fast.minor.edges[e].w ==
            doctest::Approx(general_minor.edges[e].w).epsilon(kTol));
    }
  }
}

TEST_CASE("the minor of a tree instance is a tree") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const VertexId n = 2 + static_cast<VertexId>(seed % 150);
    const int k = 1 + static_cast<int>(seed % std::min<VertexId>(n, 25));
    const RootedTree t(random_tree(n, 1.0, 10.0, seed), 0);
    const SprTreeResult r = spr_tree(t, random_terminals(n, k, seed));
    CHECK(r.minor.edges.size() == static_cast<std::size_t>(k) - 1);
    CHECK(minor_graph(r.minor).connected());
  }
}

TEST_CASE("edge touches stay within the linear budget") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const VertexId n = 100 + static_cast<VertexId>(seed) * 300;
    const RootedTree t(random_tree(n, 1.0, 10.0, seed), 0);
    const TerminalSet terminals =
        random_terminals(n, 1 + static_cast<int>(seed * 3 % 40), seed);
    const SprTreeResult r = spr_tree(t, terminals);
    CHECK(r.edge_touches <= 4 * static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("parametric distortion envelope for other magnitudes") {
  for (const double R : {2.0, 3.0, 5.0}) {
    const double bound = (R + 1.0) * (R + 1.0) / (R - 1.0);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const VertexId n = 2 + static_cast<VertexId>(seed % 100);
      const int k = 1 + static_cast<int>(seed % std::min<VertexId>(n, 15));
      const RootedTree t(random_tree(n, 1.0, 10.0, seed), 0);
      const SprTreeResult r = spr_tree(t, random_terminals(n, k, seed), R);
      const DistortionReport report =
          minor_distortion(t.graph(), r.order, r.minor);
      CHECK(report.max_distortion <= bound + kTol);
    }
  }
}

TEST_CASE("the root lands in the first terminal's cluster") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const VertexId n = 2 + static_cast<VertexId>(seed % 90);
    const VertexId root = static_cast<VertexId>((seed * 13) % n);
    const RootedTree t(random_tree(n, 1.0, 10.0, seed), root);
    const int k = 1 + static_cast<int>(seed % std::min<VertexId>(n, 10));
    const SprTreeResult r = spr_tree(t, random_terminals(n, k, seed + 5));
    CHECK(r.partition.owner[static_cast<std::size_t>(root)] == 0);
  }
}

TEST_CASE("spr_tree validates magnitude") {
  const RootedTree t(random_tree(10, 1.0, 2.0, 1), 0);
  CHECK_THROWS_AS(spr_tree(t, TerminalSet{{1, 2}}, 0.5), std::invalid_argument);
}
