#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "rvor/clustering.hpp"
#include "rvor/evaluation.hpp"
#include "rvor/generators.hpp"
#include "rvor/io.hpp"
#include "rvor/magnitudes.hpp"
#include "rvor/orderings.hpp"
#include "rvor/rng.hpp"
#include "rvor/tree.hpp"

namespace rvor::cli {

namespace {

using nlohmann::json;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t from = 0;
  while (true) {
    const std::size_t at = s.find(sep, from);
    parts.push_back(s.substr(from, at - from));
    if (at == std::string::npos) break;
    from = at + 1;
  }
  return parts;
}

long long to_int(const std::string& s, const char* what) {
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad integer for ") + what + ": " + s);
  }
}

double to_real(const std::string& s, const char* what) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad number for ") + what + ": " + s);
  }
}

struct Instance {
  std::optional<WeightedGraph> graph;
  std::optional<MetricSpace> metric;  // only for metric-only generators
  TerminalSet terminals;
};

TerminalSet resolve_terminals(const std::string& spec, VertexId n,
                              const WeightedGraph* graph, std::uint64_t seed) {
  if (spec == "leaves") {
    if (graph == nullptr)
      throw std::invalid_argument("'leaves' terminals need a graph input");
    return leaf_terminals(*graph);
  }
  if (spec == "all") {
    TerminalSet all;
    for (VertexId v = 0; v < n; ++v) all.ids.push_back(v);
    return all;
  }
  if (spec.rfind("random:", 0) == 0)
    return random_terminals(
        n, static_cast<int>(to_int(spec.substr(7), "terminal count")), seed);
  if (spec.rfind("explicit:", 0) == 0) {
    TerminalSet terminals;
    for (const std::string& part : split(spec.substr(9), ','))
      terminals.ids.push_back(static_cast<VertexId>(to_int(part, "terminal id")));
    check_terminals(terminals, n);
    return terminals;
  }
  throw std::invalid_argument("bad terminals spec: " + spec);
}

// Builds the instance named by --input or --gen. Graph generators:
//   btree:<height> | rtree:<n>[,wmin,wmax] | rgraph:<n>,<m>[,wmin,wmax] |
//   gridgraph:<side>
// Metric-only generator: grid:<side>[,p].
Instance build_instance(const RunConfig& config) {
  const bool has_file = !config.input_path.empty();
  const bool has_gen = !config.gen_spec.empty();
  if (has_file == has_gen)
    throw std::invalid_argument("exactly one of --input and --gen is required");

  if (has_file) {
    GraphInstance file = read_graph_file(config.input_path);
    Instance inst;
    inst.terminals = config.terminals_spec.empty()
                         ? file.terminals
                         : resolve_terminals(config.terminals_spec,
                                             file.graph.num_vertices(),
                                             &file.graph, config.seed);
    inst.graph = std::move(file.graph);
    return inst;
  }

  const std::size_t colon = config.gen_spec.find(':');
  const std::string family = config.gen_spec.substr(0, colon);
  const std::vector<std::string> args =
      colon == std::string::npos
          ? std::vector<std::string>{}
          : split(config.gen_spec.substr(colon + 1), ',');
  const std::uint64_t gen_seed = derive_seed(config.seed, seed_role::kInstance, 0);

  Instance inst;
  std::string default_terminals;
  if (family == "btree") {
    if (args.size() != 1) throw std::invalid_argument("btree spec: btree:<height>");
    inst.graph = complete_binary_tree(static_cast<int>(to_int(args[0], "height"))).graph();
    default_terminals = "leaves";
  } else if (family == "rtree") {
    if (args.empty()) throw std::invalid_argument("rtree spec: rtree:<n>[,wmin,wmax]");
    const double wmin = args.size() > 1 ? to_real(args[1], "wmin") : 1.0;
    const double wmax = args.size() > 2 ? to_real(args[2], "wmax") : 10.0;
    inst.graph = random_tree(static_cast<VertexId>(to_int(args[0], "n")), wmin,
                             wmax, gen_seed);
  } else if (family == "rgraph") {
    if (args.size() < 2)
      throw std::invalid_argument("rgraph spec: rgraph:<n>,<m>[,wmin,wmax]");
    const double wmin = args.size() > 2 ? to_real(args[2], "wmin") : 1.0;
    const double wmax = args.size() > 3 ? to_real(args[3], "wmax") : 10.0;
    inst.graph = random_connected_graph(
        static_cast<VertexId>(to_int(args[0], "n")),
        static_cast<std::size_t>(to_int(args[1], "m")), wmin, wmax, gen_seed);
  } else if (family == "gridgraph") {
    if (args.size() != 1) throw std::invalid_argument("gridgraph spec: gridgraph:<side>");
    inst.graph = grid_graph(static_cast<int>(to_int(args[0], "side")));
  } else if (family == "grid") {
    if (args.empty() || args.size() > 2)
      throw std::invalid_argument("grid spec: grid:<side>[,p]");
    inst.metric = grid_metric(static_cast<int>(to_int(args[0], "side")),
                              args.size() > 1 ? to_real(args[1], "p") : 1.0);
  } else {
    throw std::invalid_argument("unknown generator family: " + family);
  }

  std::string terminal_spec = config.terminals_spec;
  if (terminal_spec.empty()) terminal_spec = default_terminals;
  if (terminal_spec.empty())
    throw std::invalid_argument("this generator needs an explicit --terminals");
  const VertexId n =
      inst.graph ? inst.graph->num_vertices() : inst.metric->num_points();
  inst.terminals = resolve_terminals(
      terminal_spec, n, inst.graph ? &*inst.graph : nullptr, config.seed);
  return inst;
}

json terminals_json(const TerminalSet& terminals) {
  return json(terminals.ids);
}

json partition_json(const TerminalPartition& partition, const InducedMinor& minor) {
  json clusters = json::array();
  for (const auto& cluster : partition.clusters) clusters.push_back(cluster);
  json edges = json::array();
  for (const MinorEdge& e : minor.edges) edges.push_back({e.i, e.j, e.w});
  return json{{"clusters", std::move(clusters)},
              {"minor", {{"edges", std::move(edges)}}}};
}

json stretch_json(const StretchReport& report) {
  json pairs = json::array();
  for (const StretchPair& p : report.pairs)
    pairs.push_back({p.x, p.y, p.dist, p.mean_image_dist});
  return json{{"max_mean_stretch", report.max_mean_stretch},
              {"trials", report.trials},
              {"pairs", std::move(pairs)}};
}

void write_stretch_csv(const std::string& path, const StretchReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv file: " + path);
  out << "x,y,dist,mean_image_dist,mean_stretch\n";
  out.precision(17);
  for (const StretchPair& p : report.pairs)
    out << p.x << ',' << p.y << ',' << p.dist << ',' << p.mean_image_dist
        << ',' << p.mean_stretch() << '\n';
}

json config_json(const RunConfig& config) {
  json j{{"subcommand", config.subcommand},
         {"seed", config.seed},
         {"order", config.order_spec},
         {"magnitude", config.magnitude_spec},
         {"terminals", config.terminals_spec},
         {"trials", config.trials},
         {"pairs", config.pair_sample},
         {"root", config.root},
         {"validate", engine_validation_enabled() ? "always" : "off"}};
  if (!config.input_path.empty()) j["input"] = config.input_path;
  if (!config.gen_spec.empty()) j["gen"] = config.gen_spec;
  if (config.ddim) j["ddim"] = *config.ddim;
  return j;
}

template <typename Fn>
int guarded(nlohmann::json& report, Fn&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    report["error"] = e.what();
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    report["error"] = e.what();
    return kExitInputError;
  } catch (const std::logic_error& e) {
    report["error"] = e.what();
    return kExitInvariantViolation;
  }
}

}  // namespace

std::string payload_string(const json& report) {
  json payload = report;
  payload.erase("timing");
  return payload.dump(2);
}

int cmd_gen(const RunConfig& config, json& report) {
  return guarded(report, [&]() {
    RunConfig cfg = config;
    cfg.subcommand = "gen";
    if (cfg.out_path.empty())
      throw std::invalid_argument("gen requires --out <path>");
    const Instance inst = build_instance(cfg);
    if (!inst.graph)
      throw std::invalid_argument("gen can only write graph instances");
    write_graph_file(cfg.out_path, *inst.graph, inst.terminals);
    report["config"] = config_json(cfg);
    report["result"] = {{"path", cfg.out_path},
                        {"n", inst.graph->num_vertices()},
                        {"m", inst.graph->num_edges()},
                        {"k", inst.terminals.ids.size()}};
    report["timing"] = {{"wall_ms", 0.0}};
    return kExitOk;
  });
}

int cmd_spr_tree(const RunConfig& config, json& report) {
  return guarded(report, [&]() {
    RunConfig cfg = config;
    cfg.subcommand = "spr-tree";
    if (cfg.magnitude_spec.empty()) cfg.magnitude_spec = "const:3";
    cfg.order_spec = "root:" + std::to_string(cfg.root);
    const MagnitudePolicy policy = parse_magnitude_spec(cfg.magnitude_spec);
    if (policy.kind != MagnitudePolicy::Kind::Constant)
      throw std::invalid_argument(
          "spr-tree uses a constant magnitude (const:<R>)");
    const double magnitude = policy.constant_r;
    const double bound =
        (magnitude + 1.0) * (magnitude + 1.0) / (magnitude - 1.0);

    const Stopwatch clock;
    const Instance inst = build_instance(cfg);
    if (!inst.graph) throw std::invalid_argument("spr-tree needs a graph input");
    const RootedTree tree(*inst.graph, cfg.root);
    const SprTreeResult spr = spr_tree(tree, inst.terminals, magnitude);
    const DistortionReport distortion =
        minor_distortion(tree.graph(), spr.order, spr.minor);

    report["config"] = config_json(cfg);
    json result = partition_json(spr.partition, spr.minor);
    result["n"] = tree.num_vertices();
    result["k"] = spr.order.size();
    result["terminals"] = terminals_json(spr.order);
    result["edge_touches"] = spr.edge_touches;
    result["magnitude"] = magnitude;
    result["distortion_bound"] = bound;
    result["distortion"] = {{"max", distortion.max_distortion}};
    if (distortion.has_pair())
      result["distortion"]["pair"] = {distortion.pair_i, distortion.pair_j};
    report["result"] = std::move(result);
    report["timing"] = {{"wall_ms", clock.ms()}};

    if (distortion.max_distortion > bound + 1e-9) {
      report["error"] = "distortion bound violated";
      return kExitInvariantViolation;
    }
    return kExitOk;
  });
}

int cmd_m0e(const RunConfig& config, json& report) {
  return guarded(report, [&]() {
    RunConfig cfg = config;
    cfg.subcommand = "m0e";
    if (cfg.order_spec.empty()) cfg.order_spec = "gonzalez";

    const Stopwatch clock;
    const Instance inst = build_instance(cfg);
    const MetricSpace metric =
        inst.metric ? std::move(*inst.metric) : metric_from_graph(*inst.graph);

    MagnitudePolicy policy;
    if (cfg.magnitude_spec.empty()) {
      policy = MagnitudePolicy::doubling_exp(5.0, 1.0, cfg.seed);
      if (cfg.ddim) {
        policy.ddim = *cfg.ddim;
      } else if (cfg.estimate_ddim) {
        // the dimension that matters is the terminal submetric's
        const int k = inst.terminals.size();
        std::vector<double> sub(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            sub[static_cast<std::size_t>(i) * k + j] =
                metric.dist(inst.terminals.ids[static_cast<std::size_t>(i)],
                            inst.terminals.ids[static_cast<std::size_t>(j)]);
        policy.ddim = std::max(
            1.0, estimate_ddim(MetricSpace(k, std::move(sub),
                                           MetricSpace::TriangleCheck::Skip)));
      } else {
        throw std::invalid_argument(
            "m0e needs --ddim, --estimate-ddim, or an explicit --magnitude");
      }
      cfg.magnitude_spec = format_magnitude_spec(policy);
      cfg.ddim = policy.ddim;
    } else {
      policy = parse_magnitude_spec(cfg.magnitude_spec);
      if (cfg.ddim && policy.kind == MagnitudePolicy::Kind::DoublingExp) {
        policy.ddim = *cfg.ddim;
        cfg.magnitude_spec = format_magnitude_spec(policy);
      }
    }

    const TerminalSet ordered =
        apply_ordering(parse_order_spec(cfg.order_spec), metric, inst.terminals);
    const StretchReport stretch = expected_stretch_metric(
        metric, ordered, policy, cfg.pair_sample, cfg.trials, cfg.seed);
    if (!cfg.csv_out.empty()) write_stretch_csv(cfg.csv_out, stretch);

    report["config"] = config_json(cfg);
    json result = stretch_json(stretch);
    result["n"] = metric.num_points();
    result["k"] = ordered.size();
    result["terminals"] = terminals_json(ordered);
    report["result"] = std::move(result);
    report["timing"] = {{"wall_ms", clock.ms()}};
    return kExitOk;
  });
}

int cmd_connected_m0e(const RunConfig& config, json& report) {
  return guarded(report, [&]() {
    RunConfig cfg = config;
    cfg.subcommand = "connected-m0e";
    if (cfg.order_spec.empty()) cfg.order_spec = "given";
    if (cfg.magnitude_spec.empty()) cfg.magnitude_spec = "klog:5";

    const Stopwatch clock;
    const Instance inst = build_instance(cfg);
    if (!inst.graph)
      throw std::invalid_argument("connected-m0e needs a graph input");
    const MagnitudePolicy policy = parse_magnitude_spec(cfg.magnitude_spec);
    const TerminalSet ordered = apply_ordering(parse_order_spec(cfg.order_spec),
                                               *inst.graph, inst.terminals);
    const StretchReport stretch = expected_stretch_graphic(
        *inst.graph, ordered, policy, cfg.trials, cfg.seed);
    if (!cfg.csv_out.empty()) write_stretch_csv(cfg.csv_out, stretch);

    report["config"] = config_json(cfg);
    json result = stretch_json(stretch);
    result["n"] = inst.graph->num_vertices();
    result["k"] = ordered.size();
    result["terminals"] = terminals_json(ordered);
    report["result"] = std::move(result);
    report["timing"] = {{"wall_ms", clock.ms()}};
    return kExitOk;
  });
}

int cmd_bench(const RunConfig& config, json& report) {
  return guarded(report, [&]() {
    RunConfig cfg = config;
    cfg.subcommand = "bench";
    if (cfg.gen_spec.empty()) cfg.gen_spec = "rtree";
    if (cfg.gen_spec != "rtree" && cfg.gen_spec != "btree")
      throw std::invalid_argument("bench --family is rtree or btree");
    const bool by_height = cfg.gen_spec == "btree";

    json rows = json::array();
    std::vector<double> mean_ms;
    for (std::size_t s = 0; s < cfg.bench_sizes.size(); ++s) {
      const long long size = cfg.bench_sizes[s];
      std::optional<RootedTree> tree;
      if (by_height) {
        tree.emplace(complete_binary_tree(static_cast<int>(size)));
      } else {
        tree.emplace(random_tree(static_cast<VertexId>(size), 1.0, 10.0,
                                 derive_seed(cfg.seed, seed_role::kInstance, s)),
                     0);
      }
      const VertexId n = tree->num_vertices();
      TerminalSet terminals;
      if (by_height) {
        terminals = leaf_terminals(tree->graph());
      } else {
        const int k = cfg.bench_terminals > 0
                          ? cfg.bench_terminals
                          : std::max<int>(2, static_cast<int>(n / 100));
        terminals = random_terminals(
            n, std::min<int>(k, n), derive_seed(cfg.seed, seed_role::kTerminals, s));
      }

      double total_ms = 0.0;
      std::uint64_t touches = 0;
      for (int rep = 0; rep < cfg.bench_reps; ++rep) {
        const Stopwatch clock;
        const SprTreeResult r = spr_tree(*tree, terminals);
        total_ms += clock.ms();
        touches = r.edge_touches;
      }
      mean_ms.push_back(total_ms / cfg.bench_reps);
      rows.push_back({{"n", n},
                      {"k", terminals.ids.size()},
                      {"edge_touches", touches},
                      {"touches_per_n", static_cast<double>(touches) / n}});
    }

    json ratios = json::array();
    for (std::size_t s = 1; s < mean_ms.size(); ++s)
      ratios.push_back(mean_ms[s] / mean_ms[s - 1]);

    report["config"] = config_json(cfg);
    report["config"]["sizes"] = cfg.bench_sizes;
    report["config"]["reps"] = cfg.bench_reps;
    report["result"] = {{"rows", std::move(rows)}};
    report["timing"] = {{"mean_ms", mean_ms}, {"time_ratios", std::move(ratios)}};

    if (!cfg.quiet) {
      std::cerr << "size sweep:";
      for (std::size_t s = 0; s < mean_ms.size(); ++s)
        std::cerr << "  n=" << report["result"]["rows"][s]["n"] << " "
                  << mean_ms[s] << "ms";
      std::cerr << '\n';
    }
    return kExitOk;
  });
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Relaxed-Voronoi terminal clustering toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool wants_input) {
    if (wants_input) {
      sub->add_option("--input", cfg.input_path, "instance file (n m k header)");
      sub->add_option("--gen", cfg.gen_spec,
                      "generator spec, e.g. btree:6, rtree:1000, "
                      "rgraph:100,300, gridgraph:16, grid:32");
      sub->add_option("--terminals", cfg.terminals_spec,
                      "leaves | all | random:<k> | explicit:<ids>");
    }
    sub->add_option("--seed", cfg.seed, "master seed; all randomness derives from it");
    sub->add_option("--json", cfg.json_out, "write the JSON report here");
    sub->add_flag("--quiet", cfg.quiet, "do not print the report to stdout");
  };

  CLI::App* gen = app.add_subcommand("gen", "write a generated instance file");
  add_common(gen, true);
  gen->add_option("--family", cfg.gen_spec,
                  "generator spec (same forms as --gen)");
  gen->add_option("--out", cfg.out_path, "output path")->required();

  CLI::App* spr = app.add_subcommand("spr-tree", "tree Steiner point removal");
  add_common(spr, true);
  spr->add_option("--root", cfg.root, "root vertex for the terminal ordering");
  spr->add_option("--magnitude", cfg.magnitude_spec, "const:<R> (default const:3)");

  CLI::App* m0e = app.add_subcommand("m0e", "metric 0-extension stretch report");
  add_common(m0e, true);
  m0e->add_option("--order", cfg.order_spec,
                  "given | root:<id> | gonzalez[:<id>] (default gonzalez)");
  m0e->add_option("--magnitude", cfg.magnitude_spec,
                  "const:<R> | dexp:<c>,<ddim> | klog:<c>");
  m0e->add_option("--ddim", cfg.ddim, "doubling dimension for dexp magnitudes");
  m0e->add_flag("--estimate-ddim", cfg.estimate_ddim,
                "estimate ddim from the terminal submetric");
  m0e->add_option("--trials", cfg.trials, "randomized trials per pair");
  m0e->add_option("--pairs", cfg.pair_sample, "sampled pairs when n > 100");
  m0e->add_option("--csv", cfg.csv_out, "write the per-pair table here");

  CLI::App* cm0e =
      app.add_subcommand("connected-m0e", "graphic 0-extension stretch report");
  add_common(cm0e, true);
  cm0e->add_option("--order", cfg.order_spec,
                   "given | root:<id> | gonzalez[:<id>] (default given)");
  cm0e->add_option("--magnitude", cfg.magnitude_spec, "default klog:5");
  cm0e->add_option("--trials", cfg.trials, "randomized trials per edge");
  cm0e->add_option("--csv", cfg.csv_out, "write the per-edge table here");

  CLI::App* bench = app.add_subcommand("bench", "linear-time sweep for spr-tree");
  add_common(bench, false);
  bench->add_option("--family", cfg.gen_spec, "rtree (sizes are n) or btree (sizes are heights)");
  bench->add_option("--sizes", cfg.bench_sizes, "sweep sizes")->delimiter(',');
  bench->add_option("--reps", cfg.bench_reps, "repetitions per size");
  bench->add_option("--k", cfg.bench_terminals, "terminal count (default n/100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  json report;
  int rc = kExitInputError;
  if (gen->parsed()) rc = cmd_gen(cfg, report);
  else if (spr->parsed()) rc = cmd_spr_tree(cfg, report);
  else if (m0e->parsed()) rc = cmd_m0e(cfg, report);
  else if (cm0e->parsed()) rc = cmd_connected_m0e(cfg, report);
  else if (bench->parsed()) rc = cmd_bench(cfg, report);

  if (report.contains("error"))
    std::cerr << "error: " << report["error"].get<std::string>() << '\n';
  if (!cfg.quiet) std::cout << report.dump(2) << '\n';
  if (!cfg.json_out.empty()) {
    std::ofstream out(cfg.json_out);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.json_out << '\n';
      return kExitInputError;
    }
    out << report.dump(2) << '\n';
  }
  return rc;
}

}  // namespace rvor::cli
