#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rvor/core.hpp"

namespace rvor::cli {

/// One experiment description: exactly one input source (file or generator),
/// policies as flag-style specs, and the single seed all randomness derives
/// from. The config is embedded verbatim in every JSON report.
struct RunConfig {
  std::string subcommand;
  std::string input_path;           // --input
  std::string gen_spec;             // --gen / gen --family
  std::string terminals_spec = "leaves";
  std::string order_spec;           // default depends on the subcommand
  std::string magnitude_spec;       // default depends on the subcommand
  std::optional<double> ddim;
  bool estimate_ddim = false;
  std::uint64_t seed = 0;
  int trials = 100;
  int pair_sample = 2000;
  VertexId root = 0;
  std::vector<long long> bench_sizes = {250'000, 500'000, 1'000'000};
  int bench_reps = 5;
  int bench_terminals = 0;          // 0: one percent of n (at least 2)
  std::string out_path;             // gen --out
  std::string json_out;
  std::string csv_out;
  bool quiet = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInvariantViolation = 3;

// Each command fills `report` with {"config", "result", "timing"} and returns
// an exit status. Only "timing" is excluded from the reproducibility
// contract: identical config and seed reproduce "config" and "result"
// byte-for-byte.
int cmd_gen(const RunConfig& config, nlohmann::json& report);
int cmd_spr_tree(const RunConfig& config, nlohmann::json& report);
int cmd_m0e(const RunConfig& config, nlohmann::json& report);
int cmd_connected_m0e(const RunConfig& config, nlohmann::json& report);
int cmd_bench(const RunConfig& config, nlohmann::json& report);

/// The deterministic part of a report (everything but "timing"), serialized.
std::string payload_string(const nlohmann::json& report);

int run_cli(int argc, char** argv);

}  // namespace rvor::cli
