#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rvor/core.hpp"
#include "rvor/rng.hpp"

namespace rvor {

/// Per-terminal magnitude recipe. EXP(lambda) throughout is the exponential
/// distribution with MEAN lambda (density e^{-x/lambda}/lambda), so
///   Constant:    every entry is r (r >= 1 required),
///   DoublingExp: entries are 2*e^{Z_j}, Z_j iid EXP(c * ddim),
///   LogKExp:     entries are   e^{Z_j}, Z_j iid EXP(c * max(ln k, 1)).
/// The max() keeps k = 1 well defined (one cluster, nothing to distort).
struct MagnitudePolicy {
  enum class Kind { Constant, DoublingExp, LogKExp };
  Kind kind = Kind::Constant;
  double constant_r = 3.0;
  double c = 5.0;
  double ddim = 2.0;
  std::uint64_t seed = 0;

  static MagnitudePolicy constant(double r) {
    MagnitudePolicy p;
    p.kind = Kind::Constant;
    p.constant_r = r;
    return p;
  }
  static MagnitudePolicy doubling_exp(double c, double ddim,
                                      std::uint64_t seed) {
    MagnitudePolicy p;
    p.kind = Kind::DoublingExp;
    p.c = c;
    p.ddim = ddim;
    p.seed = seed;
    return p;
  }
  static MagnitudePolicy log_k_exp(double c, std::uint64_t seed) {
    MagnitudePolicy p;
    p.kind = Kind::LogKExp;
    p.c = c;
    p.seed = seed;
    return p;
  }
};

// Parses "const:<R>" | "dexp:<c>,<ddim>" | "klog:<c>". The seed is carried
// separately.
MagnitudePolicy parse_magnitude_spec(const std::string& spec);
std::string format_magnitude_spec(const MagnitudePolicy& policy);

struct MagnitudeVector {
  std::vector<double> values;  // every entry >= 1

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int j) const {
    return values[static_cast<std::size_t>(j)];
  }
};

/// Inverse CDF of EXP(mean lambda) at uniform u in (0,1]: -lambda * ln(u).
/// u = 1 maps to exactly 0.
double exp_inverse_cdf(double lambda_mean, double u);

/// One EXP(mean lambda) draw from the given stream.
double sample_exponential(double lambda_mean, SplitMix64& rng);

/// Magnitudes for k terminals. Same (policy, k) including seed reproduces the
/// vector bitwise.
MagnitudeVector make_magnitudes(const MagnitudePolicy& policy, int k);

/// All-ones vector; recovers the plain Voronoi partition on either engine.
MagnitudeVector unit_magnitudes(int k);

}  // namespace rvor
