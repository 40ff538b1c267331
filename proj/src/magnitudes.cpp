#include "rvor/magnitudes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rvor {

namespace {

double parse_positive(const std::string& s, const char* what) {
  const double v = std::stod(s);
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
  return v;
}

}  // namespace

MagnitudePolicy parse_magnitude_spec(const std::string& spec) {
  if (spec.rfind("const:", 0) == 0) {
    const double r = std::stod(spec.substr(6));
    if (!(r >= 1.0))
      throw std::invalid_argument("constant magnitude must be >= 1");
    return MagnitudePolicy::constant(r);
  }
  if (spec.rfind("dexp:", 0) == 0) {
    const std::string rest = spec.substr(5);
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("dexp spec needs c,ddim: " + spec);
    return MagnitudePolicy::doubling_exp(
        parse_positive(rest.substr(0, comma), "c"),
        parse_positive(rest.substr(comma + 1), "ddim"), 0);
  }
  if (spec.rfind("klog:", 0) == 0)
    return MagnitudePolicy::log_k_exp(parse_positive(spec.substr(5), "c"), 0);
  throw std::invalid_argument("bad magnitude spec: " + spec);
}

std::string format_magnitude_spec(const MagnitudePolicy& policy) {
  switch (policy.kind) {
    case MagnitudePolicy::Kind::Constant:
      return "const:" + std::to_string(policy.constant_r);
    case MagnitudePolicy::Kind::DoublingExp:
      return "dexp:" + std::to_string(policy.c) + "," +
             std::to_string(policy.ddim);
    case MagnitudePolicy::Kind::LogKExp:
      return "klog:" + std::to_string(policy.c);
  }
  return "";
}

double exp_inverse_cdf(double lambda_mean, double u) {
  if (!(lambda_mean > 0.0))
    throw std::invalid_argument("exponential mean must be > 0");
  if (!(u > 0.0) || u > 1.0)
    throw std::invalid_argument("uniform input must lie in (0,1]");
  return -lambda_mean * std::log(u);
}

double sample_exponential(double lambda_mean, SplitMix64& rng) {
  return exp_inverse_cdf(lambda_mean, rng.next_unit_pos());
}

MagnitudeVector make_magnitudes(const MagnitudePolicy& policy, int k) {
  if (k < 1) throw std::invalid_argument("need at least one terminal");
  MagnitudeVector out;
  out.values.reserve(static_cast<std::size_t>(k));
  switch (policy.kind) {
    case MagnitudePolicy::Kind::Constant: {
      if (!(policy.constant_r >= 1.0))
        throw std::invalid_argument("constant magnitude must be >= 1");
      out.values.assign(static_cast<std::size_t>(k), policy.constant_r);
      break;
    }
    case MagnitudePolicy::Kind::DoublingExp: {
      if (!(policy.c > 0.0) || !(policy.ddim > 0.0))
        throw std::invalid_argument("dexp parameters must be > 0");
      SplitMix64 rng(derive_seed(policy.seed, seed_role::kMagnitudes, 0));
      const double lambda = policy.c * policy.ddim;
      for (int j = 0; j < k; ++j)
        out.values.push_back(2.0 * std::exp(sample_exponential(lambda, rng)));
      break;
    }
    case MagnitudePolicy::Kind::LogKExp: {
      if (!(policy.c > 0.0))
        throw std::invalid_argument("klog parameter must be > 0");
      SplitMix64 rng(derive_seed(policy.seed, seed_role::kMagnitudes, 0));
      const double lambda =
          policy.c * std::max(std::log(static_cast<double>(k)), 1.0);
      for (int j = 0; j < k; ++j)
        out.values.push_back(std::exp(sample_exponential(lambda, rng)));
      break;
    }
  }
  return out;
}

MagnitudeVector unit_magnitudes(int k) {
  if (k < 1) throw std::invalid_argument("need at least one terminal");
  MagnitudeVector out;
  out.values.assign(static_cast<std::size_t>(k), 1.0);
  return out;
}

}  // namespace rvor
