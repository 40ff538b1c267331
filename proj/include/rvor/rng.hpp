#pragma once

#include <cstdint>

namespace rvor {

// splitmix64 (Steele, Lea, Flood). Chosen because the stream is bitwise
// reproducible across platforms and standard libraries, which std::*
// distributions do not guarantee.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0,1]; safe to pass through log().
  double next_unit_pos() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), rejection sampled. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}
}  // namespace detail

// All randomness in a run flows from one user seed; independent streams are
// derived by hashing (seed, role, index). The mapping is part of the
// reproducibility contract and must not change between releases.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t role,
                                 std::uint64_t index) {
  std::uint64_t h = detail::mix64(base + 0x9e3779b97f4a7c15ULL);
  h = detail::mix64(h ^ (role * 0xbf58476d1ce4e5b9ULL));
  h = detail::mix64(h ^ (index * 0x94d049bb133111ebULL));
  return h;
}

namespace seed_role {
inline constexpr std::uint64_t kMagnitudes = 1;
inline constexpr std::uint64_t kTrial = 2;
inline constexpr std::uint64_t kInstance = 3;
inline constexpr std::uint64_t kTerminals = 4;
inline constexpr std::uint64_t kPairs = 5;
inline constexpr std::uint64_t kRoot = 6;
}  // namespace seed_role

}  // namespace rvor
