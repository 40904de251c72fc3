#pragma once

#include <cmath>
#include <cstdint>

#include "arseg/stats.hpp"

namespace arseg {

// Deterministic 64-bit generator (splitmix64).  Chosen over std::mt19937
// because its output is fully specified here, independent of the standard
// library, so simulated series are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform on the open interval (0, 1); the offset keeps 0 and 1 unreachable
  // so quantile transforms below stay finite.
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the inverse CDF, so each deviate consumes exactly one
  // uniform and the stream position is independent of rejection luck.
  double normal() { return normal_quantile(uniform()); }

  // Standard Cauchy via the inverse CDF.
  double cauchy() {
    constexpr double pi = 3.14159265358979323846;
    return std::tan(pi * (uniform() - 0.5));
  }

 private:
  std::uint64_t state_;
};

// Folds stream identifiers into a base seed.  Replications, grid cells and
// test repetitions each get an independent stream, so results do not depend
// on execution order or thread count.
inline std::uint64_t derive_seed(std::uint64_t base) {
  return Rng::mix(base + 0x9E3779B97F4A7C15ull);
}

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t head,
                          Rest... rest) {
  return derive_seed(Rng::mix(base ^ (0xD1B54A32D192ED03ull * (head + 1))),
                     rest...);
}

}  // namespace arseg
