#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mcp {

// SplitMix64 finalizer. Used both as a seed mixer and as the counter-based
// generator behind measurement matrices.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-trial seed derivation: seed(master, trial, cell) =
//   mix64(mix64(mix64(master) ^ trial) ^ cell)
// Records carry the derived seed so every trial can be replayed alone.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial,
                                    std::uint64_t cell = 0) noexcept {
  return mix64(mix64(mix64(master) ^ trial) ^ cell);
}

// Maps 64 random bits to a double in [0, 1) with 53 bits of resolution.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Counter-based standard normal: the value at `counter` under `key` does not
// depend on any other draw. Box-Muller on two derived uniforms.
inline double counter_normal(std::uint64_t key, std::uint64_t counter) noexcept {
  const std::uint64_t base = mix64(key ^ mix64(counter));
  const double u1 = 1.0 - to_unit(mix64(base));  // (0, 1]
  const double u2 = to_unit(mix64(base + 1));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Sequential generator for signal draws and Monte-Carlo trials.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  double uniform() { return to_unit(engine_()); }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mcp
