#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace revsynth {

/// Deterministic random source. Every stochastic routine in the library
/// draws through these helpers instead of <random> distributions, whose
/// output is implementation-defined; a seed therefore fixes the whole
/// draw sequence on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], both inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    if (span == 0) return lo;  // full 64-bit range, cannot happen for int args
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % span;
    std::uint64_t u = next_u64();
    while (u >= limit) u = next_u64();
    return static_cast<int>(lo + static_cast<std::int64_t>(u % span));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Index draw proportional to non-negative weights (at least one positive).
  std::size_t weighted_index(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = uniform01() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      x -= weights[i];
      if (x < 0.0) return i;
    }
    return weights.size() - 1;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace revsynth
