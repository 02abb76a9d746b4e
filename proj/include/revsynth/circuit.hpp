#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "revsynth/cost.hpp"
#include "revsynth/gate.hpp"

namespace revsynth {

/// A cascade of reversible gates over `width` lines. Any sequence of
/// valid gates induces a bijection on the 2^width states, so no repair
/// or post-processing step exists anywhere in the library.
struct Circuit {
  int width = 0;
  std::vector<Gate> gates;

  [[nodiscard]] std::size_t size() const { return gates.size(); }
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Empty vector when valid; otherwise one message per offending gate.
inline std::vector<std::string> validate_circuit(const Circuit& c) {
  std::vector<std::string> violations;
  if (c.width < 1) violations.push_back("width must be at least 1");
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    if (auto v = validate_gate(c.gates[i], c.width))
      violations.push_back("gate " + std::to_string(i + 1) + ": " + *v);
  return violations;
}

inline std::uint64_t simulate(const Circuit& c, std::uint64_t input) {
  for (const Gate& g : c.gates) input = apply_gate(input, g);
  return input;
}

inline constexpr int kTruthTableWidthGuard = 24;

/// Output value for every input row, row r holding the bits of r on
/// lines 1..width (line k has weight 2^(k-1)). The result is always a
/// permutation of [0, 2^width).
inline std::vector<std::uint32_t> truth_table(const Circuit& c, int width_guard = kTruthTableWidthGuard) {
  if (c.width > width_guard)
    throw std::invalid_argument("truth table for width " + std::to_string(c.width) +
                                " exceeds the guard of " + std::to_string(width_guard));
  const std::uint64_t rows = std::uint64_t{1} << c.width;
  std::vector<std::uint32_t> table(rows);
  for (std::uint64_t r = 0; r < rows; ++r)
    table[r] = static_cast<std::uint32_t>(simulate(c, r));
  return table;
}

inline std::int64_t circuit_cost(const Circuit& c, const CostModel& m) {
  return std::accumulate(c.gates.begin(), c.gates.end(), std::int64_t{0},
                         [&](std::int64_t acc, const Gate& g) { return acc + gate_cost(g, m); });
}

}  // namespace revsynth
