#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revsynth/bit_columns.hpp"
#include "revsynth/function_spec.hpp"

namespace revsynth {

/// How a (possibly irreversible) target function sits on the circuit
/// lines: which lines carry the inputs, which start as constants, and
/// which lines the wanted outputs are read from. Lines not listed as
/// outputs are garbage.
struct Embedding {
  int width = 0;
  std::vector<int> input_lines;                  // input bit j on input_lines[j]
  std::vector<int> output_lines;                 // output bit k on output_lines[k]
  std::vector<std::pair<int, int>> constants;    // (line, 0/1) for every non-input line

  [[nodiscard]] int n_in() const { return static_cast<int>(input_lines.size()); }
  [[nodiscard]] int n_out() const { return static_cast<int>(output_lines.size()); }

  [[nodiscard]] std::vector<int> garbage_lines() const {
    std::vector<int> garbage;
    for (int l = 1; l <= width; ++l)
      if (std::find(output_lines.begin(), output_lines.end(), l) == output_lines.end())
        garbage.push_back(l);
    return garbage;
  }
};

inline std::vector<std::string> validate_embedding(const Embedding& e) {
  std::vector<std::string> violations;
  if (e.width < 1) violations.push_back("width must be at least 1");
  std::vector<char> used(e.width + 1, 0);
  const auto mark = [&](int l) {
    const bool repeat = used[l];
    used[l] = 1;
    return repeat;
  };
  for (int l : e.input_lines) {
    if (l < 1 || l > e.width) violations.push_back("input line out of range");
    else if (mark(l)) violations.push_back("line assigned twice on input side");
  }
  for (auto [l, v] : e.constants) {
    if (l < 1 || l > e.width) violations.push_back("constant line out of range");
    else if (mark(l)) violations.push_back("line assigned twice on input side");
    if (v != 0 && v != 1) violations.push_back("constant value must be 0 or 1");
  }
  for (int l = 1; l <= e.width; ++l)
    if (!used[l]) violations.push_back("line " + std::to_string(l) + " is neither input nor constant");
  std::vector<char> out_seen(e.width + 1, 0);
  for (int l : e.output_lines) {
    if (l < 1 || l > e.width) violations.push_back("output line out of range");
    else if (out_seen[l]) violations.push_back("output line listed twice");
    if (l >= 1 && l <= e.width) out_seen[l] = 1;
  }
  return violations;
}

/// Default layout: inputs on lines 1..n_in, zero constants on the lines
/// above, outputs read from lines 1..n_out. Width defaults to
/// max(n_in, n_out + min_garbage(spec)); an explicit width must be at
/// least max(n_in, n_out).
inline Embedding plan_embedding(const FunctionSpec& spec, std::optional<int> width_override = {}) {
  const int floor_width = std::max(spec.n_in, spec.n_out);
  int width = std::max(spec.n_in, spec.n_out + min_garbage(spec));
  if (width_override) {
    if (*width_override < floor_width)
      throw std::invalid_argument("width " + std::to_string(*width_override) +
                                  " is below the minimum of " + std::to_string(floor_width));
    width = *width_override;
  }
  Embedding e;
  e.width = width;
  for (int l = 1; l <= spec.n_in; ++l) e.input_lines.push_back(l);
  for (int l = spec.n_in + 1; l <= width; ++l) e.constants.emplace_back(l, 0);
  for (int l = 1; l <= spec.n_out; ++l) e.output_lines.push_back(l);
  return e;
}

/// The wanted bit column per output line plus the care mask (1 bit per
/// specified row).
struct TargetColumns {
  std::size_t rows = 0;
  std::size_t words = 0;
  std::vector<int> output_lines;
  std::vector<std::vector<std::uint64_t>> bits;  // bits[k] = column for output_lines[k]
  std::vector<std::uint64_t> care;

  [[nodiscard]] std::int64_t care_rows() const { return popcount_words(care.data(), care.size()); }
};

inline TargetColumns target_columns(const FunctionSpec& spec, const Embedding& emb) {
  if (emb.n_in() != spec.n_in || emb.n_out() != spec.n_out)
    throw std::invalid_argument("embedding does not match the spec's input/output counts");
  TargetColumns t;
  t.rows = spec.total_rows();
  t.words = (t.rows + 63) / 64;
  t.output_lines = emb.output_lines;
  t.bits.assign(spec.n_out, std::vector<std::uint64_t>(t.words, 0));
  t.care.assign(t.words, 0);
  for (std::size_t r = 0; r < spec.rows_specified(); ++r) {
    t.care[r / 64] |= std::uint64_t{1} << (r % 64);
    for (int k = 0; k < spec.n_out; ++k)
      if ((spec.outputs[r] >> k) & 1) t.bits[k][r / 64] |= std::uint64_t{1} << (r % 64);
  }
  return t;
}

/// Columns at the circuit's input boundary: input lines carry the bits
/// of the row index, constant lines their fixed value.
inline BitColumns initial_columns(const Embedding& emb, std::size_t rows) {
  BitColumns cols(emb.width, rows);
  for (int j = 0; j < emb.n_in(); ++j) cols.load_index_bit(emb.input_lines[j], j);
  for (auto [line, value] : emb.constants) cols.set_constant(line, value);
  return cols;
}

/// Number of (care row, output line) pairs where the state disagrees
/// with the target. This is the f1 error count.
inline std::int64_t count_errors(const BitColumns& state, const TargetColumns& targets) {
  if (state.rows() != targets.rows)
    throw std::invalid_argument("state and target row counts differ");
  std::int64_t errors = 0;
  for (std::size_t k = 0; k < targets.bits.size(); ++k) {
    const std::uint64_t* got = state.column(targets.output_lines[k]);
    const std::uint64_t* want = targets.bits[k].data();
    for (std::size_t w = 0; w < targets.words; ++w)
      errors += std::popcount((got[w] ^ want[w]) & targets.care[w]);
  }
  return errors;
}

}  // namespace revsynth
