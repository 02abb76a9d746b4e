#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "revsynth/chromosome.hpp"
#include "revsynth/circuit.hpp"
#include "revsynth/embedding.hpp"
#include "revsynth/fitness.hpp"

namespace revsynth {

/// Limits for the exhaustive search. The oracle is a desk-scale ground
/// truth tool; widths past the default guard get very expensive and the
/// implementation caps at 6 lines outright.
struct SearchBudget {
  int qc_limit = 20;
  std::uint64_t node_limit = 200'000'000;
  int width_limit = 4;
};

struct OracleResult {
  int min_qc = 0;
  Circuit witness;
};

struct OracleOutcome {
  std::optional<OracleResult> result;
  int bound_reached = 0;           // last fully explored cost bound
  std::uint64_t nodes_expanded = 0;
  bool budget_exhausted = false;

  [[nodiscard]] bool found() const { return result.has_value(); }
};

namespace detail {

struct OracleState {
  std::array<std::uint64_t, 6> cols{};
  friend bool operator==(const OracleState&, const OracleState&) = default;
};

struct OracleStateHash {
  std::size_t operator()(const OracleState& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : s.cols) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct OracleMove {
  Gate gate;
  Gate inverse;  // undo gate: the NOT ladder, PeresNegFirst and OrPeres
                 // are involutions; Peres and PeresNegSecond swap
  std::int64_t cost = 0;
};

inline Gate inverse_gate(const Gate& g) {
  if (g.kind == GateKind::Peres) return {GateKind::PeresNegSecond, g.lines};
  if (g.kind == GateKind::PeresNegSecond) return {GateKind::Peres, g.lines};
  return g;
}

/// All distinct gate applications at the given width, in a fixed
/// lexicographic order. Toffoli controls are symmetric, so control sets
/// are enumerated ascending; Peres operands are role-sensitive, so every
/// ordered triple appears.
inline std::vector<OracleMove> oracle_moves(int width, const GateLibrary& lib,
                                            const CostModel& model) {
  std::vector<Gate> gates;
  for (GateKind kind : lib.kinds_at(width)) {
    switch (kind) {
      case GateKind::Not:
        for (int t = 1; t <= width; ++t) gates.push_back(make_not(t));
        break;
      case GateKind::Cnot:
        for (int c = 1; c <= width; ++c)
          for (int t = 1; t <= width; ++t)
            if (c != t) gates.push_back(make_cnot(c, t));
        break;
      case GateKind::Toffoli:
        for (int controls = 2; controls <= lib.toffoli_controls_at(width); ++controls) {
          std::vector<int> pick(controls);
          // ascending control combinations
          const auto recurse = [&](auto&& self, int from, int depth) -> void {
            if (depth == controls) {
              for (int t = 1; t <= width; ++t)
                if (std::find(pick.begin(), pick.end(), t) == pick.end())
                  gates.push_back(make_toffoli(pick, t));
              return;
            }
            for (int l = from; l <= width; ++l) {
              pick[depth] = l;
              self(self, l + 1, depth + 1);
            }
          };
          recurse(recurse, 1, 0);
        }
        break;
      default:
        for (int p = 1; p <= width; ++p)
          for (int q = 1; q <= width; ++q)
            for (int t = 1; t <= width; ++t)
              if (p != q && q != t && p != t) gates.push_back(Gate{kind, {p, q, t}});
        break;
    }
  }
  std::sort(gates.begin(), gates.end());
  std::vector<OracleMove> moves;
  moves.reserve(gates.size());
  for (Gate& g : gates) {
    const std::int64_t c = gate_cost(g, model);
    Gate inv = inverse_gate(g);
    moves.push_back({std::move(g), std::move(inv), c});
  }
  return moves;
}

inline OracleState capture(const BitColumns& cols) {
  OracleState s;
  for (int l = 1; l <= cols.width(); ++l) s.cols[l - 1] = cols.column(l)[0];
  return s;
}

}  // namespace detail

/// Minimum quantum cost over the library that meets the spec on all care
/// rows, found by iterative deepening on the cost bound with dominance
/// pruning on (state, cost spent). Exact within the library and cost
/// model. Sequential and deterministic; the witness is the first hit in
/// lexicographic gate order at the minimal cost.
inline OracleOutcome exhaustive_min_qc(const FunctionSpec& spec, const Embedding& emb,
                                       const GateLibrary& lib, const CostModel& model,
                                       const SearchBudget& budget = {}) {
  if (emb.width > budget.width_limit)
    throw std::invalid_argument("width " + std::to_string(emb.width) +
                                " exceeds the search budget's width limit of " +
                                std::to_string(budget.width_limit));
  if (emb.width > 6 || spec.n_in > 6)
    throw std::invalid_argument("the exhaustive search supports at most 6 lines");

  const TargetColumns targets = target_columns(spec, emb);
  const auto moves = detail::oracle_moves(emb.width, lib, model);
  if (moves.empty()) throw std::invalid_argument("gate library is empty at this width");

  std::int64_t min_move_cost = moves.front().cost;
  for (const auto& m : moves) min_move_cost = std::min(min_move_cost, m.cost);
  if (min_move_cost < 1)
    throw std::invalid_argument("the search requires every gate cost to be at least 1");

  OracleOutcome outcome;
  std::uint64_t nodes_left = budget.node_limit;

  const auto matches = [&](const BitColumns& cols) { return count_errors(cols, targets) == 0; };

  std::vector<Gate> stack;
  std::unordered_map<detail::OracleState, std::int64_t, detail::OracleStateHash> seen;

  // DFS over sequences with cumulative cost <= bound. Returns true when a
  // match is found (stack holds the witness) and false otherwise; sets
  // outcome.budget_exhausted when the node budget runs out.
  const auto dfs = [&](auto&& self, BitColumns& cols, std::int64_t remaining) -> bool {
    if (nodes_left == 0) {
      outcome.budget_exhausted = true;
      return false;
    }
    --nodes_left;
    ++outcome.nodes_expanded;

    const detail::OracleState key = detail::capture(cols);
    if (auto it = seen.find(key); it != seen.end() && it->second >= remaining) return false;
    seen[key] = remaining;

    if (remaining < min_move_cost) return false;
    for (const auto& move : moves) {
      if (move.cost > remaining) continue;
      apply_gate_columns(cols, move.gate);
      stack.push_back(move.gate);
      if (matches(cols)) return true;
      if (self(self, cols, remaining - move.cost)) return true;
      stack.pop_back();
      apply_gate_columns(cols, move.inverse);
      if (outcome.budget_exhausted) return false;
    }
    return false;
  };

  for (int bound = 0; bound <= budget.qc_limit; ++bound) {
    BitColumns cols = initial_columns(emb, targets.rows);
    if (bound == 0) {
      if (matches(cols)) {
        outcome.result = OracleResult{0, Circuit{emb.width, {}}};
        return outcome;
      }
      outcome.bound_reached = 0;
      continue;
    }
    seen.clear();
    stack.clear();
    if (dfs(dfs, cols, bound)) {
      std::int64_t qc = 0;
      for (const Gate& g : stack) qc += gate_cost(g, model);
      outcome.result = OracleResult{static_cast<int>(qc), Circuit{emb.width, stack}};
      return outcome;
    }
    if (outcome.budget_exhausted) return outcome;
    outcome.bound_reached = bound;
  }
  return outcome;
}

/// Deterministic re-check of a claimed solution: error count, cost,
/// size, and the mismatching care rows.
struct VerifyReport {
  std::int64_t f1 = 0;
  std::int64_t quantum_cost = 0;
  std::int64_t gate_count = 0;
  struct RowDiff {
    std::uint64_t row;
    std::uint64_t expected;
    std::uint64_t got;
  };
  std::vector<RowDiff> diffs;

  [[nodiscard]] bool passed() const { return f1 == 0; }
};

inline VerifyReport verify_circuit(const Circuit& circuit, const FunctionSpec& spec,
                                   const Embedding& emb, const CostModel& model = {}) {
  if (circuit.width != emb.width)
    throw std::invalid_argument("circuit width does not match the embedding width");
  const TargetColumns targets = target_columns(spec, emb);
  BitColumns cols = initial_columns(emb, targets.rows);
  for (const Gate& g : circuit.gates) apply_gate_columns(cols, g);

  VerifyReport report;
  report.f1 = count_errors(cols, targets);
  report.quantum_cost = circuit_cost(circuit, model);
  report.gate_count = static_cast<std::int64_t>(circuit.size());
  for (std::size_t r = 0; r < spec.rows_specified(); ++r) {
    std::uint64_t got = 0;
    for (int k = 0; k < spec.n_out; ++k)
      got |= static_cast<std::uint64_t>(cols.bit(emb.output_lines[k], r)) << k;
    if (got != spec.outputs[r]) report.diffs.push_back({r, spec.outputs[r], got});
  }
  return report;
}

}  // namespace revsynth
