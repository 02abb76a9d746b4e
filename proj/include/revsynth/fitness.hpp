#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "revsynth/chromosome.hpp"
#include "revsynth/cost.hpp"
#include "revsynth/embedding.hpp"

namespace revsynth {

/// Minimized lexicographically: error bits first, then quantum cost,
/// then gate count. The default spaceship gives exactly that order.
struct Fitness {
  std::int64_t errors = 0;
  std::int64_t quantum_cost = 0;
  std::int64_t gate_count = 0;

  friend auto operator<=>(const Fitness&, const Fitness&) = default;
};

inline std::strong_ordering compare(const Fitness& a, const Fitness& b) { return a <=> b; }

/// Result of scoring one chromosome: the winning prefix and, when asked
/// for, the per-prefix fitness trace.
struct Evaluation {
  Fitness fitness;
  std::size_t prefix_len = 0;
  bool perfect = false;
  std::vector<Fitness> trace;  // one entry per evaluated prefix, only when requested

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// Scores every prefix of the chromosome against the target columns.
/// Stops at the first prefix with zero errors; otherwise returns the
/// lexicographic minimum over all prefixes. A zero-length chromosome
/// scores the bare input boundary with gate_count 0.
inline Evaluation evaluate(const Chromosome& chrom, const TargetColumns& targets,
                           const Embedding& emb, const CostModel& model,
                           bool with_trace = false) {
  if (chrom.width != emb.width)
    throw std::invalid_argument("chromosome width does not match the embedding width");

  BitColumns cols = initial_columns(emb, targets.rows);
  Evaluation result;

  if (chrom.genes.empty()) {
    const std::int64_t f1 = count_errors(cols, targets);
    result.fitness = {f1, 0, 0};
    result.perfect = f1 == 0;
    return result;
  }

  Fitness best;
  bool have_best = false;
  std::int64_t qc = 0;
  for (std::size_t k = 1; k <= chrom.length(); ++k) {
    const Gene& gene = chrom.genes[k - 1];
    apply_gate_columns(cols, gene);
    qc += gate_cost(gene, model);
    const Fitness current{count_errors(cols, targets), qc, static_cast<std::int64_t>(k)};
    if (with_trace) result.trace.push_back(current);
    if (current.errors == 0) {
      result.fitness = current;
      result.prefix_len = k;
      result.perfect = true;
      return result;
    }
    if (!have_best || current < best) {
      best = current;
      have_best = true;
    }
  }
  result.fitness = best;
  result.prefix_len = static_cast<std::size_t>(best.gate_count);
  result.perfect = false;
  return result;
}

}  // namespace revsynth
