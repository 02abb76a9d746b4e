#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "revsynth/chromosome.hpp"
#include "revsynth/fitness.hpp"
#include "revsynth/rng.hpp"

namespace revsynth {

struct EvolConfig {
  int population_size = 100;
  int max_generations = 500;
  int chromosome_length = 10;
  double crossover_prob = 0.7;
  double mutation_prob = 0.01;  // per gene
  int tournament_size = 2;
  GateLibrary library = GateLibrary::nct_peres();
  CostModel cost_model;
  // operator / address / rotate / swap
  std::array<double, 4> mutation_weights{1.0, 1.0, 1.0, 1.0};
  int elitism = 1;
  bool early_stop = false;
  std::uint64_t seed = 1;
};

inline void validate_config(const EvolConfig& cfg) {
  if (cfg.population_size < 2) throw std::invalid_argument("population size must be >= 2");
  if (cfg.chromosome_length < 1) throw std::invalid_argument("chromosome length must be >= 1");
  if (cfg.max_generations < 0) throw std::invalid_argument("generation count must be >= 0");
  if (cfg.crossover_prob < 0 || cfg.crossover_prob > 1)
    throw std::invalid_argument("crossover probability must be in [0, 1]");
  if (cfg.mutation_prob < 0 || cfg.mutation_prob > 1)
    throw std::invalid_argument("mutation probability must be in [0, 1]");
  if (cfg.tournament_size < 1) throw std::invalid_argument("tournament size must be >= 1");
  if (cfg.elitism < 0 || cfg.elitism > cfg.population_size)
    throw std::invalid_argument("elitism must be in [0, population size]");
  double total = 0;
  for (double w : cfg.mutation_weights) {
    if (w < 0) throw std::invalid_argument("mutation weights must be non-negative");
    total += w;
  }
  if (total <= 0) throw std::invalid_argument("at least one mutation weight must be positive");
}

struct Individual {
  Chromosome chrom;
  Evaluation eval;
};

/// Draws `size` members uniformly with replacement and returns the index
/// of the fittest; exact fitness ties are broken uniformly at random.
inline std::size_t tournament_select(const std::vector<Individual>& pop, Rng& rng, int size) {
  if (pop.empty()) throw std::invalid_argument("cannot select from an empty population");
  std::vector<std::size_t> tied;
  for (int i = 0; i < size; ++i) {
    const auto idx = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pop.size()) - 1));
    if (tied.empty() || pop[idx].eval.fitness < pop[tied.front()].eval.fitness) {
      tied.assign(1, idx);
    } else if (pop[idx].eval.fitness == pop[tied.front()].eval.fitness) {
      tied.push_back(idx);
    }
  }
  if (tied.size() == 1) return tied.front();
  return tied[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(tied.size()) - 1))];
}

/// Deterministic crossover core: `boundaries` holds sorted distinct cut
/// positions, position i meaning a cut after gene i (1-based). Children
/// take alternating segments, child_a starting from parent_a. Any cut of
/// valid parents is valid, so there is nothing to repair afterwards.
inline std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                                      const std::vector<int>& boundaries) {
  if (a.length() != b.length()) throw std::invalid_argument("parents differ in length");
  const int len = static_cast<int>(a.length());
  Chromosome child_a{a.width, {}}, child_b{a.width, {}};
  child_a.genes.reserve(len);
  child_b.genes.reserve(len);
  std::size_t cut = 0;
  bool from_a = true;
  for (int i = 0; i < len; ++i) {
    if (cut < boundaries.size() && boundaries[cut] == i) {
      from_a = !from_a;
      ++cut;
    }
    child_a.genes.push_back(from_a ? a.genes[i] : b.genes[i]);
    child_b.genes.push_back(from_a ? b.genes[i] : a.genes[i]);
  }
  return {std::move(child_a), std::move(child_b)};
}

/// Multi-cut crossover: the cut count is uniform in [1, length-1] and
/// that many distinct boundary positions are drawn.
inline std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                                   Rng& rng) {
  if (a.length() != b.length()) throw std::invalid_argument("parents differ in length");
  const int len = static_cast<int>(a.length());
  if (len < 2) throw std::invalid_argument("crossover needs chromosomes of length >= 2");

  const int cut_count = rng.uniform_int(1, len - 1);
  std::vector<int> boundaries(len - 1);
  std::iota(boundaries.begin(), boundaries.end(), 1);
  for (int i = 0; i < cut_count; ++i) {
    const int j = rng.uniform_int(i, len - 2);
    std::swap(boundaries[i], boundaries[j]);
  }
  boundaries.resize(cut_count);
  std::sort(boundaries.begin(), boundaries.end());
  return crossover_at(a, b, boundaries);
}

/// Mutation type 1: replace the gate kind. The target line is kept;
/// controls are truncated or topped up with fresh distinct lines as the
/// arity demands. No-op when the library offers no alternative kind.
inline Gene mutate_operator(const Gene& gene, Rng& rng, const GateLibrary& library, int width) {
  auto choices = library.choices_at(width);
  std::erase(choices, std::make_pair(gene.kind, gene.arity()));
  if (choices.empty()) return gene;
  const auto [kind, arity] = choices[rng.uniform_int(0, static_cast<int>(choices.size()) - 1)];

  Gene out{kind, {}};
  const int keep = std::min(arity - 1, gene.control_count());
  out.lines.assign(gene.lines.begin(), gene.lines.begin() + keep);
  out.lines.push_back(gene.target());
  if (arity - 1 > keep) {
    std::vector<int> taken = out.lines;
    detail::draw_free_lines(rng, width, taken, arity - 1 - keep);
    out.lines.insert(out.lines.end() - 1, taken.begin() + out.arity(), taken.end());
  }
  return out;
}

/// Mutation type 2: re-point one operand at a line the gate does not use
/// yet. No-op when every line is already taken.
inline Gene mutate_address(const Gene& gene, Rng& rng, int width) {
  if (gene.arity() >= width) return gene;
  const int position = rng.uniform_int(0, gene.arity() - 1);
  std::vector<int> free;
  for (int l = 1; l <= width; ++l)
    if (std::find(gene.lines.begin(), gene.lines.end(), l) == gene.lines.end()) free.push_back(l);
  Gene out = gene;
  out.lines[position] = free[rng.uniform_int(0, static_cast<int>(free.size()) - 1)];
  return out;
}

/// Mutation type 3: rotate the operand list right by one (last becomes
/// first). No-op for single-operand gates.
inline Gene mutate_rotate(const Gene& gene, Rng&) {
  if (gene.arity() < 2) return gene;
  Gene out = gene;
  std::rotate(out.lines.rbegin(), out.lines.rbegin() + 1, out.lines.rend());
  return out;
}

/// Mutation type 4 as a standalone operation: exchange two distinct
/// random positions. No-op for length < 2.
inline Chromosome mutate_swap(const Chromosome& chrom, Rng& rng) {
  if (chrom.length() < 2) return chrom;
  const int len = static_cast<int>(chrom.length());
  const int i = rng.uniform_int(0, len - 1);
  int j = rng.uniform_int(0, len - 2);
  if (j >= i) ++j;
  Chromosome out = chrom;
  std::swap(out.genes[i], out.genes[j]);
  return out;
}

/// Visits every gene; with probability mutation_prob draws one of the
/// four mutation types by weight and applies it there (type 4 exchanges
/// the gene with another uniform position). The result is always a valid
/// chromosome.
inline Chromosome mutate(const Chromosome& chrom, Rng& rng, const EvolConfig& cfg) {
  Chromosome out = chrom;
  const int len = static_cast<int>(out.length());
  for (int i = 0; i < len; ++i) {
    if (!rng.bernoulli(cfg.mutation_prob)) continue;
    switch (rng.weighted_index(cfg.mutation_weights)) {
      case 0: out.genes[i] = mutate_operator(out.genes[i], rng, cfg.library, out.width); break;
      case 1: out.genes[i] = mutate_address(out.genes[i], rng, out.width); break;
      case 2: out.genes[i] = mutate_rotate(out.genes[i], rng); break;
      default: {
        if (len < 2) break;
        int j = rng.uniform_int(0, len - 2);
        if (j >= i) ++j;
        std::swap(out.genes[i], out.genes[j]);
        break;
      }
    }
  }
  return out;
}

struct GenerationStats {
  std::size_t generation = 0;
  Fitness best;
  std::uint64_t evaluations = 0;
};

namespace detail {

inline std::vector<std::size_t> best_indices(const std::vector<Individual>& pop, int count) {
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + count, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (pop[a].eval.fitness != pop[b].eval.fitness)
                        return pop[a].eval.fitness < pop[b].eval.fitness;
                      return a < b;
                    });
  order.resize(count);
  return order;
}

}  // namespace detail

/// One generation: carry the elite over unchanged, breed the remainder
/// with tournament selection, crossover and mutation, then evaluate the
/// newcomers. Population size is preserved.
inline GenerationStats step(std::vector<Individual>& pop, const TargetColumns& targets,
                            const Embedding& emb, const EvolConfig& cfg, Rng& rng) {
  const std::size_t size = pop.size();
  std::vector<Individual> next;
  next.reserve(size);

  for (std::size_t idx : detail::best_indices(pop, std::min<int>(cfg.elitism, size)))
    next.push_back(pop[idx]);

  std::vector<std::size_t> fresh;
  while (next.size() < size) {
    const std::size_t ia = tournament_select(pop, rng, cfg.tournament_size);
    const std::size_t ib = tournament_select(pop, rng, cfg.tournament_size);
    Chromosome ca, cb;
    if (pop[ia].chrom.length() >= 2 && rng.bernoulli(cfg.crossover_prob)) {
      std::tie(ca, cb) = crossover(pop[ia].chrom, pop[ib].chrom, rng);
    } else {
      ca = pop[ia].chrom;
      cb = pop[ib].chrom;
    }
    ca = mutate(ca, rng, cfg);
    cb = mutate(cb, rng, cfg);
    fresh.push_back(next.size());
    next.push_back({std::move(ca), {}});
    if (next.size() < size) {
      fresh.push_back(next.size());
      next.push_back({std::move(cb), {}});
    }
  }

  for (std::size_t idx : fresh)
    next[idx].eval = evaluate(next[idx].chrom, targets, emb, cfg.cost_model);

  pop = std::move(next);
  GenerationStats stats;
  stats.evaluations = fresh.size();
  stats.best = pop[detail::best_indices(pop, 1).front()].eval.fitness;
  return stats;
}

struct RunResult {
  Chromosome best_chromosome;
  Evaluation best_eval;
  Circuit best_circuit;   // decoded winning prefix
  std::size_t generation_found = 0;
  std::size_t generations_run = 0;
  std::uint64_t total_evaluations = 0;
  double wall_seconds = 0.0;
};

using ProgressFn = std::function<void(const GenerationStats&)>;

/// Full run: random initial population, then up to max_generations
/// steps. Tracks the best individual ever seen; with early_stop the loop
/// halts as soon as a perfect (zero-error) prefix appears.
inline RunResult run(const FunctionSpec& spec, const Embedding& emb, const EvolConfig& cfg,
                     const ProgressFn& progress = {}) {
  validate_config(cfg);
  const auto started = std::chrono::steady_clock::now();
  const TargetColumns targets = target_columns(spec, emb);
  Rng rng(cfg.seed);

  std::vector<Individual> pop;
  pop.reserve(cfg.population_size);
  for (int i = 0; i < cfg.population_size; ++i) {
    Individual ind{random_chromosome(rng, cfg.chromosome_length, emb.width, cfg.library), {}};
    ind.eval = evaluate(ind.chrom, targets, emb, cfg.cost_model);
    pop.push_back(std::move(ind));
  }

  RunResult result;
  result.total_evaluations = pop.size();
  std::size_t best_idx = detail::best_indices(pop, 1).front();
  result.best_chromosome = pop[best_idx].chrom;
  result.best_eval = pop[best_idx].eval;
  result.generation_found = 0;

  if (progress) progress({0, result.best_eval.fitness, result.total_evaluations});

  std::size_t generation = 0;
  while (generation < static_cast<std::size_t>(cfg.max_generations) &&
         !(cfg.early_stop && result.best_eval.perfect)) {
    ++generation;
    const GenerationStats stats = step(pop, targets, emb, cfg, rng);
    result.total_evaluations += stats.evaluations;
    if (stats.best < result.best_eval.fitness) {
      best_idx = detail::best_indices(pop, 1).front();
      result.best_chromosome = pop[best_idx].chrom;
      result.best_eval = pop[best_idx].eval;
      result.generation_found = generation;
    }
    if (progress) progress({generation, result.best_eval.fitness, result.total_evaluations});
  }

  result.generations_run = generation;
  result.best_circuit = decode_prefix(result.best_chromosome, result.best_eval.prefix_len);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace revsynth
