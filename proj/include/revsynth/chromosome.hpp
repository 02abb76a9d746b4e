#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/rng.hpp"

namespace revsynth {

/// The admissible gate kinds for a run. Toffoli gates are drawn with a
/// control count between 2 and max_toffoli_controls (further capped by
/// the circuit width).
struct GateLibrary {
  bool use_not = true;
  bool use_cnot = true;
  bool use_toffoli = true;
  bool use_peres = false;
  bool use_peres_neg_first = false;
  bool use_peres_neg_second = false;
  bool use_or_peres = false;
  int max_toffoli_controls = 2;

  static GateLibrary nct() { return {}; }

  static GateLibrary nct_peres() {
    GateLibrary lib;
    lib.use_peres = true;
    return lib;
  }

  static GateLibrary nct_peres_mixed() {
    GateLibrary lib;
    lib.use_peres = true;
    lib.use_peres_neg_first = true;
    lib.use_peres_neg_second = true;
    lib.use_or_peres = true;
    return lib;
  }

  [[nodiscard]] bool has(GateKind k) const {
    switch (k) {
      case GateKind::Not: return use_not;
      case GateKind::Cnot: return use_cnot;
      case GateKind::Toffoli: return use_toffoli;
      case GateKind::Peres: return use_peres;
      case GateKind::PeresNegFirst: return use_peres_neg_first;
      case GateKind::PeresNegSecond: return use_peres_neg_second;
      case GateKind::OrPeres: return use_or_peres;
    }
    return false;
  }

  [[nodiscard]] int toffoli_controls_at(int width) const {
    return std::min(width - 1, max_toffoli_controls);
  }

  /// Kinds that can be built at all on `width` lines.
  [[nodiscard]] std::vector<GateKind> kinds_at(int width) const {
    std::vector<GateKind> kinds;
    if (use_not && width >= 1) kinds.push_back(GateKind::Not);
    if (use_cnot && width >= 2) kinds.push_back(GateKind::Cnot);
    if (use_toffoli && toffoli_controls_at(width) >= 2) kinds.push_back(GateKind::Toffoli);
    for (GateKind k : {GateKind::Peres, GateKind::PeresNegFirst, GateKind::PeresNegSecond,
                       GateKind::OrPeres})
      if (has(k) && width >= 3) kinds.push_back(k);
    return kinds;
  }

  /// Concrete (kind, arity) choices at `width`, Toffoli control counts
  /// enumerated individually.
  [[nodiscard]] std::vector<std::pair<GateKind, int>> choices_at(int width) const {
    std::vector<std::pair<GateKind, int>> choices;
    for (GateKind k : kinds_at(width)) {
      if (k == GateKind::Toffoli) {
        for (int c = 2; c <= toffoli_controls_at(width); ++c) choices.emplace_back(k, c + 1);
      } else {
        choices.emplace_back(k, fixed_arity(k));
      }
    }
    return choices;
  }
};

using Gene = Gate;

/// Fixed-length gene list. Every prefix of a chromosome is a complete
/// candidate circuit; the evaluator picks the best one.
struct Chromosome {
  int width = 0;
  std::vector<Gene> genes;

  [[nodiscard]] std::size_t length() const { return genes.size(); }
  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

namespace detail {

/// Appends `count` distinct lines drawn uniformly from [1, width] minus
/// the lines already in `taken`.
inline void draw_free_lines(Rng& rng, int width, std::vector<int>& taken, int count) {
  for (int i = 0; i < count; ++i) {
    std::vector<int> free;
    free.reserve(width);
    for (int l = 1; l <= width; ++l)
      if (std::find(taken.begin(), taken.end(), l) == taken.end()) free.push_back(l);
    if (free.empty()) throw std::logic_error("no free line to draw");
    taken.push_back(free[rng.uniform_int(0, static_cast<int>(free.size()) - 1)]);
  }
}

}  // namespace detail

/// Uniform kind from the library (Toffoli control count uniform over its
/// admissible range), operand lines drawn distinct uniformly.
inline Gene random_gene(Rng& rng, int width, const GateLibrary& library) {
  const auto kinds = library.kinds_at(width);
  if (kinds.empty())
    throw std::invalid_argument("gate library is empty at width " + std::to_string(width));
  const GateKind kind = kinds[rng.uniform_int(0, static_cast<int>(kinds.size()) - 1)];
  int arity = fixed_arity(kind);
  if (kind == GateKind::Toffoli) arity = 1 + rng.uniform_int(2, library.toffoli_controls_at(width));
  Gene g{kind, {}};
  detail::draw_free_lines(rng, width, g.lines, arity);
  return g;
}

inline Chromosome random_chromosome(Rng& rng, std::size_t length, int width,
                                    const GateLibrary& library) {
  Chromosome c{width, {}};
  c.genes.reserve(length);
  for (std::size_t i = 0; i < length; ++i) c.genes.push_back(random_gene(rng, width, library));
  return c;
}

/// Circuit made of the first k genes, order preserved.
inline Circuit decode_prefix(const Chromosome& c, std::size_t k) {
  if (k > c.length())
    throw std::out_of_range("prefix " + std::to_string(k) + " exceeds chromosome length " +
                            std::to_string(c.length()));
  return Circuit{c.width, {c.genes.begin(), c.genes.begin() + k}};
}

/// Empty when valid; otherwise messages tagged with 1-based gene indices.
inline std::vector<std::string> validate_chromosome(const Chromosome& c) {
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < c.genes.size(); ++i)
    if (auto v = validate_gate(c.genes[i], c.width))
      violations.push_back("gene " + std::to_string(i + 1) + ": " + *v);
  return violations;
}

/// Debug table, one column per gene: a kind-token row followed by one
/// row per operand position, '-' where a gene has no operand there.
///
///   t1  t2  p3
///   3   3   1
///   -   2   2
///   -   -   3
inline std::string render_genotype(const Chromosome& c) {
  int max_arity = 0;
  for (const Gene& g : c.genes) max_arity = std::max(max_arity, g.arity());
  std::vector<std::vector<std::string>> cells(1 + max_arity);
  for (const Gene& g : c.genes) {
    cells[0].push_back(gate_token(g));
    for (int row = 0; row < max_arity; ++row)
      cells[row + 1].push_back(row < g.arity() ? std::to_string(g.lines[row]) : "-");
  }
  std::vector<std::size_t> col_width(c.length(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) col_width[i] = std::max(col_width[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << row[i] << std::string(col_width[i] - row[i].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

/// Inverse of render_genotype.
inline Chromosome parse_genotype(const std::string& text, int width) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> row;
    std::string tok;
    while (fields >> tok) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  Chromosome c{width, {}};
  if (rows.empty()) return c;
  const std::size_t genes = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != genes) throw std::invalid_argument("ragged genotype table");
  for (std::size_t i = 0; i < genes; ++i) {
    const auto parsed = parse_kind_token(rows[0][i]);
    if (!parsed) throw std::invalid_argument("unknown gate token '" + rows[0][i] + "'");
    Gene g{parsed->first, {}};
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r][i] == "-") continue;
      g.lines.push_back(std::stoi(rows[r][i]));
    }
    if (g.arity() != parsed->second)
      throw std::invalid_argument("gene " + std::to_string(i + 1) + " lists " +
                                  std::to_string(g.arity()) + " operands for token '" +
                                  rows[0][i] + "'");
    if (auto v = validate_gate(g, width))
      throw std::invalid_argument("gene " + std::to_string(i + 1) + ": " + *v);
    c.genes.push_back(std::move(g));
  }
  return c;
}

}  // namespace revsynth
