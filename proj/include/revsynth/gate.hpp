#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revsynth {

/// Gate families. Not / Cnot / Toffoli are the multi-control-NOT ladder
/// (0, 1, >=2 controls as distinct kinds). The Peres family are 3-line
/// gates (p, q, t): q picks up p XOR q, t picks up a product term of the
/// incoming p and q values.
enum class GateKind : std::uint8_t {
  Not,
  Cnot,
  Toffoli,
  Peres,
  PeresNegFirst,   // AND term uses NOT p
  PeresNegSecond,  // AND term uses NOT q; inverse of Peres
  OrPeres,         // OR term instead of AND
};

constexpr bool is_peres_family(GateKind k) {
  return k == GateKind::Peres || k == GateKind::PeresNegFirst ||
         k == GateKind::PeresNegSecond || k == GateKind::OrPeres;
}

/// A reversible gate over 1-based circuit lines. Operand order is
/// controls first, target last; for the Peres family the list is (p, q, t).
/// Lines must be pairwise distinct (fan-out freedom).
struct Gate {
  GateKind kind{GateKind::Not};
  std::vector<int> lines;

  [[nodiscard]] int arity() const { return static_cast<int>(lines.size()); }
  [[nodiscard]] int target() const { return lines.back(); }
  [[nodiscard]] int control_count() const { return arity() - 1; }

  friend bool operator==(const Gate&, const Gate&) = default;
  friend auto operator<=>(const Gate&, const Gate&) = default;
};

inline Gate make_not(int t) { return {GateKind::Not, {t}}; }
inline Gate make_cnot(int c, int t) { return {GateKind::Cnot, {c, t}}; }

inline Gate make_toffoli(std::vector<int> controls, int t) {
  Gate g{GateKind::Toffoli, std::move(controls)};
  g.lines.push_back(t);
  return g;
}

inline Gate make_peres(int p, int q, int t) { return {GateKind::Peres, {p, q, t}}; }

/// Expected operand count for a kind, or -1 when the kind is variadic
/// (Toffoli takes any count >= 3).
constexpr int fixed_arity(GateKind k) {
  switch (k) {
    case GateKind::Not: return 1;
    case GateKind::Cnot: return 2;
    case GateKind::Toffoli: return -1;
    default: return 3;
  }
}

/// nullopt when the gate is well formed for a circuit of `width` lines;
/// otherwise a description of the violated rule.
inline std::optional<std::string> validate_gate(const Gate& g, int width) {
  const int want = fixed_arity(g.kind);
  if (want >= 0 && g.arity() != want)
    return "operand count " + std::to_string(g.arity()) + " does not match gate arity " +
           std::to_string(want);
  if (g.kind == GateKind::Toffoli && g.arity() < 3)
    return "Toffoli needs at least two controls";
  for (int l : g.lines)
    if (l < 1 || l > width)
      return "line " + std::to_string(l) + " outside [1, " + std::to_string(width) + "]";
  for (std::size_t i = 0; i < g.lines.size(); ++i)
    for (std::size_t j = i + 1; j < g.lines.size(); ++j)
      if (g.lines[i] == g.lines[j])
        return "line " + std::to_string(g.lines[i]) + " used twice";
  return std::nullopt;
}

/// Applies the gate to one packed state (bit k-1 of `state` is line k).
/// The gate must be valid for the state's width.
inline std::uint64_t apply_gate(std::uint64_t state, const Gate& g) {
  const auto bit = [&](int line) -> std::uint64_t { return (state >> (line - 1)) & 1u; };
  switch (g.kind) {
    case GateKind::Not:
      return state ^ (std::uint64_t{1} << (g.lines[0] - 1));
    case GateKind::Cnot:
    case GateKind::Toffoli: {
      std::uint64_t all = 1;
      for (std::size_t i = 0; i + 1 < g.lines.size(); ++i) all &= bit(g.lines[i]);
      return state ^ (all << (g.target() - 1));
    }
    default: {
      const int p = g.lines[0], q = g.lines[1], t = g.lines[2];
      const std::uint64_t pv = bit(p), qv = bit(q);
      std::uint64_t term = 0;
      switch (g.kind) {
        case GateKind::Peres: term = pv & qv; break;
        case GateKind::PeresNegFirst: term = (pv ^ 1u) & qv; break;
        case GateKind::PeresNegSecond: term = pv & (qv ^ 1u); break;
        default: term = pv | qv; break;  // OrPeres
      }
      state ^= pv << (q - 1);
      state ^= term << (t - 1);
      return state;
    }
  }
}

/// Short token for documents and tables: t1/t2/t3/... for the NOT ladder
/// (digit = line count), p3/p3n1/p3n2/op3 for the Peres family.
inline std::string kind_token(GateKind k, int arity) {
  switch (k) {
    case GateKind::Not: return "t1";
    case GateKind::Cnot: return "t2";
    case GateKind::Toffoli: return "t" + std::to_string(arity);
    case GateKind::Peres: return "p3";
    case GateKind::PeresNegFirst: return "p3n1";
    case GateKind::PeresNegSecond: return "p3n2";
    case GateKind::OrPeres: return "op3";
  }
  return "?";
}

inline std::string gate_token(const Gate& g) { return kind_token(g.kind, g.arity()); }

/// Parses a kind token; returns (kind, arity). Arity for tN tokens is N.
inline std::optional<std::pair<GateKind, int>> parse_kind_token(std::string_view tok) {
  if (tok == "p3") return {{GateKind::Peres, 3}};
  if (tok == "p3n1") return {{GateKind::PeresNegFirst, 3}};
  if (tok == "p3n2") return {{GateKind::PeresNegSecond, 3}};
  if (tok == "op3") return {{GateKind::OrPeres, 3}};
  if (tok.size() >= 2 && tok[0] == 't') {
    int n = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), n);
    if (ec == std::errc{} && ptr == tok.data() + tok.size() && n >= 1) {
      if (n == 1) return {{GateKind::Not, 1}};
      if (n == 2) return {{GateKind::Cnot, 2}};
      return {{GateKind::Toffoli, n}};
    }
  }
  return std::nullopt;
}

}  // namespace revsynth
