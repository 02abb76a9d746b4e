#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "revsynth/gate.hpp"

namespace revsynth {

/// Per-gate quantum cost table. NOT and CNOT cost 1, the 2-control
/// Toffoli 5, every Peres variant 4. Costs for Toffoli gates with more
/// controls follow the usual benchmark convention and can be overridden.
struct CostModel {
  std::int64_t not_cost = 1;
  std::int64_t cnot_cost = 1;
  std::int64_t peres_cost = 4;
  std::int64_t peres_neg_first_cost = 4;
  std::int64_t peres_neg_second_cost = 4;
  std::int64_t or_peres_cost = 4;
  std::map<int, std::int64_t> toffoli_cost{{2, 5}, {3, 13}, {4, 29}, {5, 61}, {6, 125}};

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

inline std::int64_t gate_cost(const Gate& g, const CostModel& m) {
  switch (g.kind) {
    case GateKind::Not: return m.not_cost;
    case GateKind::Cnot: return m.cnot_cost;
    case GateKind::Peres: return m.peres_cost;
    case GateKind::PeresNegFirst: return m.peres_neg_first_cost;
    case GateKind::PeresNegSecond: return m.peres_neg_second_cost;
    case GateKind::OrPeres: return m.or_peres_cost;
    case GateKind::Toffoli: {
      auto it = m.toffoli_cost.find(g.control_count());
      if (it == m.toffoli_cost.end())
        throw std::out_of_range("no cost configured for a Toffoli with " +
                                std::to_string(g.control_count()) + " controls");
      return it->second;
    }
  }
  throw std::logic_error("unreachable gate kind");
}

/// Parses an override string of comma-separated key=value pairs, e.g.
/// "cnot=2,toffoli2=5,toffoli3=14,peres=4". Unknown keys are rejected.
/// Used for the REVSYNTH_COST_MODEL environment variable.
inline CostModel parse_cost_model(const std::string& text, CostModel base = {}) {
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("cost model entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::int64_t value = std::stoll(item.substr(eq + 1));
    if (value < 0) throw std::invalid_argument("cost for '" + key + "' must be non-negative");
    if (key == "not") base.not_cost = value;
    else if (key == "cnot") base.cnot_cost = value;
    else if (key == "peres") base.peres_cost = value;
    else if (key == "peres_neg_first") base.peres_neg_first_cost = value;
    else if (key == "peres_neg_second") base.peres_neg_second_cost = value;
    else if (key == "or_peres") base.or_peres_cost = value;
    else if (key.rfind("toffoli", 0) == 0) {
      const int controls = std::stoi(key.substr(7));
      if (controls < 2) throw std::invalid_argument("toffoli control count must be >= 2");
      base.toffoli_cost[controls] = value;
    } else {
      throw std::invalid_argument("unknown cost model key '" + key + "'");
    }
  }
  return base;
}

}  // namespace revsynth
