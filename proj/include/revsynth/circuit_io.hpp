#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "revsynth/circuit.hpp"

namespace revsynth {

/// Serializable circuit: gate kind tokens plus operand lists, with free
/// metadata. The JSON rendering is the canonical on-disk circuit format.
struct CircuitDocument {
  std::string name;
  int width = 0;
  std::vector<std::pair<std::string, std::vector<int>>> gates;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const CircuitDocument&, const CircuitDocument&) = default;
};

inline CircuitDocument document_from_circuit(const Circuit& c, std::string name = {},
                                             std::map<std::string, std::string> metadata = {}) {
  CircuitDocument doc;
  doc.name = std::move(name);
  doc.width = c.width;
  doc.metadata = std::move(metadata);
  for (const Gate& g : c.gates) doc.gates.emplace_back(gate_token(g), g.lines);
  return doc;
}

inline Circuit circuit_from_document(const CircuitDocument& doc) {
  Circuit c{doc.width, {}};
  for (const auto& [token, lines] : doc.gates) {
    const auto parsed = parse_kind_token(token);
    if (!parsed) throw std::invalid_argument("unknown gate token '" + token + "'");
    Gate g{parsed->first, lines};
    if (g.arity() != parsed->second)
      throw std::invalid_argument("token '" + token + "' expects " +
                                  std::to_string(parsed->second) + " operands, got " +
                                  std::to_string(g.arity()));
    if (auto v = validate_gate(g, doc.width)) throw std::invalid_argument(*v);
    c.gates.push_back(std::move(g));
  }
  return c;
}

inline std::string document_to_json(const CircuitDocument& doc) {
  nlohmann::ordered_json j;
  j["format"] = "revsynth-circuit";
  j["name"] = doc.name;
  j["width"] = doc.width;
  j["gates"] = nlohmann::ordered_json::array();
  for (const auto& [token, lines] : doc.gates) j["gates"].push_back({token, lines});
  j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

inline CircuitDocument document_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.value("format", "") != "revsynth-circuit")
    throw std::invalid_argument("not a revsynth circuit document");
  CircuitDocument doc;
  doc.name = j.value("name", "");
  doc.width = j.at("width").get<int>();
  for (const auto& entry : j.at("gates"))
    doc.gates.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<std::vector<int>>());
  if (j.contains("metadata"))
    doc.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  return doc;
}

/// The revlib-like export dialect:
///
///   .version 1.0
///   .numvars 3
///   .variables x1 x2 x3
///   .begin
///   t2 x1 x3
///   p3 x1 -x2 x3
///   .end
///
/// Gate tokens are t1/t2/t3/... for the NOT ladder, p3 and op3 for the
/// Peres family. A leading '-' on a Peres operand marks the product-term
/// input that is negated: "-x1" on the first operand selects the
/// first-negated variant, "-x2" on the second the second-negated one.
/// This is a documented subset, not a certified implementation of the
/// external format.
inline std::string render_revlib(const CircuitDocument& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "# " << doc.name << "\n";
  out << ".version 1.0\n.numvars " << doc.width << "\n.variables";
  for (int l = 1; l <= doc.width; ++l) out << " x" << l;
  out << "\n.begin\n";
  for (const auto& [token, lines] : doc.gates) {
    std::string body_token = token;
    int negated = 0;  // operand position carrying the '-' marker, 0 = none
    if (token == "p3n1") {
      body_token = "p3";
      negated = 1;
    } else if (token == "p3n2") {
      body_token = "p3";
      negated = 2;
    }
    out << body_token;
    for (std::size_t i = 0; i < lines.size(); ++i)
      out << ' ' << (static_cast<int>(i + 1) == negated ? "-x" : "x") << lines[i];
    out << "\n";
  }
  out << ".end\n";
  return out.str();
}

inline CircuitDocument parse_revlib(const std::string& text) {
  CircuitDocument doc;
  std::istringstream in(text);
  std::string line;
  bool in_body = false;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head[0] == '#') {
      if (doc.name.empty()) {
        std::string rest;
        std::getline(fields, rest);
        const auto b = rest.find_first_not_of(' ');
        if (b != std::string::npos) doc.name = rest.substr(b);
      }
      continue;
    }
    if (head == ".version" || head == ".variables") continue;
    if (head == ".numvars") {
      fields >> doc.width;
      continue;
    }
    if (head == ".begin") {
      in_body = true;
      continue;
    }
    if (head == ".end") break;
    if (!in_body) throw std::invalid_argument("gate line before .begin");

    std::vector<int> lines_list;
    int negated_pos = 0;
    std::string operand;
    while (fields >> operand) {
      bool neg = false;
      if (!operand.empty() && operand[0] == '-') {
        neg = true;
        operand.erase(0, 1);
      }
      if (operand.size() < 2 || operand[0] != 'x')
        throw std::invalid_argument("bad operand '" + operand + "'");
      lines_list.push_back(std::stoi(operand.substr(1)));
      if (neg) {
        if (negated_pos != 0) throw std::invalid_argument("more than one negated operand");
        negated_pos = static_cast<int>(lines_list.size());
      }
    }
    std::string token = head;
    if (negated_pos != 0) {
      if (head != "p3" || negated_pos > 2)
        throw std::invalid_argument("negation marker only allowed on the first two p3 operands");
      token = negated_pos == 1 ? "p3n1" : "p3n2";
    }
    doc.gates.emplace_back(std::move(token), std::move(lines_list));
  }
  return doc;
}

/// Wire diagram, one row per line and one column per gate, with the kind
/// token above each column. Control dots are filled, the XOR pickup is a
/// circled plus, the Peres product target a circled dot; a hollow dot
/// marks the negated product input of the mixed-polarity Peres variants.
inline std::string render_ascii(const Circuit& c) {
  const std::string kControl = "●", kNegated = "○", kXor = "⊕", kDot = "◉", kPass = "┼";

  std::vector<std::string> tokens;
  std::vector<std::vector<std::string>> cells(c.width);
  for (auto& row : cells) row.assign(c.gates.size(), "");
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const Gate& gate = c.gates[g];
    tokens.push_back(gate_token(gate));
    int lo = gate.lines.front(), hi = gate.lines.front();
    for (int l : gate.lines) {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    switch (gate.kind) {
      case GateKind::Not:
        cells[gate.lines[0] - 1][g] = kXor;
        break;
      case GateKind::Cnot:
      case GateKind::Toffoli:
        for (std::size_t i = 0; i + 1 < gate.lines.size(); ++i)
          cells[gate.lines[i] - 1][g] = kControl;
        cells[gate.target() - 1][g] = kXor;
        break;
      default:
        cells[gate.lines[0] - 1][g] =
            gate.kind == GateKind::PeresNegFirst ? kNegated : kControl;
        cells[gate.lines[1] - 1][g] =
            gate.kind == GateKind::PeresNegSecond ? kNegated : kXor;
        cells[gate.lines[2] - 1][g] = kDot;
        break;
    }
    for (int l = lo + 1; l < hi; ++l)
      if (cells[l - 1][g].empty()) cells[l - 1][g] = kPass;
  }

  std::vector<std::size_t> col_width(c.gates.size());
  for (std::size_t g = 0; g < c.gates.size(); ++g) col_width[g] = tokens[g].size();

  std::size_t name_width = 1 + std::to_string(c.width).size();
  std::ostringstream out;
  out << std::string(name_width + 3, ' ');
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    if (g) out << "  ";
    out << tokens[g] << std::string(col_width[g] - tokens[g].size(), ' ');
  }
  out << "\n";
  for (int l = 1; l <= c.width; ++l) {
    std::string name = "x" + std::to_string(l);
    out << name << std::string(name_width - name.size(), ' ') << " ──";
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
      if (g) out << "──";
      const std::string& s = cells[l - 1][g];
      out << (s.empty() ? std::string("─") : s);
      for (std::size_t i = 1; i < col_width[g]; ++i) out << "─";
    }
    out << "──\n";
  }
  return out.str();
}

/// Loads a circuit document from JSON or the revlib-like dialect,
/// auto-detected by the first non-space character.
inline CircuitDocument parse_circuit_document(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return document_from_json(text);
  return parse_revlib(text);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace revsynth
