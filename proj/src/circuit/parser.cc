// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

#include "photonchain/circuit/circuit.h"

namespace photonchain::circuit {

int Circuit::cz_count() const {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
    return std::holds_alternative<CzGate>(g);
  }));
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != '#' && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string r(s);
  std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return std::tolower(c); });
  return r;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> to_double(std::string_view s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

Circuit parse(std::string_view text) {
  Circuit c;
  bool declared = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string op = lower(tokens[0].text);
    auto expect_args = [&](std::size_t n, const char* usage) {
      if (tokens.size() != n + 1) {
        int col = tokens.size() > n + 1 ? tokens[n + 1].column : tokens.back().column;
        throw ParseError(line_no, col, std::string("expected '") + usage + "'");
      }
    };
    auto qubit = [&](std::size_t i) {
      auto v = to_int(tokens[i].text);
      if (!v) {
        throw ParseError(line_no, tokens[i].column,
                         "expected a qubit index, got '" + std::string(tokens[i].text) + "'");
      }
      if (*v < 0 || *v >= c.num_qubits) {
        throw ParseError(line_no, tokens[i].column,
                         "qubit " + std::to_string(*v) + " out of range (qubits " +
                             std::to_string(c.num_qubits) + ")");
      }
      return *v;
    };

    if (op == "qubits") {
      if (declared) throw ParseError(line_no, tokens[0].column, "duplicate qubits declaration");
      expect_args(1, "qubits N");
      auto n = to_int(tokens[1].text);
      if (!n || *n < 1) {
        throw ParseError(line_no, tokens[1].column, "qubit count must be a positive integer");
      }
      c.num_qubits = *n;
      declared = true;
      continue;
    }
    if (!declared) throw ParseError(line_no, tokens[0].column, "missing qubits declaration");
    if (op == "cz") {
      expect_args(2, "cz A B");
      int a = qubit(1), b = qubit(2);
      if (a == b) throw ParseError(line_no, tokens[2].column, "cz needs two distinct qubits");
      c.gates.push_back(CzGate{a, b});
      continue;
    }
    auto kind = linked::parse_gate_name(op);
    if (!kind) {
      throw ParseError(line_no, tokens[0].column, "unknown gate '" + std::string(tokens[0].text) + "'");
    }
    if (*kind == GateKind::rz) {
      expect_args(2, "rz Q ANGLE");
      int q = qubit(1);
      auto angle = to_double(tokens[2].text);
      if (!angle) {
        throw ParseError(line_no, tokens[2].column,
                         "expected a finite angle, got '" + std::string(tokens[2].text) + "'");
      }
      c.gates.push_back(LocalGate{q, {GateKind::rz, *angle}});
    } else {
      expect_args(1, (op + " Q").c_str());
      c.gates.push_back(LocalGate{qubit(1), {*kind, 0.0}});
    }
  }
  if (!declared) throw ParseError(1, 1, "missing qubits declaration");
  return c;
}

std::string render(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.num_qubits) + "\n";
  for (const auto& g : c.gates) {
    if (const auto* cz = std::get_if<CzGate>(&g)) {
      out += "cz " + std::to_string(cz->a) + " " + std::to_string(cz->b) + "\n";
      continue;
    }
    const auto& l = std::get<LocalGate>(g);
    out += std::string(linked::gate_name(l.gate.kind)) + " " + std::to_string(l.qubit);
    if (l.gate.kind == GateKind::rz) {
      char buf[64];
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, l.gate.angle);
      out += " " + std::string(buf, p);
    }
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates) {
    if (const auto* cz = std::get_if<CzGate>(&g)) {
      gates.push_back({{"gate", "cz"}, {"qubits", {cz->a, cz->b}}});
    } else {
      const auto& l = std::get<LocalGate>(g);
      nlohmann::json j = {{"gate", linked::gate_name(l.gate.kind)}, {"qubits", {l.qubit}}};
      if (l.gate.kind == GateKind::rz) j["angle"] = l.gate.angle;
      gates.push_back(j);
    }
  }
  return {{"qubits", c.num_qubits}, {"gates", gates}};
}

}  // namespace photonchain::circuit
