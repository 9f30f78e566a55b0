// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "photonchain/linked/gates.h"

namespace photonchain::circuit {

using linked::GateKind;
using linked::SingleQubitGate;

struct CzGate {
  int a = 0;
  int b = 0;
  bool operator==(const CzGate&) const = default;
};

struct LocalGate {
  int qubit = 0;
  SingleQubitGate gate;
  bool operator==(const LocalGate&) const = default;
};

using Gate = std::variant<CzGate, LocalGate>;

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  int cz_count() const;
  bool operator==(const Circuit&) const = default;
};

/// Syntax or semantic error in circuit text; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// One statement per line:
//   qubits N        (first statement, exactly once)
//   cz A B
//   x|z|h|s|t Q
//   rz Q ANGLE
// '#' starts a comment. Keywords are case-insensitive.
Circuit parse(std::string_view text);
std::string render(const Circuit& c);

nlohmann::json to_json(const Circuit& c);

}  // namespace photonchain::circuit
