// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/linked/gates.h"

#include <cmath>
#include <numbers>

namespace photonchain::linked {

Eigen::Matrix2cd gate_matrix(const SingleQubitGate& g) {
  const double r = 1 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::x: m << 0, 1, 1, 0; break;
    case GateKind::z: m << 1, 0, 0, -1; break;
    case GateKind::h: m << r, r, r, -r; break;
    case GateKind::s: m << 1, 0, 0, Complex(0, 1); break;
    case GateKind::t: m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4); break;
    case GateKind::rz:
      m << std::polar(1.0, -g.angle / 2), 0, 0, std::polar(1.0, g.angle / 2);
      break;
  }
  return m;
}

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::x: return "x";
    case GateKind::z: return "z";
    case GateKind::h: return "h";
    case GateKind::s: return "s";
    case GateKind::t: return "t";
    case GateKind::rz: return "rz";
  }
  return "?";
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
  for (GateKind k : {GateKind::x, GateKind::z, GateKind::h, GateKind::s, GateKind::t,
                     GateKind::rz}) {
    if (name == gate_name(k)) return k;
  }
  return std::nullopt;
}

}  // namespace photonchain::linked
