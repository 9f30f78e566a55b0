// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace photonchain::linked {

using Complex = std::complex<double>;

enum class GateKind { x, z, h, s, t, rz };

struct SingleQubitGate {
  GateKind kind = GateKind::h;
  double angle = 0;  // rz only

  bool operator==(const SingleQubitGate&) const = default;
};

// rz(theta) = diag(e^{-i theta/2}, e^{i theta/2}).
Eigen::Matrix2cd gate_matrix(const SingleQubitGate& g);

std::string_view gate_name(GateKind k);
std::optional<GateKind> parse_gate_name(std::string_view name);

}  // namespace photonchain::linked
