// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "photonchain/fock/mode_unitary.h"

namespace photonchain::fock {

struct TwoModeRotation {
  int mode_a;
  int mode_b;
  Eigen::Matrix2cd matrix;
};

// u == embed(rotations[0]) * embed(rotations[1]) * ... * diag(phases).
struct ReckDecomposition {
  int dim = 0;
  std::vector<TwoModeRotation> rotations;
  std::vector<Complex> phases;

  Eigen::MatrixXcd compose() const;
};

// Givens elimination on adjacent modes. Elements that are already zero are
// skipped, so the identity yields no rotations. Residual phases on the modes of
// the final rotation are folded into it (a 2x2 input comes back as itself).
ReckDecomposition reck_decompose(const ModeUnitary& u);
ReckDecomposition reck_decompose(const Eigen::MatrixXcd& u);  // checks unitarity

}  // namespace photonchain::fock
