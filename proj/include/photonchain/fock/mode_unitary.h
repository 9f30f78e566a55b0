// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <span>

#include <Eigen/Dense>

#include "photonchain/fock/fock_state.h"

namespace photonchain::fock {

inline constexpr double kUnitarityTolerance = 1e-10;

/// d x d unitary acting on creation operators: a_j^dag -> sum_k U(j,k) a_k^dag.
class ModeUnitary {
 public:
  // Throws std::invalid_argument unless ||U U^dag - I||_max < kUnitarityTolerance.
  explicit ModeUnitary(Eigen::MatrixXcd matrix);

  static ModeUnitary identity(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Complex operator()(int j, int k) const { return matrix_(j, k); }

  ModeUnitary adjoint() const;
  // Apply `this`, then `next`.
  ModeUnitary then(const ModeUnitary& next) const;

 private:
  Eigen::MatrixXcd matrix_;
};

bool is_unitary(const Eigen::MatrixXcd& m, double tol = kUnitarityTolerance);

// [[cos t, -e^{-i phi} sin t], [e^{i phi} sin t, cos t]].
ModeUnitary beam_splitter(double theta, double phi);
// F(j,k) = omega^{jk} / sqrt(d), omega = exp(2 pi i / d).
ModeUnitary fourier(int d);
ModeUnitary phase_shift(double phi);

// Applies `u` to the listed modes by expanding every term's creation operators.
// Throws PhotonBudgetExceeded if the state holds more than max_photons photons.
FockState apply_unitary(const FockState& state, const ModeUnitary& u,
                        std::span<const int> modes,
                        int max_photons = kDefaultPhotonBudget);

}  // namespace photonchain::fock
