// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/fock/reck.h"

#include <cmath>

namespace photonchain::fock {

namespace {

Eigen::MatrixXcd embed(const TwoModeRotation& r, int dim) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  m(r.mode_a, r.mode_a) = r.matrix(0, 0);
  m(r.mode_a, r.mode_b) = r.matrix(0, 1);
  m(r.mode_b, r.mode_a) = r.matrix(1, 0);
  m(r.mode_b, r.mode_b) = r.matrix(1, 1);
  return m;
}

}  // namespace

Eigen::MatrixXcd ReckDecomposition::compose() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& r : rotations) m = m * embed(r, dim);
  for (int j = 0; j < dim; ++j) m.col(j) *= phases[j];
  return m;
}

ReckDecomposition reck_decompose(const ModeUnitary& u) {
  const int d = u.dim();
  Eigen::MatrixXcd w = u.matrix();
  ReckDecomposition out;
  out.dim = d;

  // Left-multiply by G acting on rows (r-1, r) to zero w(r, c), column by column.
  // Afterwards w is diagonal and u = G_1^dag G_2^dag ... D.
  for (int c = 0; c + 1 < d; ++c) {
    for (int r = d - 1; r > c; --r) {
      Complex x = w(r - 1, c);
      Complex y = w(r, c);
      if (std::abs(y) < 1e-15) continue;
      double rho = std::hypot(std::abs(x), std::abs(y));
      Eigen::Matrix2cd g;
      g << std::conj(x) / rho, std::conj(y) / rho, -y / rho, x / rho;
      Eigen::MatrixXcd rows(2, d);
      rows.row(0) = w.row(r - 1);
      rows.row(1) = w.row(r);
      rows = g * rows;
      w.row(r - 1) = rows.row(0);
      w.row(r) = rows.row(1);
      w(r, c) = 0;
      out.rotations.push_back({r - 1, r, g.adjoint()});
    }
  }
  out.phases.resize(d);
  for (int j = 0; j < d; ++j) out.phases[j] = w(j, j);

  if (!out.rotations.empty()) {
    auto& last = out.rotations.back();
    Eigen::Matrix2cd dd = Eigen::Matrix2cd::Zero();
    dd(0, 0) = out.phases[last.mode_a];
    dd(1, 1) = out.phases[last.mode_b];
    last.matrix = last.matrix * dd;
    out.phases[last.mode_a] = 1;
    out.phases[last.mode_b] = 1;
  }
  return out;
}

ReckDecomposition reck_decompose(const Eigen::MatrixXcd& u) {
  return reck_decompose(ModeUnitary(u));
}

}  // namespace photonchain::fock
