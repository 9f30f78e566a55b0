// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/fock/mode_unitary.h"

#include <cmath>
#include <numbers>
#include <string>

namespace photonchain::fock {

namespace {

double sqrt_factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return std::sqrt(f);
}

using Expansion = std::vector<std::pair<Occupation, Complex>>;

// Output amplitudes of the sub-occupation `in` under u, including the
// sqrt(prod n!)/sqrt(prod m!) normalization of Fock states.
Expansion expand(const Occupation& in, const ModeUnitary& u) {
  const int d = u.dim();
  std::map<Occupation, Complex> poly{{Occupation(d, 0), Complex(1.0)}};
  for (int j = 0; j < d; ++j) {
    for (int rep = 0; rep < in[j]; ++rep) {
      std::map<Occupation, Complex> next;
      for (const auto& [o, c] : poly) {
        for (int k = 0; k < d; ++k) {
          Complex ujk = u(j, k);
          if (ujk == Complex(0)) continue;
          Occupation o2 = o;
          ++o2[k];
          next[o2] += c * ujk;
        }
      }
      poly = std::move(next);
    }
  }
  double in_norm = 1;
  for (int m : in) in_norm *= sqrt_factorial(m);
  Expansion out;
  out.reserve(poly.size());
  for (const auto& [o, c] : poly) {
    double f = 1;
    for (int n : o) f *= sqrt_factorial(n);
    out.emplace_back(o, c * f / in_norm);
  }
  return out;
}

}  // namespace

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  Eigen::MatrixXcd d = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() < tol;
}

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (!is_unitary(matrix_)) throw std::invalid_argument("matrix is not unitary");
}

ModeUnitary ModeUnitary::identity(int dim) {
  return ModeUnitary(Eigen::MatrixXcd::Identity(dim, dim));
}

ModeUnitary ModeUnitary::adjoint() const { return ModeUnitary(matrix_.adjoint()); }

ModeUnitary ModeUnitary::then(const ModeUnitary& next) const {
  // a^dag -> U a^dag, then each a_k^dag -> V a^dag: combined row j is (U V)_j.
  return ModeUnitary(matrix_ * next.matrix_);
}

ModeUnitary beam_splitter(double theta, double phi) {
  Eigen::Matrix2cd m;
  const Complex i(0, 1);
  m << std::cos(theta), -std::exp(-i * phi) * std::sin(theta),
      std::exp(i * phi) * std::sin(theta), std::cos(theta);
  return ModeUnitary(m);
}

ModeUnitary fourier(int d) {
  if (d < 1) throw std::invalid_argument("fourier: dimension must be positive");
  Eigen::MatrixXcd m(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      double angle = 2 * std::numbers::pi * ((j * k) % d) / d;
      m(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), angle);
    }
  }
  return ModeUnitary(m);
}

ModeUnitary phase_shift(double phi) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = std::polar(1.0, phi);
  return ModeUnitary(m);
}

FockState apply_unitary(const FockState& state, const ModeUnitary& u,
                        std::span<const int> modes, int max_photons) {
  if (static_cast<int>(modes.size()) != u.dim()) {
    throw std::invalid_argument("apply_unitary: " + std::to_string(modes.size()) +
                                " modes for a " + std::to_string(u.dim()) + "-mode unitary");
  }
  std::vector<bool> seen(state.num_modes(), false);
  for (int m : modes) {
    if (m < 0 || m >= state.num_modes()) throw std::out_of_range("apply_unitary: bad mode");
    if (seen[m]) throw std::invalid_argument("apply_unitary: duplicate mode");
    seen[m] = true;
  }
  if (state.max_photons() > max_photons) {
    throw PhotonBudgetExceeded("state holds " + std::to_string(state.max_photons()) +
                               " photons, budget is " + std::to_string(max_photons));
  }

  std::map<Occupation, Expansion> cache;
  std::map<Occupation, Complex> acc;
  for (const auto& [occ, amp] : state.terms()) {
    Occupation sub(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) sub[i] = occ[modes[i]];
    auto it = cache.find(sub);
    if (it == cache.end()) it = cache.emplace(sub, expand(sub, u)).first;
    for (const auto& [out, c] : it->second) {
      Occupation o = occ;
      for (std::size_t i = 0; i < modes.size(); ++i) o[modes[i]] = out[i];
      acc[o] += amp * c;
    }
  }
  FockState r(state.num_modes());
  std::vector<std::pair<Occupation, Complex>> terms(acc.begin(), acc.end());
  r = FockState::from_terms(state.num_modes(), terms);
  r.set_norm_tracking(state.norm_tracking());
  return r;
}

}  // namespace photonchain::fock
