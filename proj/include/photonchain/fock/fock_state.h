// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace photonchain::fock {

using Complex = std::complex<double>;
using Occupation = std::vector<int>;

inline constexpr double kPruneEpsilon = 1e-12;
inline constexpr int kDefaultPhotonBudget = 12;

class PhotonBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse superposition of Fock basis states over a fixed number of modes.
///
/// Terms whose amplitude magnitude falls below kPruneEpsilon are dropped.
/// norm_tracking() accumulates the probability of the measurement branch that
/// produced this state (1 for a freshly prepared state).
class FockState {
 public:
  using TermMap = std::map<Occupation, Complex>;

  explicit FockState(int num_modes = 0);  // vacuum
  static FockState basis(const Occupation& occ);
  static FockState from_terms(int num_modes,
                              const std::vector<std::pair<Occupation, Complex>>& terms);

  int num_modes() const { return num_modes_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Complex amplitude(const Occupation& occ) const;
  void add(const Occupation& occ, Complex amp);
  void prune(double eps = kPruneEpsilon);

  double norm_squared() const;
  void normalize();
  double norm_tracking() const { return norm_tracking_; }
  void set_norm_tracking(double p) { norm_tracking_ = p; }

  // Largest total photon number over all terms; -1 for the zero vector.
  int max_photons() const;
  // True when every term has the same total photon number.
  bool photon_number_definite() const;

  // <this|other>.
  Complex inner(const FockState& other) const;
  // Modes of `other` are appended after the modes of this state.
  FockState tensor(const FockState& other) const;

  void swap_modes(int a, int b);
  // Multiplies every term by phase^{n_mode}.
  void apply_mode_phase(int mode, Complex phase);

  // Sets the listed modes to vacuum. They must have a definite occupation
  // (e.g. right after a photon-counting measurement); models detector absorption.
  void absorb(std::span<const int> modes);

  // Removes the listed modes. The state must factor as (rest) x (listed modes);
  // throws std::invalid_argument otherwise. Remaining modes keep their order.
  FockState discard_modes(std::span<const int> modes, double tol = 1e-9) const;

  nlohmann::json to_json() const;
  static FockState from_json(const nlohmann::json& j);

 private:
  void check_occupation(const Occupation& occ) const;

  int num_modes_;
  TermMap terms_;
  double norm_tracking_ = 1.0;
};

// Fidelity of `state` restricted to `kept_modes` with the pure `target`
// (whose modes correspond to kept_modes in order), tracing out the rest:
// sum_env |<target|state_env>|^2 / <state|state>.
double reduced_fidelity(const FockState& state, const FockState& target,
                        std::span<const int> kept_modes);

// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const FockState& a, const FockState& b);

}  // namespace photonchain::fock
