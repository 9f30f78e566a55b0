// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <compare>
#include <vector>

#include <Eigen/Dense>

#include "photonchain/util/random.h"

namespace photonchain::linked {

using Complex = std::complex<double>;

struct QubitId {
  int value = -1;
  auto operator<=>(const QubitId&) const = default;
};

/// Chooses single-qubit measurement results.
class OutcomeSelector {
 public:
  virtual ~OutcomeSelector() = default;
  // Returns 0 or 1 given P(1). Must not return an outcome of probability 0.
  virtual int choose_bit(double prob_one) = 0;
};

class RandomSelector : public OutcomeSelector {
 public:
  explicit RandomSelector(Rng& rng) : rng_(rng) {}
  int choose_bit(double prob_one) override;

 private:
  Rng& rng_;
};

// Replays a fixed bit sequence; throws std::invalid_argument when a scripted
// bit has (numerically) zero probability or the script runs out.
class ScriptedSelector : public OutcomeSelector {
 public:
  explicit ScriptedSelector(std::vector<int> bits) : bits_(std::move(bits)) {}
  int choose_bit(double prob_one) override;

 private:
  std::vector<int> bits_;
  std::size_t next_ = 0;
};

class QubitCapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense state vector over the currently live qubits. Measured qubits are
/// removed, so memory follows the number of live qubits (at most kMaxLiveQubits).
class QubitRegister {
 public:
  static constexpr int kMaxLiveQubits = 24;

  QubitRegister();

  // New qubit in state a0|0> + a1|1> (normalized), as a tensor factor.
  QubitId allocate(Complex a0 = 1, Complex a1 = 0);

  void apply(QubitId q, const Eigen::Matrix2cd& m);
  void x(QubitId q);
  void z(QubitId q);
  void h(QubitId q);
  void cz(QubitId a, QubitId b);
  void cnot(QubitId control, QubitId target);

  double probability_one(QubitId q) const;
  // Projects, renormalizes and removes the qubit.
  int measure(QubitId q, OutcomeSelector& selector);

  bool is_live(QubitId q) const;
  int live_qubits() const { return static_cast<int>(bit_owner_.size()); }
  double norm_squared() const;

  // Amplitudes with bit i of the index holding order[i]. `order` must list
  // every live qubit exactly once.
  std::vector<Complex> amplitudes(const std::vector<QubitId>& order) const;

 private:
  int bit_of(QubitId q) const;

  std::vector<Complex> amps_;
  std::vector<int> bit_owner_;    // bit -> qubit id
  std::vector<int> bit_by_id_;    // qubit id -> bit, -1 when gone
};

}  // namespace photonchain::linked
