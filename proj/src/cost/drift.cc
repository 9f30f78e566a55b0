// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <limits>

#include <Eigen/Dense>

#include "cost_branches.h"
#include "photonchain/cost/cost_model.h"

namespace photonchain::cost {

double drift(const ConstructionPolicy& policy) {
  policy.check();
  const int side = policy.links_per_gate() + 1;
  const int states = side * side;
  // Far from level 0, so every destructive failure can undo a gate.
  constexpr int kLevel = 1 << 20;

  Eigen::MatrixXd transition = Eigen::MatrixXd::Zero(states, states);
  Eigen::VectorXd progress = Eigen::VectorXd::Zero(states);
  for (int fa = 0; fa < side; ++fa) {
    for (int fb = 0; fb < side; ++fb) {
      BuildState s{{fa, fb}, kLevel};
      const int from = fa * side + fb;
      Phase ph = next_phase(s, policy);
      auto branches = ph == Phase::gate ? detail::gate_branches(s, policy)
                                        : detail::link_branches(s, ph == Phase::link_a ? 0 : 1, policy);
      for (const auto& b : branches) {
        transition(from, b.next.free_links[0] * side + b.next.free_links[1]) += b.probability;
        progress(from) += b.probability * (b.next.completed_gates - kLevel);
      }
    }
  }
  // Stationary pi: pi (P - I) = 0 with sum(pi) = 1 replacing one equation.
  Eigen::MatrixXd a = (transition - Eigen::MatrixXd::Identity(states, states)).transpose();
  a.row(states - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(states);
  rhs(states - 1) = 1;
  Eigen::VectorXd pi = a.fullPivLu().solve(rhs);
  return pi.dot(progress);
}

DriftAnalysis drift_analysis(const ConstructionPolicy& policy, int max_n) {
  DriftAnalysis out;
  out.drift = drift(policy);
  out.cost_per_gate = out.drift > 0 ? 1 / out.drift : std::numeric_limits<double>::infinity();
  for (int n = 1; n <= max_n; ++n) {
    ConstructionPolicy p = policy;
    p.n_order = n;
    p.basic_gate_prob.reset();
    if (drift(p) > 0) {
      out.minimal_n = n;
      break;
    }
  }
  return out;
}

}  // namespace photonchain::cost
