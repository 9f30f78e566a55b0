// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "photonchain/util/random.h"

namespace photonchain::cost {

struct ConstructionPolicy {
  int n_order = 3;
  int inert_links_per_gate = 0;
  bool sequential_teleport = true;
  std::optional<double> basic_gate_prob;  // overrides n^2/(n+1)^2

  // Success probability of a link addition or gate attempt.
  double p() const;
  // Success probability of one half (teleport): sqrt(p).
  double q() const;
  // Links that must sit above the last gated link before the next gate: k + 1.
  int links_per_gate() const { return inert_links_per_gate + 1; }
  void check() const;  // throws std::invalid_argument
};

nlohmann::json to_json(const ConstructionPolicy& p);

/// Two-chain construction state. Each chain keeps only the count of trailing
/// links that carry no gate edge; surplus beyond links_per_gate() is contracted
/// away by a free Bell measurement, so the count is capped there.
struct BuildState {
  std::array<int, 2> free_links{0, 0};
  int completed_gates = 0;
};

enum class Phase { link_a, link_b, gate };

// Extend the chain with fewer free links (ties go to A) until both have
// links_per_gate(), then attempt the gate.
Phase next_phase(const BuildState& s, const ConstructionPolicy& policy);

enum class LinkOutcome { success, neutral, destructive };

struct LinkTransition {
  LinkOutcome outcome = LinkOutcome::success;
  bool gate_reverted = false;
  int teleports = 0;
};

// One attempted link addition on `chain` (1 CZ-equivalent). A destructive
// failure removes the previous link; if that link carried the last gate edge
// the gate is undone and the partner's gated link becomes a plain link.
LinkTransition step_link_addition(BuildState& s, int chain, const ConstructionPolicy& policy,
                                  Rng& rng);

enum class GateOutcome { success, broke_first, broke_second, broke_both };

struct GateTransition {
  GateOutcome outcome = GateOutcome::success;
  int teleports = 0;
};

// One attempted gate between the chain tails (1 CZ-equivalent).
GateTransition step_gate(BuildState& s, const ConstructionPolicy& policy, Rng& rng);

struct TrialResult {
  std::int64_t cz_equivalents = 0;
  std::int64_t teleports = 0;
  bool truncated = false;
};

struct HistogramBin {
  double lo = 0;
  double hi = 0;
  std::int64_t count = 0;
};

struct SimulationOptions {
  std::int64_t max_steps = 1'000'000;  // per trial
  int threads = 0;                     // 0: hardware concurrency
};

struct CostReport {
  ConstructionPolicy policy;
  int num_logical_gates = 0;
  std::uint64_t master_seed = 0;
  std::vector<TrialResult> trials;
  // Statistics of per-trial CZ-equivalents divided by num_logical_gates; truncated
  // trials are included (their cost is a lower bound) and counted separately.
  double mean = 0;
  double stddev = 0;
  double stderr_mean = 0;
  std::int64_t truncated = 0;
  std::vector<HistogramBin> histogram;

  double cz_equivalents_per_logical_gate() const { return mean; }
  // Per-trial cost divided by num_logical_gates.
  double per_gate(const TrialResult& t) const;
};

// Monte Carlo over `trials` independent constructions of a two-qubit linked
// state carrying num_logical_gates gates. Trial i uses split_seed(master_seed, i).
CostReport simulate_build(int num_logical_gates, const ConstructionPolicy& policy, int trials,
                          std::uint64_t master_seed, const SimulationOptions& options = {});

nlohmann::json to_json(const CostReport& r, std::optional<double> reference);
// Header trial,cz_equivalents,teleports,truncated; one row per trial.
std::string to_csv(const CostReport& r);

struct DriftAnalysis {
  double drift = 0;             // expected completed gates per attempt, stationary regime
  double cost_per_gate = 0;     // 1 / drift, or infinity when drift <= 0
  std::optional<int> minimal_n; // smallest n_order with drift > 0 under the same inert/sequential
};

// Exact drift from the stationary distribution of the finite (free_a, free_b)
// Markov chain defined by next_phase / step_link_addition / step_gate.
DriftAnalysis drift_analysis(const ConstructionPolicy& policy, int max_n = 32);
double drift(const ConstructionPolicy& policy);

}  // namespace photonchain::cost
