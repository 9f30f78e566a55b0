// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "photonchain/fock/fock_state.h"
#include "photonchain/util/random.h"

namespace photonchain::fock {

struct CountOutcome {
  std::vector<int> measured_modes;
  Occupation counts;
  double probability = 0.0;
};

// Nonzero-probability count patterns on `modes`, in lexicographic order of the
// pattern. Probabilities are relative to the state's norm and sum to 1.
std::vector<CountOutcome> outcome_distribution(const FockState& state,
                                               std::span<const int> modes);

/// Picks one outcome from a distribution. Protocols with several
/// measurements take a chooser so callers can sample, script or enumerate.
class OutcomeChooser {
 public:
  virtual ~OutcomeChooser() = default;
  virtual std::size_t choose(std::span<const CountOutcome> outcomes) = 0;
};

class RandomChooser : public OutcomeChooser {
 public:
  explicit RandomChooser(Rng& rng) : rng_(rng) {}
  std::size_t choose(std::span<const CountOutcome> outcomes) override;

 private:
  Rng& rng_;
};

// Returns the scripted count patterns in order. Throws std::invalid_argument if
// a pattern is absent from the distribution (zero probability) or the script
// runs out.
class ScriptedChooser : public OutcomeChooser {
 public:
  explicit ScriptedChooser(std::vector<Occupation> script) : script_(std::move(script)) {}
  std::size_t choose(std::span<const CountOutcome> outcomes) override;
  std::size_t consumed() const { return next_; }

 private:
  std::vector<Occupation> script_;
  std::size_t next_ = 0;
};

// Runs `protocol` once for every measurement branch (depth-first). Branch
// probability is whatever the protocol reads from its final norm_tracking().
void explore_branches(const std::function<void(OutcomeChooser&)>& protocol);

struct Measurement {
  CountOutcome outcome;
  FockState state;  // renormalized projection; norm_tracking scaled by probability
};

Measurement measure_counts(const FockState& state, std::span<const int> modes,
                           OutcomeChooser& chooser);
Measurement measure_counts(const FockState& state, std::span<const int> modes, Rng& rng);
Measurement measure_counts(const FockState& state, std::span<const int> modes,
                           const Occupation& outcome);

}  // namespace photonchain::fock
