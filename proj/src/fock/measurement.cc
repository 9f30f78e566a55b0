// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/fock/measurement.h"

#include <cmath>
#include <map>
#include <string>

namespace photonchain::fock {

namespace {

Occupation sub_occupation(const Occupation& occ, std::span<const int> modes) {
  Occupation sub(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) sub[i] = occ[modes[i]];
  return sub;
}

void check_modes(const FockState& state, std::span<const int> modes) {
  std::vector<bool> seen(state.num_modes(), false);
  for (int m : modes) {
    if (m < 0 || m >= state.num_modes()) {
      throw std::out_of_range("measured mode " + std::to_string(m) + " out of range");
    }
    if (seen[m]) throw std::invalid_argument("measured mode listed twice");
    seen[m] = true;
  }
}

Measurement project(const FockState& state, std::span<const int> modes,
                    const CountOutcome& outcome) {
  FockState post(state.num_modes());
  std::vector<std::pair<Occupation, Complex>> kept;
  for (const auto& [occ, amp] : state.terms()) {
    if (sub_occupation(occ, modes) == outcome.counts) kept.emplace_back(occ, amp);
  }
  post = FockState::from_terms(state.num_modes(), kept);
  post.normalize();
  post.set_norm_tracking(state.norm_tracking() * outcome.probability);
  return {outcome, std::move(post)};
}

}  // namespace

std::vector<CountOutcome> outcome_distribution(const FockState& state,
                                               std::span<const int> modes) {
  check_modes(state, modes);
  std::map<Occupation, double> weight;
  double total = 0;
  for (const auto& [occ, amp] : state.terms()) {
    double w = std::norm(amp);
    weight[sub_occupation(occ, modes)] += w;
    total += w;
  }
  std::vector<CountOutcome> out;
  std::vector<int> ms(modes.begin(), modes.end());
  for (const auto& [counts, w] : weight) {
    if (w <= 0) continue;
    out.push_back({ms, counts, w / total});
  }
  return out;
}

std::size_t RandomChooser::choose(std::span<const CountOutcome> outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("no outcomes to choose from");
  double u = uniform01(rng_);
  double acc = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    acc += outcomes[i].probability;
    if (u < acc) return i;
  }
  return outcomes.size() - 1;
}

std::size_t ScriptedChooser::choose(std::span<const CountOutcome> outcomes) {
  if (next_ >= script_.size()) throw std::invalid_argument("outcome script exhausted");
  const Occupation& want = script_[next_++];
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].counts == want) return i;
  }
  throw std::invalid_argument("scripted outcome has zero probability");
}

namespace {

// Follows a fixed prefix of choice indices, then takes index 0 and records the
// alternatives as new prefixes.
class PrefixChooser : public OutcomeChooser {
 public:
  PrefixChooser(std::vector<std::size_t> prefix, std::vector<std::vector<std::size_t>>& pending)
      : path_(std::move(prefix)), pending_(pending) {}

  std::size_t choose(std::span<const CountOutcome> outcomes) override {
    if (depth_ < path_.size()) return path_[depth_++];
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
      auto alt = path_;
      alt.push_back(i);
      pending_.push_back(std::move(alt));
    }
    path_.push_back(0);
    ++depth_;
    return 0;
  }

 private:
  std::vector<std::size_t> path_;
  std::size_t depth_ = 0;
  std::vector<std::vector<std::size_t>>& pending_;
};

}  // namespace

void explore_branches(const std::function<void(OutcomeChooser&)>& protocol) {
  std::vector<std::vector<std::size_t>> pending{{}};
  while (!pending.empty()) {
    auto prefix = std::move(pending.back());
    pending.pop_back();
    PrefixChooser chooser(std::move(prefix), pending);
    protocol(chooser);
  }
}

Measurement measure_counts(const FockState& state, std::span<const int> modes,
                           OutcomeChooser& chooser) {
  auto dist = outcome_distribution(state, modes);
  std::size_t i = chooser.choose(dist);
  return project(state, modes, dist.at(i));
}

Measurement measure_counts(const FockState& state, std::span<const int> modes, Rng& rng) {
  RandomChooser chooser(rng);
  return measure_counts(state, modes, chooser);
}

Measurement measure_counts(const FockState& state, std::span<const int> modes,
                           const Occupation& outcome) {
  ScriptedChooser chooser({outcome});
  return measure_counts(state, modes, chooser);
}

}  // namespace photonchain::fock
