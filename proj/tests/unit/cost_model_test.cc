// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/cost/cost_model.h"

#include <cmath>
#include <map>

#include "gtest/gtest.h"

using namespace photonchain;
using namespace photonchain::cost;

namespace {

ConstructionPolicy policy(int n, int k) {
  ConstructionPolicy p;
  p.n_order = n;
  p.inert_links_per_gate = k;
  return p;
}

ConstructionPolicy perfect(int k) {
  ConstructionPolicy p = policy(3, k);
  p.basic_gate_prob = 1.0;
  return p;
}

}  // namespace

TEST(Policy, Probabilities) {
  EXPECT_DOUBLE_EQ(policy(3, 0).p(), 9.0 / 16.0);
  EXPECT_DOUBLE_EQ(policy(3, 0).q(), 0.75);
  EXPECT_DOUBLE_EQ(policy(4, 0).p(), 16.0 / 25.0);
  ConstructionPolicy o = policy(3, 0);
  o.basic_gate_prob = 0.25;
  EXPECT_DOUBLE_EQ(o.q(), 0.5);
  EXPECT_THROW(policy(0, 0).check(), std::invalid_argument);
  EXPECT_THROW(policy(2, -1).check(), std::invalid_argument);
  o.basic_gate_prob = 1.5;
  EXPECT_THROW(o.check(), std::invalid_argument);
}

TEST(Schedule, ExtendsShorterChainFirst) {
  auto p = policy(3, 1);
  EXPECT_EQ(next_phase({{0, 0}, 0}, p), Phase::link_a);
  EXPECT_EQ(next_phase({{1, 0}, 0}, p), Phase::link_b);
  EXPECT_EQ(next_phase({{1, 1}, 0}, p), Phase::link_a);
  EXPECT_EQ(next_phase({{2, 1}, 0}, p), Phase::link_b);
  EXPECT_EQ(next_phase({{0, 2}, 0}, p), Phase::link_a);
  EXPECT_EQ(next_phase({{2, 2}, 0}, p), Phase::gate);
}

TEST(Simulate, PerfectGatesCostExactlyTheMinimum) {
  for (int k = 0; k <= 3; ++k) {
    auto r = simulate_build(10, perfect(k), 50, 1, {.max_steps = 1000, .threads = 1});
    EXPECT_DOUBLE_EQ(r.mean, 2 * k + 3);
    EXPECT_DOUBLE_EQ(r.stddev, 0);
    EXPECT_EQ(r.truncated, 0);
    // Two teleports per successful attempt.
    for (const auto& t : r.trials) EXPECT_EQ(t.teleports, 2 * t.cz_equivalents);
  }
}

TEST(Steps, LinkBranchFrequencies) {
  auto p = policy(3, 0);
  Rng rng(8);
  std::map<LinkOutcome, int> seen;
  const int trials = 200000;
  for (int i = 0; i < trials; ++i) {
    BuildState s{{0, 0}, 0};
    ++seen[step_link_addition(s, 0, p, rng).outcome];
  }
  auto close = [&](LinkOutcome o, double expect) {
    double sigma = std::sqrt(expect * (1 - expect) / trials);
    EXPECT_NEAR(seen[o] / double(trials), expect, 5 * sigma);
  };
  close(LinkOutcome::success, 9.0 / 16);
  close(LinkOutcome::destructive, 7.0 / 32);
  close(LinkOutcome::neutral, 7.0 / 32);
}

TEST(Steps, DestructiveFailureEatsLinkOrGate) {
  auto p = policy(3, 1);
  p.basic_gate_prob = 1e-12;  // every attempt fails; half of them destructively
  Rng rng(3);
  // Free links available: one is lost.
  for (int i = 0; i < 50; ++i) {
    BuildState s{{2, 1}, 4};
    auto t = step_link_addition(s, 0, p, rng);
    if (t.outcome == LinkOutcome::destructive) {
      EXPECT_EQ(s.free_links[0], 1);
      EXPECT_EQ(s.completed_gates, 4);
      EXPECT_FALSE(t.gate_reverted);
    } else {
      EXPECT_EQ(s.free_links[0], 2);
    }
  }
  // Nothing free above the last gate: the gate is undone, inert links remain.
  int reverted = 0;
  for (int i = 0; i < 50; ++i) {
    BuildState s{{0, 0}, 4};
    auto t = step_link_addition(s, 0, p, rng);
    if (t.outcome != LinkOutcome::destructive) continue;
    ++reverted;
    EXPECT_TRUE(t.gate_reverted);
    EXPECT_EQ(s.completed_gates, 3);
    EXPECT_EQ(s.free_links[0], 1);
    EXPECT_EQ(s.free_links[1], 2);
  }
  EXPECT_GT(reverted, 0);
  // At level zero there is nothing to lose.
  BuildState s{{0, 0}, 0};
  for (int i = 0; i < 20; ++i) step_link_addition(s, 1, p, rng);
  EXPECT_EQ(s.free_links[1], 0);
  EXPECT_EQ(s.completed_gates, 0);
}

TEST(Steps, SequentialGateNeverBreaksBoth) {
  auto p = policy(2, 0);
  Rng rng(4);
  int first = 0, second = 0, ok = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    BuildState s{{1, 1}, 0};
    auto t = step_gate(s, p, rng);
    ASSERT_NE(t.outcome, GateOutcome::broke_both);
    if (t.outcome == GateOutcome::broke_first) {
      ++first;
      EXPECT_EQ(t.teleports, 1);
      EXPECT_EQ(s.free_links, (std::array<int, 2>{0, 1}));
    }
    if (t.outcome == GateOutcome::broke_second) ++second;
    if (t.outcome == GateOutcome::success) {
      ++ok;
      EXPECT_EQ(s.completed_gates, 1);
    }
  }
  EXPECT_NEAR(first / double(trials), 1.0 / 3, 0.01);
  EXPECT_NEAR(second / double(trials), 2.0 / 9, 0.01);
  EXPECT_NEAR(ok / double(trials), 4.0 / 9, 0.01);

  BuildState not_ready{{0, 1}, 0};
  EXPECT_THROW(step_gate(not_ready, p, rng), std::logic_error);
}

TEST(Steps, ParallelGateCanBreakBoth) {
  auto p = policy(2, 0);
  p.sequential_teleport = false;
  Rng rng(4);
  int both = 0;
  for (int i = 0; i < 20000; ++i) {
    BuildState s{{1, 1}, 0};
    both += step_gate(s, p, rng).outcome == GateOutcome::broke_both;
  }
  EXPECT_NEAR(both / 20000.0, 1.0 / 9, 0.01);
}

TEST(Simulate, ReportIsIndependentOfThreadCount) {
  auto p = policy(3, 1);
  auto r1 = simulate_build(20, p, 300, 42, {.max_steps = 1'000'000, .threads = 1});
  auto r4 = simulate_build(20, p, 300, 42, {.max_steps = 1'000'000, .threads = 4});
  EXPECT_EQ(to_json(r1, 23.0).dump(), to_json(r4, 23.0).dump());
  EXPECT_EQ(to_csv(r1), to_csv(r4));
  auto other = simulate_build(20, p, 300, 43, {.max_steps = 1'000'000, .threads = 1});
  EXPECT_NE(to_json(r1, 23.0).dump(), to_json(other, 23.0).dump());
}

TEST(Simulate, CostNeverBelowMinimum) {
  for (int k : {0, 1, 3}) {
    auto r = simulate_build(10, policy(4, k), 200, 7, {.max_steps = 1'000'000, .threads = 1});
    for (const auto& t : r.trials) EXPECT_GE(r.per_gate(t), 2 * k + 3);
  }
}

TEST(Simulate, StandardErrorShrinksWithTrials) {
  auto p = policy(4, 0);
  auto a = simulate_build(20, p, 2000, 9, {.max_steps = 1'000'000, .threads = 1});
  auto b = simulate_build(20, p, 8000, 9, {.max_steps = 1'000'000, .threads = 1});
  // Four times the trials halves the standard error.
  EXPECT_NEAR(b.stderr_mean / a.stderr_mean, 0.5, 0.05);
  EXPECT_NEAR(a.stderr_mean, a.stddev / std::sqrt(2000.0), 1e-12);
}

TEST(Simulate, StepCeilingTruncates) {
  // n=2 without inert links drifts backwards; most trials hit the ceiling.
  auto r = simulate_build(50, policy(2, 0), 200, 1, {.max_steps = 20000, .threads = 1});
  EXPECT_GT(r.truncated, 100);
  for (const auto& t : r.trials)
    if (t.truncated) EXPECT_EQ(t.cz_equivalents, 20000);
  // n=3 drifts forward and finishes well within the ceiling.
  auto ok = simulate_build(50, policy(3, 0), 200, 1, {.max_steps = 1'000'000, .threads = 1});
  EXPECT_EQ(ok.truncated, 0);
}

TEST(Simulate, RejectsBadArguments) {
  EXPECT_THROW(simulate_build(0, policy(3, 0), 10, 1), std::invalid_argument);
  EXPECT_THROW(simulate_build(10, policy(3, 0), 0, 1), std::invalid_argument);
  EXPECT_THROW(simulate_build(10, policy(0, 0), 10, 1), std::invalid_argument);
}

TEST(Report, JsonAndCsvShape) {
  auto r = simulate_build(5, policy(4, 0), 30, 11, {.max_steps = 1'000'000, .threads = 1});
  auto j = to_json(r, 15.0);
  for (const char* key : {"policy", "mean", "stderr", "histogram", "paper_reference", "trials",
                          "master_seed", "truncated", "num_logical_gates"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["paper_reference"], 15.0);
  EXPECT_TRUE(to_json(r, std::nullopt)["paper_reference"].is_null());
  std::int64_t total = 0;
  for (const auto& b : j["histogram"]) total += b["count"].get<std::int64_t>();
  EXPECT_EQ(total, 30);
  std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,cz_equivalents,teleports,truncated");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 31);
}

TEST(Drift, Thresholds) {
  // n=3 is the smallest order that drifts forward without inert links.
  EXPECT_LT(drift(policy(2, 0)), 0);
  EXPECT_GT(drift(policy(3, 0)), 0);
  EXPECT_EQ(drift_analysis(policy(2, 0)).minimal_n, 3);
  // With n=2, three inert links are needed.
  EXPECT_LT(drift(policy(2, 2)), 0);
  EXPECT_GT(drift(policy(2, 3)), 0);
  EXPECT_GT(drift(policy(2, 6)), 0);
}

TEST(Drift, PerfectGatesGiveOneGatePerMinimumCost) {
  for (int k = 0; k <= 2; ++k) EXPECT_NEAR(drift(perfect(k)), 1.0 / (2 * k + 3), 1e-12);
}

TEST(Drift, AgreesWithLongSimulation) {
  auto p = policy(4, 0);
  auto d = drift_analysis(p);
  auto r = simulate_build(400, p, 400, 12, {.max_steps = 10'000'000, .threads = 1});
  EXPECT_NEAR(r.mean, d.cost_per_gate, 0.02 * d.cost_per_gate);
}
