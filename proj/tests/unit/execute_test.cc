// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/linked/execute.h"

#include <random>

#include "gtest/gtest.h"
#include "photonchain/circuit/compiler.h"
#include "support/oracle.h"

using namespace photonchain;
using namespace photonchain::linked;
using circuit::Circuit;
using circuit::CompileOptions;

namespace {

std::vector<QubitInput> random_inputs(int n, std::mt19937_64& rng) {
  std::vector<QubitInput> in;
  for (int i = 0; i < n; ++i) in.push_back(oracle::random_qubit(rng));
  return in;
}

double run_fidelity(const Circuit& c, const CompileOptions& opt, uint64_t seed,
                    const ExecuteOptions& exec = {}) {
  std::mt19937_64 in_rng(seed);
  auto inputs = random_inputs(c.num_qubits, in_rng);
  Rng rng(seed);
  RandomSelector sel(rng);
  auto r = execute(circuit::compile(c, opt), inputs, sel, exec);
  Eigen::VectorXcd expect = oracle::circuit_unitary(c) * oracle::product_state(inputs);
  return oracle::fidelity(expect, r.output);
}

}  // namespace

TEST(Execute, ReferenceCircuitBothModes) {
  Circuit c = circuit::parse("qubits 3\ncz 0 1\ncz 0 2\ncz 0 1");
  for (auto mode : {ScheduleMode::full_build, ScheduleMode::eager}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      CompileOptions opt;
      opt.mode = mode;
      EXPECT_NEAR(run_fidelity(c, opt, seed), 1, 1e-9) << "seed " << seed;
    }
  }
}

TEST(Execute, RandomCircuitsMatchOracle) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> kind(0, 7);
  std::uniform_real_distribution<double> angle(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int q = 2 + trial % 2;
    std::uniform_int_distribution<int> pick(0, q - 1);
    Circuit c{q, {}};
    int czs = 0;
    while (czs < 3) {
      int k = kind(rng);
      if (k >= 6) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        c.gates.push_back(circuit::CzGate{a, b});
        ++czs;
      } else {
        auto gk = static_cast<GateKind>(k);
        c.gates.push_back(circuit::LocalGate{pick(rng), {gk, gk == GateKind::rz ? angle(rng) : 0}});
      }
    }
    // Inert links only with eager schedules; full-build would pass 24 live qubits.
    const bool eager = trial % 3 != 0;
    CompileOptions opt{eager ? trial % 2 : 0, 3, eager ? ScheduleMode::eager : ScheduleMode::full_build, trial % 2};
    EXPECT_NEAR(run_fidelity(c, opt, trial), 1, 1e-9) << circuit::render(c);
  }
}

TEST(Execute, IdentityCircuitReturnsInput) {
  Circuit c = circuit::parse("qubits 2");
  std::vector<QubitInput> in = {QubitInput{0.6, 0.8}, QubitInput{Complex(0, 1), 0}};
  ScriptedSelector sel({});
  auto r = execute(circuit::compile(c), in, sel);
  EXPECT_TRUE(r.log.empty());
  EXPECT_NEAR(std::abs(r.output[0]), 0.6, 1e-12);
  EXPECT_NEAR(std::abs(r.output[1]), 0.8, 1e-12);
}

TEST(Execute, EveryOutcomeBranchIsCorrected) {
  // One CZ on two single-link chains: the four Bell outcomes of each teleport.
  Circuit c = circuit::parse("qubits 2\nh 0\ncz 0 1\nh 1");
  std::vector<QubitInput> in = {QubitInput{0.6, 0.8}, QubitInput{Complex(0.28, 0.96), 0.3}};
  Eigen::VectorXcd expect = oracle::circuit_unitary(c) * oracle::product_state(in);
  for (int mask = 0; mask < 16; ++mask) {
    ScriptedSelector sel({mask & 1, mask >> 1 & 1, mask >> 2 & 1, mask >> 3 & 1});
    auto r = execute(circuit::compile(c), in, sel);
    ASSERT_EQ(r.log.size(), 2u);
    EXPECT_NEAR(oracle::fidelity(expect, r.output), 1, 1e-12) << mask;
  }
}

TEST(Execute, LogFormat) {
  Circuit c = circuit::parse("qubits 2\ncz 0 1");
  ScriptedSelector sel({1, 0, 0, 1});
  auto r = execute(circuit::compile(c), {QubitInput{1, 0}, QubitInput{1, 1}}, sel);
  ASSERT_EQ(r.log.size(), 2u);
  EXPECT_EQ(to_json(r.log[0]).dump(), R"({"node":[0,0],"outcome":[1,0],"step":0})");
  EXPECT_EQ(to_json(r.log[1]).dump(), R"({"node":[1,0],"outcome":[0,1],"step":1})");
  EXPECT_GE(r.peak_live_qubits, 4);
}

TEST(Execute, RejectsInconsistentBlueprint) {
  auto b = circuit::compile(circuit::parse("qubits 2\ncz 0 1"));
  b.gate_edges[0].link_a = 3;
  Rng rng(1);
  RandomSelector sel(rng);
  EXPECT_THROW(execute(b, {QubitInput{1, 0}, QubitInput{1, 0}}, sel), std::invalid_argument);
  auto good = circuit::compile(circuit::parse("qubits 2\ncz 0 1"));
  EXPECT_THROW(execute(good, {QubitInput{1, 0}}, sel), std::invalid_argument);
}

TEST(Execute, QuantumInputInjection) {
  Circuit c = circuit::parse("qubits 3\nh 0\ncz 0 1\ncz 1 2\nt 2");
  ExecuteOptions exec;
  exec.quantum_input = {true, false, true};
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_NEAR(run_fidelity(c, CompileOptions{}, seed, exec), 1, 1e-9);
  }
}

TEST(Execute, EagerModeUsesFewerQubits) {
  Circuit c = circuit::parse("qubits 2\ncz 0 1\ncz 0 1\ncz 0 1\ncz 0 1\ncz 0 1");
  auto inputs = std::vector<QubitInput>{QubitInput{1, 1}, QubitInput{1, 0}};
  Rng r1(5), r2(5);
  RandomSelector s1(r1), s2(r2);
  CompileOptions full, eager;
  eager.mode = ScheduleMode::eager;
  int peak_full = execute(circuit::compile(c, full), inputs, s1).peak_live_qubits;
  int peak_eager = execute(circuit::compile(c, eager), inputs, s2).peak_live_qubits;
  EXPECT_LT(peak_eager, peak_full);
}
