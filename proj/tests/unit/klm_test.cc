// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "photonchain/klm/ancilla.h"
#include "photonchain/klm/cz_gate.h"
#include "photonchain/klm/teleport.h"

using namespace photonchain;
using namespace photonchain::klm;
using fock::Complex;

TEST(Ancilla, TeleportResourceShape) {
  for (int n = 1; n <= 4; ++n) {
    for (auto variant : {AncillaVariant::plain, AncillaVariant::modified}) {
      auto anc = prepare_tn(n, variant);
      EXPECT_EQ(anc.state.num_modes(), 2 * n);
      EXPECT_EQ(anc.state.terms().size(), static_cast<size_t>(n + 1));
      EXPECT_NEAR(anc.state.norm_squared(), 1, 1e-12);
      EXPECT_EQ(anc.state.max_photons(), n);
      EXPECT_TRUE(anc.state.photon_number_definite());
    }
  }
  EXPECT_EQ(tn_term(3, 0), (fock::Occupation{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(tn_term(3, 2), (fock::Occupation{1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(tn_term(3, 3), (fock::Occupation{1, 1, 1, 0, 0, 0}));
  EXPECT_THROW(prepare_tn(0), std::invalid_argument);
}

TEST(Ancilla, CzAndLinkResourcesAreNormalized) {
  for (int n = 1; n <= 3; ++n) {
    auto cz = prepare_cz_ancilla(n);
    EXPECT_EQ(cz.num_modes(), 4 * n);
    EXPECT_NEAR(cz.norm_squared(), 1, 1e-12);
    EXPECT_EQ(cz.max_photons(), 2 * n);
    auto link = prepare_link_ancilla(n);
    EXPECT_EQ(link.state.num_modes(), 2 + 4 * n);
    EXPECT_NEAR(link.state.norm_squared(), 1, 1e-12);
    EXPECT_EQ(link.state.max_photons(), 2 * n + 1);
  }
}

TEST(SuccessProbability, ExactFractions) {
  EXPECT_EQ(success_probability(1).teleport, (Fraction{1, 2}));
  EXPECT_EQ(success_probability(3).teleport, (Fraction{3, 4}));
  EXPECT_EQ(success_probability(3).gate, (Fraction{9, 16}));
  EXPECT_EQ(success_probability(4).gate, (Fraction{16, 25}));
  EXPECT_THROW(success_probability(0), std::invalid_argument);
}

TEST(Teleport, EnumeratedSuccessMatchesOrder) {
  const double r = 1 / std::sqrt(2.0);
  const std::pair<Complex, Complex> inputs[] = {
      {1, 0}, {0, 1}, {r, r}, {r, -r}, {r, Complex(0, r)},
      {0.6, 0.8}, {Complex(0.3, 0.4), Complex(0, -std::sqrt(0.75))}, {0.8, Complex(-0.36, 0.48)}};
  for (int n = 1; n <= 4; ++n) {
    for (auto variant : {AncillaVariant::plain, AncillaVariant::modified}) {
      for (auto [alpha, beta] : inputs) {
        auto e = enumerate_teleport(n, alpha, beta, variant);
        EXPECT_NEAR(e.success_probability, n / (n + 1.0), 1e-12);
        EXPECT_NEAR(e.min_success_fidelity, 1, 1e-12);
      }
    }
  }
}

TEST(Teleport, FailureSplitDependsOnInput) {
  // Vacuum failure needs the teleported rail empty, measured failure needs it full.
  const Complex alpha(0.6), beta(0, 0.8);
  for (int n = 1; n <= 3; ++n) {
    FockState input = FockState::from_terms(2, {{{1, 0}, alpha}, {{0, 1}, beta}});
    auto anc = prepare_tn(n);
    double vac = 0, meas = 0, ok = 0;
    fock::explore_branches([&](fock::OutcomeChooser& chooser) {
      auto t = teleport_f(input, {0, 1}, anc, chooser);
      double p = t.state.norm_tracking();
      switch (t.result.status) {
        case TeleportStatus::success:
          ok += p;
          EXPECT_EQ(t.result.shift, t.result.detected - 1);
          break;
        case TeleportStatus::failure_vacuum:
          vac += p;
          EXPECT_EQ(t.result.detected, 0);
          // Rail measured empty: the qubit collapses to logical 0.
          EXPECT_NEAR(std::norm(t.state.amplitude({1, 0})), 1, 1e-12);
          break;
        case TeleportStatus::failure_measured:
          meas += p;
          EXPECT_EQ(t.result.detected, n + 1);
          break;
      }
    });
    EXPECT_NEAR(vac, std::norm(alpha) / (n + 1), 1e-12);
    EXPECT_NEAR(meas, std::norm(beta) / (n + 1), 1e-12);
    EXPECT_NEAR(ok + vac + meas, 1, 1e-12);
  }
}

TEST(Teleport, SampledRunIsReproducible) {
  FockState input = FockState::from_terms(2, {{{1, 0}, 0.6}, {{0, 1}, 0.8}});
  auto anc = prepare_tn(2);
  Rng r1(99), r2(99);
  for (int i = 0; i < 20; ++i) {
    auto a = teleport_f(input, {0, 1}, anc, r1);
    auto b = teleport_f(input, {0, 1}, anc, r2);
    EXPECT_EQ(a.result.pattern, b.result.pattern);
    EXPECT_EQ(a.result.status, b.result.status);
  }
}

TEST(CzGate, ProcessMatchesIdealOnSuccess) {
  for (int n = 1; n <= 3; ++n) {
    auto check = enumerate_cz_process(n);
    EXPECT_NEAR(check.success_probability, success_probability(n).gate.value(), 1e-12) << n;
    EXPECT_LT(check.max_operator_deviation, 1e-8) << n;
    EXPECT_GT(check.success_branches, 0);
  }
  EXPECT_NEAR(enumerate_cz_process(3).success_probability, 9.0 / 16.0, 1e-12);
}

TEST(CzGate, ParallelModeHasSameSuccessProbability) {
  auto check = enumerate_cz_process(2, false);
  EXPECT_NEAR(check.success_probability, 4.0 / 9.0, 1e-12);
  EXPECT_LT(check.max_operator_deviation, 1e-8);
}

TEST(CzGate, SequentialModeNeverMeasuresBothQubits) {
  // |+>|+> in dual rail: modes (0,1) qubit A, (2,3) qubit B.
  FockState input = FockState::from_terms(
      4, {{{1, 0, 1, 0}, 0.5}, {{1, 0, 0, 1}, 0.5}, {{0, 1, 1, 0}, 0.5}, {{0, 1, 0, 1}, 0.5}});
  double first_fail = 0, second_fail = 0;
  fock::explore_branches([&](fock::OutcomeChooser& chooser) {
    auto out = cz_klm(input, {0, 1}, {2, 3}, 2, true, chooser);
    double p = out.state.norm_tracking();
    if (out.first.status != TeleportStatus::success) {
      EXPECT_FALSE(out.second.has_value());
      first_fail += p;
      // B was never touched.
      EXPECT_EQ(out.state.num_modes(), 4);
    } else if (out.second->status != TeleportStatus::success) {
      second_fail += p;
    }
  });
  const double q = 2.0 / 3.0;
  EXPECT_NEAR(first_fail, 1 - q, 1e-12);
  EXPECT_NEAR(second_fail, q * (1 - q), 1e-12);
}

TEST(CzGate, ParallelModeCanMeasureBoth) {
  FockState input = FockState::basis({0, 1, 0, 1});
  double both = 0;
  fock::explore_branches([&](fock::OutcomeChooser& chooser) {
    auto out = cz_klm(input, {0, 1}, {2, 3}, 1, false, chooser);
    ASSERT_TRUE(out.second.has_value());
    if (out.first.status != TeleportStatus::success &&
        out.second->status != TeleportStatus::success)
      both += out.state.norm_tracking();
  });
  EXPECT_NEAR(both, 0.25, 1e-12);
}

TEST(CzGate, RespectsPhotonBudget) {
  FockState input = FockState::basis({0, 1, 0, 1});
  Rng rng(1);
  // 2 data photons + 2n ancilla photons must fit in 12.
  EXPECT_THROW(cz_klm(input, {0, 1}, {2, 3}, 6, true, rng), fock::PhotonBudgetExceeded);
}
