// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/klm/link_addition.h"

#include "gtest/gtest.h"

using namespace photonchain;
using namespace photonchain::klm;

TEST(LinkAddition, InputAndTargetStates) {
  auto in = link_addition_input();
  auto target = link_addition_target();
  EXPECT_EQ(in.num_modes(), link_modes::kPhotonModes);
  EXPECT_NEAR(in.norm_squared(), 1, 1e-12);
  EXPECT_NEAR(target.norm_squared(), 1, 1e-12);
  EXPECT_EQ(target.terms().size(), 4u);
  EXPECT_NEAR(std::abs(in.inner(target)), 0, 1e-12);
}

TEST(LinkAddition, RejectsWrongModeCount) {
  fock::ScriptedChooser chooser({});
  EXPECT_THROW(add_link_fock(FockState(4), 1, chooser), std::invalid_argument);
}

class LinkAdditionOrder : public ::testing::TestWithParam<int> {};

TEST_P(LinkAdditionOrder, OutcomeProbabilities) {
  const int n = GetParam();
  const double p = double(n * n) / ((n + 1) * (n + 1));
  auto st = enumerate_link_addition(n);
  EXPECT_NEAR(st.success, p, 1e-12);
  EXPECT_NEAR(st.destroyed, (1 - p) / 2, 1e-12);
  EXPECT_NEAR(st.recovered, (1 - p) / 2, 1e-12);
  // Before the undo step failures split 1:3 between measured and vacuum.
  EXPECT_NEAR(st.raw_failure_measured, (1 - p) / 4, 1e-12);
  EXPECT_NEAR(st.raw_failure_vacuum, 3 * (1 - p) / 4, 1e-12);
  EXPECT_NEAR(st.min_success_fidelity, 1, 1e-10);
  EXPECT_NEAR(st.min_recovered_fidelity, 1, 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Orders, LinkAdditionOrder, ::testing::Values(1, 2, 3));

TEST(LinkAddition, SampledOutcomesCarryValidStates) {
  Rng rng(17);
  fock::RandomChooser chooser(rng);
  const auto target = link_addition_target();
  int seen[3] = {0, 0, 0};
  for (int i = 0; i < 60; ++i) {
    auto r = add_link_fock(link_addition_input(), 1, chooser);
    ++seen[static_cast<int>(r.status)];
    EXPECT_EQ(r.state.num_modes(), link_modes::kPhotonModes);
    EXPECT_NEAR(r.state.norm_squared(), 1, 1e-9);
    if (r.status == LinkAdditionStatus::success) {
      EXPECT_EQ(r.failed_step, 0);
      EXPECT_NEAR(fock::fidelity(r.state, target), 1, 1e-10);
    } else {
      EXPECT_NE(r.failed_step, 0);
    }
  }
  for (int c : seen) EXPECT_GT(c, 0);
}
