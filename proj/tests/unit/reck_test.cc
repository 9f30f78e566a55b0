// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/fock/reck.h"

#include <random>

#include "gtest/gtest.h"
#include "support/oracle.h"

using namespace photonchain::fock;

TEST(Reck, IdentityNeedsNoRotations) {
  auto r = reck_decompose(ModeUnitary::identity(5));
  EXPECT_TRUE(r.rotations.empty());
  EXPECT_TRUE(r.compose().isApprox(Eigen::MatrixXcd::Identity(5, 5), 1e-12));
}

TEST(Reck, TwoModeInputIsItsOwnRotation) {
  auto bs = beam_splitter(0.4, 1.1);
  auto r = reck_decompose(bs);
  ASSERT_EQ(r.rotations.size(), 1u);
  EXPECT_LT((r.compose() - bs.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Reck, RotationsAreAdjacentTwoModeUnitaries) {
  std::mt19937_64 rng(3);
  auto r = reck_decompose(ModeUnitary(oracle::random_unitary(5, rng)));
  EXPECT_LE(r.rotations.size(), 10u);
  for (const auto& rot : r.rotations) {
    EXPECT_EQ(rot.mode_b, rot.mode_a + 1);
    EXPECT_TRUE(is_unitary(rot.matrix, 1e-10));
  }
  for (Complex ph : r.phases) EXPECT_NEAR(std::abs(ph), 1, 1e-12);
}

TEST(Reck, ReconstructsRandomUnitaries) {
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    for (int d : {3, 4, 6}) {
      Eigen::MatrixXcd u = oracle::random_unitary(d, rng);
      auto r = reck_decompose(u);
      EXPECT_EQ(r.dim, d);
      EXPECT_LT((r.compose() - u).cwiseAbs().maxCoeff(), 1e-8) << "seed " << seed << " d " << d;
    }
  }
}

TEST(Reck, RejectsNonUnitary) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
  m(0, 2) = 0.5;
  EXPECT_THROW(reck_decompose(m), std::invalid_argument);
}
