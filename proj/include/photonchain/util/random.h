// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <random>

namespace photonchain {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) built from the top 53 bits, so the stream is the
// same on every standard library.
double uniform01(Rng& rng);

// splitmix64 of (master, index); used to give each trial its own stream.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

}  // namespace photonchain
