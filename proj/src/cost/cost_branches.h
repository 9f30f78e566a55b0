// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstddef>

#include "photonchain/cost/cost_model.h"

namespace photonchain::cost::detail {

// One probabilistic outcome of a construction attempt.
struct Branch {
  double probability;
  BuildState next;
  LinkTransition link;
  GateTransition gate;
};

struct BranchList {
  std::array<Branch, 5> items;
  std::size_t size = 0;
  const Branch* begin() const { return items.data(); }
  const Branch* end() const { return items.data() + size; }
};

BranchList link_branches(const BuildState& s, int chain, const ConstructionPolicy& policy);
BranchList gate_branches(const BuildState& s, const ConstructionPolicy& policy);
const Branch& sample(const BranchList& branches, Rng& rng);

}  // namespace photonchain::cost::detail
