// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <vector>

#include "json.hpp"
#include "photonchain/linked/blueprint.h"
#include "photonchain/linked/linked_state.h"

namespace photonchain::linked {

using QubitInput = std::array<Complex, 2>;

struct OutcomeLogEntry {
  int step = 0;
  NodeRef node;
  BellOutcome outcome;
};

// {"step":i,"node":[chain,idx],"outcome":[b0,b1]}
nlohmann::json to_json(const OutcomeLogEntry& e);

struct ExecuteOptions {
  // Chains whose input arrives as an external qubit injected by teleportation
  // instead of being prepared on the first photon.
  std::vector<bool> quantum_input;
};

struct ExecuteResult {
  // Amplitudes over the logical qubits; bit q of the index is chain q.
  std::vector<Complex> output;
  std::vector<OutcomeLogEntry> log;
  int peak_live_qubits = 0;
};

// Runs the blueprint's schedule with ideal links: builds links, applies gate
// edges, teleports the data along each chain and applies local ops on the node
// holding the data. Throws std::invalid_argument for an inconsistent blueprint.
ExecuteResult execute(const LinkedBlueprint& blueprint, const std::vector<QubitInput>& inputs,
                      OutcomeSelector& selector, const ExecuteOptions& options = {});

}  // namespace photonchain::linked
