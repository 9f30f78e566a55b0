// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "photonchain/circuit/circuit.h"
#include "photonchain/linked/blueprint.h"
#include "photonchain/linked/execute.h"

namespace photonchain::circuit {

struct CompileOptions {
  int inert_links_per_gate = 0;
  int n_order = 3;
  linked::ScheduleMode mode = linked::ScheduleMode::full_build;
  // Eager mode only: how many gates construction runs ahead of teleportation.
  int safety_margin = 0;
};

// Per CZ (in circuit order) each participating chain gets inert_links_per_gate
// inert links and one active link; the gate edge joins the two new active
// links right after they are built. Single-qubit gates become local ops on the
// node their qubit occupies at that point of the circuit.
linked::LinkedBlueprint compile(const Circuit& c, const CompileOptions& options = {});

// linked::validate plus a check that the blueprint follows `options`' policy.
std::vector<std::string> validate(const linked::LinkedBlueprint& b, const CompileOptions& options);

// Dense state-vector simulation of the circuit on a product input; bit q of the
// index is qubit q.
std::vector<linked::Complex> simulate(const Circuit& c, const std::vector<linked::QubitInput>& inputs);

}  // namespace photonchain::circuit
