// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>

#include "photonchain/klm/teleport.h"

namespace photonchain::klm {

enum class GateStatus { success, failure };

struct CzOutput {
  GateStatus status = GateStatus::failure;
  TeleportResult first;
  std::optional<TeleportResult> second;  // absent when a sequential gate stops early
  FockState state;
};

// Probabilistic CZ on two dual-rail qubits via two teleports sharing a
// (-1)^{ij}-entangled ancilla. With `sequential`, the second teleport only runs
// if the first succeeded, so a failure destroys at most one qubit. A qubit whose
// teleport succeeded while the other failed is left as if the CZ acted and the
// other qubit was measured in Z.
CzOutput cz_klm(const FockState& state, DualRail a, DualRail b, int n, bool sequential,
                fock::OutcomeChooser& chooser);
CzOutput cz_klm(const FockState& state, DualRail a, DualRail b, int n, bool sequential,
                Rng& rng);

struct Fraction {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Fraction&) const = default;
};

struct SuccessProbabilities {
  Fraction teleport;  // n/(n+1)
  Fraction gate;      // n^2/(n+1)^2
};

SuccessProbabilities success_probability(int n);

struct CzProcessCheck {
  double success_probability = 0;
  // Over success branches: max |M - e^{i phi} CZ| entry-wise, where M is the
  // 4x4 operator read off a Choi state and phi aligns M(0,0).
  double max_operator_deviation = 0;
  long long success_branches = 0;
};

// Runs the gate on a Choi state (two reference qubits maximally entangled with
// the inputs) and enumerates every measurement branch.
CzProcessCheck enumerate_cz_process(int n, bool sequential = true);

}  // namespace photonchain::klm
