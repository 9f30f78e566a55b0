// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "photonchain/klm/teleport.h"

namespace photonchain::klm {

// Mode layout of the Fock-level link-addition protocol. Photon a (previous
// node) has paths 1, 2; photon b (chain tail) has paths 3, 4 with V/H
// polarization; photon c (new node) has paths 5, 6 with V/H polarization.
// Path-major, polarization-minor.
namespace link_modes {
inline constexpr int a1 = 0, a2 = 1;
inline constexpr int b3V = 2, b3H = 3, b4V = 4, b4H = 5;
inline constexpr int c5V = 6, c5H = 7, c6V = 8, c6H = 9;
inline constexpr int kPhotonModes = 10;
}  // namespace link_modes

enum class LinkAdditionStatus { success, destroyed, recovered };

const char* to_string(LinkAdditionStatus s);

struct LinkAdditionOutput {
  LinkAdditionStatus status = LinkAdditionStatus::destroyed;
  int failed_step = 0;  // 0 none, 1 V-polarization teleport, 2 H-polarization teleport
  TeleportStatus raw = TeleportStatus::success;  // status of the failing teleport
  FockState state;      // over link_modes::kPhotonModes modes
};

// (|1>_a |3V>_b + |2>_a |3H>_b) / sqrt(2): the tail link before addition.
FockState link_addition_input();
// (|1>|V>_b + |2>|H>_b)(|3>_b |V>_c + |4>_b |H>_c)|5>_c / sqrt(2) after success.
FockState link_addition_target();

// Adds photon c to the chain tail with the combined link ancilla: one teleport per
// polarization of b. Vacuum failures are followed by a heralded local undo that
// either restores the input on a and b (recovered) or reports destroyed.
LinkAdditionOutput add_link_fock(const FockState& input, int n, fock::OutcomeChooser& chooser);

struct LinkAdditionStats {
  double success = 0;
  double destroyed = 0;
  double recovered = 0;
  double raw_failure_measured = 0;  // before the undo step
  double raw_failure_vacuum = 0;
  double min_success_fidelity = 1;
  double min_recovered_fidelity = 1;  // on photons a and b
};

LinkAdditionStats enumerate_link_addition(int n);

}  // namespace photonchain::klm
