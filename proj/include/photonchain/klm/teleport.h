// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <span>
#include <vector>

#include "photonchain/fock/measurement.h"
#include "photonchain/klm/ancilla.h"

namespace photonchain::klm {

enum class TeleportStatus { success, failure_measured, failure_vacuum };

const char* to_string(TeleportStatus s);

struct TeleportResult {
  TeleportStatus status = TeleportStatus::failure_vacuum;
  int detected = 0;       // photons counted over the n+1 measured modes
  int shift = -1;         // index in block_out holding the rail; -1 on failure
  double probability = 0; // probability of the observed pattern
  fock::Occupation pattern;
};

/// Dual-rail qubit: logical |1> is a photon in rail1.
struct DualRail {
  int rail0;
  int rail1;
};

// Single-rail teleportation of `input_mode` through the |t_n> modes laid out in
// block_in / block_out (both size n) that are already part of `state`.
// Measured modes are absorbed; on success the rail lives on
// block_out[shift] with its Fourier phase corrected.
struct RailTeleport {
  TeleportResult result;
  int output_mode = -1;
};

RailTeleport teleport_rail(FockState& state, int input_mode, std::span<const int> block_in,
                           std::span<const int> block_out, fock::OutcomeChooser& chooser);

// The two halves of teleport_rail, for callers that enumerate outcomes.
std::vector<int> rail_measured_modes(int input_mode, std::span<const int> block_in);
FockState rail_fourier(const FockState& state, int input_mode, std::span<const int> block_in);
RailTeleport finish_rail_teleport(FockState& state, int input_mode,
                                  std::span<const int> block_in,
                                  std::span<const int> block_out,
                                  const fock::CountOutcome& outcome);

struct TeleportOutput {
  TeleportResult result;
  FockState state;  // same modes as the input state
};

// Teleports rail1 of `q`. On success the state is returned unchanged (the
// teleported rail is moved back onto q.rail1); on failure the rail is measured.
TeleportOutput teleport_f(const FockState& state, DualRail q, const TeleportAncilla& ancilla,
                          fock::OutcomeChooser& chooser);
TeleportOutput teleport_f(const FockState& state, DualRail q, const TeleportAncilla& ancilla,
                          Rng& rng);

struct TeleportEnumeration {
  double success_probability = 0;
  double min_success_fidelity = 1;
};

// Sums every measurement branch for the input alpha|10> + beta|01>.
TeleportEnumeration enumerate_teleport(int n, fock::Complex alpha, fock::Complex beta,
                                       AncillaVariant variant = AncillaVariant::plain);

}  // namespace photonchain::klm
