// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/klm/teleport.h"

#include <numbers>
#include <numeric>

#include "photonchain/fock/mode_unitary.h"

namespace photonchain::klm {

using fock::Complex;
using fock::CountOutcome;

const char* to_string(TeleportStatus s) {
  switch (s) {
    case TeleportStatus::success: return "success";
    case TeleportStatus::failure_measured: return "failure_measured";
    case TeleportStatus::failure_vacuum: return "failure_vacuum";
  }
  return "?";
}

std::vector<int> rail_measured_modes(int input_mode, std::span<const int> block_in) {
  std::vector<int> modes{input_mode};
  modes.insert(modes.end(), block_in.begin(), block_in.end());
  return modes;
}

FockState rail_fourier(const FockState& state, int input_mode, std::span<const int> block_in) {
  auto modes = rail_measured_modes(input_mode, block_in);
  return fock::apply_unitary(state, fock::fourier(static_cast<int>(modes.size())), modes);
}

RailTeleport finish_rail_teleport(FockState& state, int input_mode,
                                  std::span<const int> block_in,
                                  std::span<const int> block_out,
                                  const CountOutcome& outcome) {
  const int n = static_cast<int>(block_in.size());
  auto modes = rail_measured_modes(input_mode, block_in);
  state.absorb(modes);

  RailTeleport out;
  TeleportResult& r = out.result;
  r.pattern = outcome.counts;
  r.probability = outcome.probability;
  r.detected = std::accumulate(outcome.counts.begin(), outcome.counts.end(), 0);
  if (r.detected == 0) {
    r.status = TeleportStatus::failure_vacuum;
  } else if (r.detected == n + 1) {
    r.status = TeleportStatus::failure_measured;
  } else {
    r.status = TeleportStatus::success;
    r.shift = r.detected - 1;
    out.output_mode = block_out[r.shift];
    int s = 0;
    for (int l = 0; l <= n; ++l) s += l * outcome.counts[l];
    double angle = 2 * std::numbers::pi * (s % (n + 1)) / (n + 1);
    state.apply_mode_phase(out.output_mode, std::polar(1.0, angle));
  }
  return out;
}

RailTeleport teleport_rail(FockState& state, int input_mode, std::span<const int> block_in,
                           std::span<const int> block_out, fock::OutcomeChooser& chooser) {
  if (block_in.size() != block_out.size() || block_in.empty()) {
    throw std::invalid_argument("teleport_rail: blocks must have equal nonzero size");
  }
  FockState f = rail_fourier(state, input_mode, block_in);
  auto m = fock::measure_counts(f, rail_measured_modes(input_mode, block_in), chooser);
  state = std::move(m.state);
  return finish_rail_teleport(state, input_mode, block_in, block_out, m.outcome);
}

TeleportOutput teleport_f(const FockState& state, DualRail q, const TeleportAncilla& ancilla,
                          fock::OutcomeChooser& chooser) {
  const int m = state.num_modes();
  const int n = ancilla.n;
  FockState full = state.tensor(ancilla.state);
  std::vector<int> in(n), out(n), all(2 * n);
  std::iota(in.begin(), in.end(), m);
  std::iota(out.begin(), out.end(), m + n);
  std::iota(all.begin(), all.end(), m);

  RailTeleport t = teleport_rail(full, q.rail1, in, out, chooser);
  if (t.result.status == TeleportStatus::success) {
    if (ancilla.variant == AncillaVariant::modified) {
      // |t~> adds (-1)^{k - x}; remove the x-dependent part.
      full.apply_mode_phase(t.output_mode, Complex(-1.0));
    }
    full.swap_modes(q.rail1, t.output_mode);
  }
  return {t.result, full.discard_modes(all)};
}

TeleportOutput teleport_f(const FockState& state, DualRail q, const TeleportAncilla& ancilla,
                          Rng& rng) {
  fock::RandomChooser chooser(rng);
  return teleport_f(state, q, ancilla, chooser);
}

TeleportEnumeration enumerate_teleport(int n, Complex alpha, Complex beta,
                                       AncillaVariant variant) {
  FockState input = FockState::from_terms(2, {{{1, 0}, alpha}, {{0, 1}, beta}});
  input.normalize();
  TeleportAncilla anc = prepare_tn(n, variant);
  TeleportEnumeration e;
  fock::explore_branches([&](fock::OutcomeChooser& chooser) {
    TeleportOutput t = teleport_f(input, {0, 1}, anc, chooser);
    if (t.result.status != TeleportStatus::success) return;
    e.success_probability += t.state.norm_tracking();
    e.min_success_fidelity = std::min(e.min_success_fidelity, fock::fidelity(t.state, input));
  });
  return e;
}

}  // namespace photonchain::klm
