// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/klm/link_addition.h"

#include <cmath>
#include <numbers>
#include <numeric>

#include "photonchain/fock/mode_unitary.h"

namespace photonchain::klm {

using fock::Complex;
using fock::Occupation;
namespace lm = link_modes;

const char* to_string(LinkAdditionStatus s) {
  switch (s) {
    case LinkAdditionStatus::success: return "success";
    case LinkAdditionStatus::destroyed: return "destroyed";
    case LinkAdditionStatus::recovered: return "recovered";
  }
  return "?";
}

namespace {

Occupation photon_occ(std::initializer_list<int> modes) {
  Occupation occ(lm::kPhotonModes, 0);
  for (int m : modes) occ[m] = 1;
  return occ;
}

// a3 -> (a3 + a4)/sqrt2, a4 -> (a4 - a3)/sqrt2.
const fock::ModeUnitary& splitter() {
  static const fock::ModeUnitary u = fock::beam_splitter(std::numbers::pi / 4, std::numbers::pi);
  return u;
}

void split(FockState& s, int m1, int m2) {
  const int modes[] = {m1, m2};
  s = fock::apply_unitary(s, splitter(), modes);
}

void unsplit(FockState& s, int m1, int m2) {
  const int modes[] = {m1, m2};
  s = fock::apply_unitary(s, splitter().adjoint(), modes);
}

Complex parity(int k) { return k % 2 ? Complex(-1.0) : Complex(1.0); }

}  // namespace

FockState link_addition_input() {
  const double h = 1 / std::sqrt(2.0);
  return FockState::from_terms(lm::kPhotonModes, {{photon_occ({lm::a1, lm::b3V}), h},
                                                  {photon_occ({lm::a2, lm::b3H}), h}});
}

FockState link_addition_target() {
  return FockState::from_terms(lm::kPhotonModes, {{photon_occ({lm::a1, lm::b3V, lm::c5V}), 0.5},
                                                  {photon_occ({lm::a1, lm::b4V, lm::c5H}), 0.5},
                                                  {photon_occ({lm::a2, lm::b3H, lm::c5V}), 0.5},
                                                  {photon_occ({lm::a2, lm::b4H, lm::c5H}), 0.5}});
}

LinkAdditionOutput add_link_fock(const FockState& input, int n, fock::OutcomeChooser& chooser) {
  if (input.num_modes() != lm::kPhotonModes) {
    throw std::invalid_argument("add_link_fock: input must cover the 10 photon modes");
  }
  // Place the ancilla's c5/c6 modes on c5V/c6V; the blocks follow the photon modes.
  const LinkAncilla anc = prepare_link_ancilla(n);
  FockState anc_placed(lm::kPhotonModes - 6 + 4 * n);  // c modes (4) + blocks
  {
    std::vector<std::pair<Occupation, Complex>> terms;
    for (const auto& [occ, amp] : anc.state.terms()) {
      Occupation o{occ[0], 0, occ[1], 0};
      o.insert(o.end(), occ.begin() + 2, occ.end());
      terms.emplace_back(o, amp);
    }
    anc_placed = FockState::from_terms(4 + 4 * n, terms);
  }
  // input is over 10 modes with c empty; drop its c modes before the tensor product.
  const int c_modes[] = {lm::c5V, lm::c5H, lm::c6V, lm::c6H};
  FockState s = input.discard_modes(c_modes).tensor(anc_placed);

  const int base = lm::kPhotonModes;
  std::vector<int> in1(n), out1(n), in2(n), out2(n), ancilla(4 * n);
  std::iota(in1.begin(), in1.end(), base);
  std::iota(out1.begin(), out1.end(), base + n);
  std::iota(in2.begin(), in2.end(), base + 2 * n);
  std::iota(out2.begin(), out2.end(), base + 3 * n);
  std::iota(ancilla.begin(), ancilla.end(), base);

  LinkAdditionOutput out;
  // On failure photon c and the ancilla are dropped (c counted first if it may
  // still be entangled with a and b) and c's modes come back as vacuum.
  auto finish = [&](LinkAdditionStatus status, int step, TeleportStatus raw) {
    out.status = status;
    out.failed_step = step;
    out.raw = raw;
    if (status == LinkAdditionStatus::success) {
      out.state = s.discard_modes(ancilla);
      return out;
    }
    std::vector<int> rest(c_modes, c_modes + 4);
    rest.insert(rest.end(), ancilla.begin(), ancilla.end());
    if (status == LinkAdditionStatus::destroyed) {
      s = fock::measure_counts(s, rest, chooser).state;
    }
    out.state = s.discard_modes(rest).tensor(FockState(4));
    return out;
  };

  split(s, lm::b3V, lm::b4V);
  split(s, lm::b3H, lm::b4H);

  // V polarization of b.
  RailTeleport t1 = teleport_rail(s, lm::b4V, in1, out1, chooser);
  if (t1.result.status == TeleportStatus::failure_measured) {
    return finish(LinkAdditionStatus::destroyed, 1, t1.result.status);
  }
  if (t1.result.status == TeleportStatus::failure_vacuum) {
    // Undo: a photon in 4H means b went the wrong way; none restores the input.
    const int probe[] = {lm::b4H};
    auto m = fock::measure_counts(s, probe, chooser);
    s = std::move(m.state);
    s.absorb(probe);
    auto status = m.outcome.counts[0] ? LinkAdditionStatus::destroyed
                                      : LinkAdditionStatus::recovered;
    return finish(status, 1, t1.result.status);
  }
  s.apply_mode_phase(lm::c5V, parity(t1.result.detected));
  s.swap_modes(lm::b4V, t1.output_mode);
  split(s, lm::b3V, lm::b4V);

  // H polarization of b.
  RailTeleport t2 = teleport_rail(s, lm::b4H, in2, out2, chooser);
  if (t2.result.status == TeleportStatus::failure_measured) {
    return finish(LinkAdditionStatus::destroyed, 2, t2.result.status);
  }
  if (t2.result.status == TeleportStatus::failure_vacuum) {
    // Undo: measure c in the X basis; "+" (photon in 6) lets b's V part be recombined.
    split(s, lm::c5V, lm::c6V);
    const int probe[] = {lm::c5V, lm::c6V};
    auto m = fock::measure_counts(s, probe, chooser);
    s = std::move(m.state);
    s.absorb(probe);
    if (m.outcome.counts[1] == 1) {
      unsplit(s, lm::b3V, lm::b4V);
      return finish(LinkAdditionStatus::recovered, 2, t2.result.status);
    }
    return finish(LinkAdditionStatus::destroyed, 2, t2.result.status);
  }
  s.apply_mode_phase(lm::c5V, parity(t2.result.detected));
  s.swap_modes(lm::b4H, t2.output_mode);
  split(s, lm::b3H, lm::b4H);

  // Path 6 of c becomes polarization H on path 5.
  s.swap_modes(lm::c6V, lm::c5H);
  return finish(LinkAdditionStatus::success, 0, TeleportStatus::success);
}

LinkAdditionStats enumerate_link_addition(int n) {
  const FockState input = link_addition_input();
  const FockState target = link_addition_target();
  const int ab_modes[] = {lm::a1, lm::a2, lm::b3V, lm::b3H, lm::b4V, lm::b4H};
  const int c_modes[] = {lm::c5V, lm::c5H, lm::c6V, lm::c6H};
  const FockState input_ab = input.discard_modes(c_modes);

  LinkAdditionStats st;
  fock::explore_branches([&](fock::OutcomeChooser& chooser) {
    LinkAdditionOutput r = add_link_fock(input, n, chooser);
    const double p = r.state.norm_tracking();
    if (r.raw == TeleportStatus::failure_measured) st.raw_failure_measured += p;
    if (r.raw == TeleportStatus::failure_vacuum) st.raw_failure_vacuum += p;
    switch (r.status) {
      case LinkAdditionStatus::success:
        st.success += p;
        st.min_success_fidelity = std::min(st.min_success_fidelity, fock::fidelity(r.state, target));
        break;
      case LinkAdditionStatus::destroyed:
        st.destroyed += p;
        break;
      case LinkAdditionStatus::recovered:
        st.recovered += p;
        st.min_recovered_fidelity = std::min(
            st.min_recovered_fidelity, fock::reduced_fidelity(r.state, input_ab, ab_modes));
        break;
    }
  });
  return st;
}

}  // namespace photonchain::klm
