// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/klm/cz_gate.h"

#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace photonchain::klm {

using fock::Complex;
using fock::Occupation;

namespace {

struct CzLayout {
  std::vector<int> a_in, a_out, b_in, b_out, ancilla;
};

CzLayout make_layout(int base, int n) {
  CzLayout l;
  for (int i = 0; i < n; ++i) {
    l.a_in.push_back(base + i);
    l.a_out.push_back(base + n + i);
    l.b_in.push_back(base + 2 * n + i);
    l.b_out.push_back(base + 3 * n + i);
  }
  l.ancilla.resize(4 * n);
  std::iota(l.ancilla.begin(), l.ancilla.end(), base);
  return l;
}

bool ok(const RailTeleport& t) { return t.result.status == TeleportStatus::success; }

Complex parity(int k) { return k % 2 ? Complex(-1.0) : Complex(1.0); }

// The shared ancilla leaves (-1)^{(k_a - x_a)(k_b - x_b)}; the phases below
// reduce it to (-1)^{x_a x_b} up to a global sign.
FockState finish_gate(FockState full, DualRail a, DualRail b, const RailTeleport& ta,
                      const RailTeleport* tb, const CzLayout& layout) {
  if (ok(ta) && tb) full.apply_mode_phase(ta.output_mode, parity(tb->result.detected));
  if (tb && ok(*tb)) full.apply_mode_phase(tb->output_mode, parity(ta.result.detected));
  if (ok(ta)) full.swap_modes(a.rail1, ta.output_mode);
  if (tb && ok(*tb)) full.swap_modes(b.rail1, tb->output_mode);
  return full.discard_modes(layout.ancilla);
}

}  // namespace

CzOutput cz_klm(const FockState& state, DualRail a, DualRail b, int n, bool sequential,
                fock::OutcomeChooser& chooser) {
  const CzLayout layout = make_layout(state.num_modes(), n);
  FockState full = state.tensor(prepare_cz_ancilla(n));

  CzOutput out;
  RailTeleport ta = teleport_rail(full, a.rail1, layout.a_in, layout.a_out, chooser);
  out.first = ta.result;
  if (sequential && !ok(ta)) {
    out.state = finish_gate(std::move(full), a, b, ta, nullptr, layout);
    return out;
  }
  RailTeleport tb = teleport_rail(full, b.rail1, layout.b_in, layout.b_out, chooser);
  out.second = tb.result;
  out.status = ok(ta) && ok(tb) ? GateStatus::success : GateStatus::failure;
  out.state = finish_gate(std::move(full), a, b, ta, &tb, layout);
  return out;
}

CzOutput cz_klm(const FockState& state, DualRail a, DualRail b, int n, bool sequential,
                Rng& rng) {
  fock::RandomChooser chooser(rng);
  return cz_klm(state, a, b, n, sequential, chooser);
}

SuccessProbabilities success_probability(int n) {
  if (n < 1) throw std::invalid_argument("teleportation order n must be >= 1");
  long long d = n + 1;
  return {{n, d}, {static_cast<long long>(n) * n, d * d}};
}

CzProcessCheck enumerate_cz_process(int n, bool sequential) {
  // Modes: reference Ra (0,1), Rb (2,3), inputs A (4,5), B (6,7).
  const DualRail a{4, 5}, b{6, 7};
  std::vector<std::pair<Occupation, Complex>> terms;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      Occupation occ(8, 0);
      occ[x] = 1;
      occ[2 + y] = 1;
      occ[4 + x] = 1;
      occ[6 + y] = 1;
      terms.emplace_back(occ, 0.5);
    }
  }
  const FockState choi = FockState::from_terms(8, terms);
  const CzLayout layout = make_layout(8, n);
  const FockState full = choi.tensor(prepare_cz_ancilla(n));

  CzProcessCheck check;
  const auto a_modes = rail_measured_modes(a.rail1, layout.a_in);
  const auto b_modes = rail_measured_modes(b.rail1, layout.b_in);
  const FockState fa = rail_fourier(full, a.rail1, layout.a_in);
  for (const auto& oa : fock::outcome_distribution(fa, a_modes)) {
    FockState sa = fock::measure_counts(fa, a_modes, oa.counts).state;
    RailTeleport ta = finish_rail_teleport(sa, a.rail1, layout.a_in, layout.a_out, oa);
    if (sequential && !ok(ta)) continue;
    const FockState fb = rail_fourier(sa, b.rail1, layout.b_in);
    for (const auto& ob : fock::outcome_distribution(fb, b_modes)) {
      FockState sb = fock::measure_counts(fb, b_modes, ob.counts).state;
      RailTeleport tb = finish_rail_teleport(sb, b.rail1, layout.b_in, layout.b_out, ob);
      if (!ok(ta) || !ok(tb)) continue;
      FockState out = finish_gate(std::move(sb), a, b, ta, &tb, layout);
      check.success_probability += out.norm_tracking();
      ++check.success_branches;

      // M(out, in) = 2 <in|_R <out|_AB psi>.
      Eigen::Matrix4cd m;
      for (int xo = 0; xo < 2; ++xo)
        for (int yo = 0; yo < 2; ++yo)
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
              Occupation occ(8, 0);
              occ[x] = 1;
              occ[2 + y] = 1;
              occ[4 + xo] = 1;
              occ[6 + yo] = 1;
              m(2 * xo + yo, 2 * x + y) = 2.0 * out.amplitude(occ);
            }
      Complex phase = std::polar(1.0, -std::arg(m(0, 0)));
      Eigen::Matrix4cd cz = Eigen::Matrix4cd::Identity();
      cz(3, 3) = -1;
      double dev = (m * phase - cz).cwiseAbs().maxCoeff();
      check.max_operator_deviation = std::max(check.max_operator_deviation, dev);
    }
  }
  return check;
}

}  // namespace photonchain::klm
