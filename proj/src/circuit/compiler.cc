// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/circuit/compiler.h"

#include <stdexcept>

namespace photonchain::circuit {

using linked::LinkKind;
using linked::ScheduleStep;

linked::LinkedBlueprint compile(const Circuit& c, const CompileOptions& options) {
  if (options.inert_links_per_gate < 0 || options.n_order < 0 || options.safety_margin < 0) {
    throw std::invalid_argument("compile options must be non-negative");
  }
  linked::LinkedBlueprint b;
  b.chains.resize(c.num_qubits);
  b.mode = options.mode;
  b.inert_links_per_gate = options.inert_links_per_gate;
  b.n_order = options.n_order;
  b.safety_margin = options.mode == linked::ScheduleMode::eager ? options.safety_margin : 0;

  const int per_gate = options.inert_links_per_gate + 1;
  std::vector<std::vector<ScheduleStep>> build, move;
  for (const auto& g : c.gates) {
    if (const auto* l = std::get_if<LocalGate>(&g)) {
      b.local_ops.push_back({l->qubit, static_cast<int>(b.chains[l->qubit].links.size()), l->gate});
      continue;
    }
    const auto& cz = std::get<CzGate>(g);
    std::vector<ScheduleStep> steps, hops;
    int active[2];
    int idx = 0;
    for (int q : {cz.a, cz.b}) {
      auto& links = b.chains[q].links;
      links.insert(links.end(), options.inert_links_per_gate, LinkKind::inert);
      links.push_back(LinkKind::active);
      active[idx++] = static_cast<int>(links.size()) - 1;
      steps.insert(steps.end(), per_gate, {ScheduleStep::Kind::add_link, q});
      hops.insert(hops.end(), per_gate, {ScheduleStep::Kind::teleport, q});
    }
    steps.push_back({ScheduleStep::Kind::apply_gate, static_cast<int>(b.gate_edges.size())});
    b.gate_edges.push_back({cz.a, active[0], cz.b, active[1]});
    build.push_back(std::move(steps));
    move.push_back(std::move(hops));
  }

  auto emit = [&](const std::vector<ScheduleStep>& s) {
    b.schedule.insert(b.schedule.end(), s.begin(), s.end());
  };
  const std::size_t gates = build.size();
  if (options.mode == linked::ScheduleMode::full_build) {
    for (const auto& s : build) emit(s);
    for (const auto& s : move) emit(s);
  } else {
    const std::size_t lag = static_cast<std::size_t>(b.safety_margin);
    std::size_t moved = 0;
    for (std::size_t t = 0; t < gates; ++t) {
      emit(build[t]);
      if (t >= lag) emit(move[moved++]);
    }
    while (moved < gates) emit(move[moved++]);
  }
  return b;
}

std::vector<std::string> validate(const linked::LinkedBlueprint& b, const CompileOptions& options) {
  auto v = linked::validate(b);
  if (b.inert_links_per_gate != options.inert_links_per_gate) {
    v.push_back("blueprint uses " + std::to_string(b.inert_links_per_gate) +
                " inert links per gate, policy needs " +
                std::to_string(options.inert_links_per_gate));
  }
  return v;
}

std::vector<linked::Complex> simulate(const Circuit& c, const std::vector<linked::QubitInput>& inputs) {
  if (static_cast<int>(inputs.size()) != c.num_qubits) {
    throw std::invalid_argument("simulate: need one input per qubit");
  }
  const std::size_t dim = std::size_t{1} << c.num_qubits;
  std::vector<linked::Complex> psi(dim, 1.0);
  for (int q = 0; q < c.num_qubits; ++q) {
    double norm = std::sqrt(std::norm(inputs[q][0]) + std::norm(inputs[q][1]));
    for (std::size_t i = 0; i < dim; ++i) psi[i] *= inputs[q][(i >> q) & 1] / norm;
  }
  for (const auto& g : c.gates) {
    if (const auto* cz = std::get_if<CzGate>(&g)) {
      const std::size_t mask = (std::size_t{1} << cz->a) | (std::size_t{1} << cz->b);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) psi[i] = -psi[i];
      }
      continue;
    }
    const auto& l = std::get<LocalGate>(g);
    const auto m = linked::gate_matrix(l.gate);
    const std::size_t bit = std::size_t{1} << l.qubit;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      auto a0 = psi[i], a1 = psi[i | bit];
      psi[i] = m(0, 0) * a0 + m(0, 1) * a1;
      psi[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
  return psi;
}

}  // namespace photonchain::circuit
