// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/linked/execute.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace photonchain::linked {

nlohmann::json to_json(const OutcomeLogEntry& e) {
  return {{"step", e.step},
          {"node", {e.node.chain, e.node.node}},
          {"outcome", {e.outcome.pol_bit, e.outcome.path_bit}}};
}

ExecuteResult execute(const LinkedBlueprint& blueprint, const std::vector<QubitInput>& inputs,
                      OutcomeSelector& selector, const ExecuteOptions& options) {
  if (auto v = validate(blueprint); !v.empty()) {
    throw std::invalid_argument("inconsistent blueprint: " + v.front());
  }
  const int nc = blueprint.num_qubits();
  if (static_cast<int>(inputs.size()) != nc) {
    throw std::invalid_argument("execute: need one input per chain");
  }
  std::vector<bool> quantum = options.quantum_input;
  quantum.resize(nc, false);

  LinkedState state;
  std::vector<std::optional<QubitId>> external(nc);
  for (int c = 0; c < nc; ++c) {
    if (quantum[c]) {
      if (blueprint.chains[c].links.empty()) {
        throw std::invalid_argument("quantum input needs at least one link on its chain");
      }
      state.add_chain(1, 0);
      external[c] = state.reg().allocate(inputs[c][0], inputs[c][1]);
    } else {
      state.add_chain(inputs[c][0], inputs[c][1]);
    }
  }

  std::map<std::pair<int, int>, std::vector<SingleQubitGate>> ops;
  for (const auto& op : blueprint.local_ops) ops[{op.chain, op.node}].push_back(op.gate);
  auto flush = [&](int c, std::optional<QubitId> q = std::nullopt) {
    auto it = ops.find({c, state.data_node(c)});
    if (it == ops.end()) return;
    for (const auto& g : it->second) {
      state.reg().apply(q ? *q : state.data_qubit(c), gate_matrix(g));
    }
    ops.erase(it);
  };

  ExecuteResult result;
  auto track = [&] { result.peak_live_qubits = std::max(result.peak_live_qubits, state.reg().live_qubits()); };
  track();
  for (const auto& s : blueprint.schedule) {
    switch (s.kind) {
      case ScheduleStep::Kind::add_link:
        state.add_link_ideal(s.target);
        break;
      case ScheduleStep::Kind::apply_gate: {
        const auto& e = blueprint.gate_edges[s.target];
        state.apply_gate_edge({e.chain_a, e.link_a + 1}, {e.chain_b, e.link_b + 1});
        break;
      }
      case ScheduleStep::Kind::teleport: {
        const int c = s.target;
        NodeRef from{c, state.data_node(c)};
        BellOutcome o;
        if (external[c]) {
          flush(c, external[c]);
          o = state.inject_quantum_input(c, *external[c], selector);
          external[c].reset();
        } else {
          flush(c);
          o = state.teleport_step(c, selector);
        }
        result.log.push_back({static_cast<int>(result.log.size()), from, o});
        break;
      }
    }
    track();
  }

  std::vector<QubitId> order;
  for (int c = 0; c < nc; ++c) {
    if (external[c]) throw std::logic_error("quantum input never injected");
    flush(c);
    order.push_back(state.data_qubit(c));
  }
  if (state.reg().live_qubits() != nc) {
    throw std::logic_error("execute: photons other than the data remain unmeasured");
  }
  result.output = state.reg().amplitudes(order);
  return result;
}

}  // namespace photonchain::linked
