// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "photonchain/linked/gates.h"

namespace photonchain::linked {

enum class LinkKind { active, inert };

// Photon i of a chain is node i; link l joins node l and node l+1.
struct ChainSpec {
  std::vector<LinkKind> links;
  int num_nodes() const { return static_cast<int>(links.size()) + 1; }
  bool operator==(const ChainSpec&) const = default;
};

// CZ between the nodes reached by link_a of chain_a and link_b of chain_b
// (node index link + 1).
struct GateEdge {
  int chain_a = 0, link_a = 0;
  int chain_b = 0, link_b = 0;
  bool operator==(const GateEdge&) const = default;
};

// Single-qubit gate applied to the data once it sits on (chain, node).
struct LocalOp {
  int chain = 0;
  int node = 0;
  SingleQubitGate gate;
  bool operator==(const LocalOp&) const = default;
};

struct ScheduleStep {
  enum class Kind { add_link, apply_gate, teleport };
  Kind kind = Kind::add_link;
  int target = 0;  // chain for add_link / teleport, edge index for apply_gate
  bool operator==(const ScheduleStep&) const = default;
};

enum class ScheduleMode { eager, full_build };

std::string_view to_string(ScheduleMode m);
std::string_view to_string(LinkKind k);
std::string_view to_string(ScheduleStep::Kind k);

struct LinkedBlueprint {
  std::vector<ChainSpec> chains;
  std::vector<GateEdge> gate_edges;
  std::vector<LocalOp> local_ops;  // in circuit order
  std::vector<ScheduleStep> schedule;
  ScheduleMode mode = ScheduleMode::full_build;
  int inert_links_per_gate = 0;
  int n_order = 0;      // teleportation order used for cost reporting
  int safety_margin = 0;

  int num_qubits() const { return static_cast<int>(chains.size()); }
  bool operator==(const LinkedBlueprint&) const = default;
};

nlohmann::json to_json(const LinkedBlueprint& b);
LinkedBlueprint blueprint_from_json(const nlohmann::json& j);

// Structural and schedule checks; returns human-readable violations (empty when
// the blueprint is consistent).
std::vector<std::string> validate(const LinkedBlueprint& b);

}  // namespace photonchain::linked
