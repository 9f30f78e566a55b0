// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <vector>

#include "photonchain/linked/qubit_register.h"

namespace photonchain::linked {

/// One photon: polarization qubit (H = 0, V = 1) and a path qubit. The path
/// qubit of the chain tail is allocated on demand in reference state 0.
struct PhotonNode {
  int chain = 0;
  int index = 0;
  QubitId pol;
  std::optional<QubitId> path;
  bool measured = false;
};

struct BellOutcome {
  int pol_bit = 0;   // b0
  int path_bit = 0;  // b1
};

struct NodeRef {
  int chain = 0;
  int node = 0;
  bool operator==(const NodeRef&) const = default;
};

/// Chains of photons linked pol(p_{i+1}) <-> path(p_i) by |00> + |11>, with the
/// logical qubit of each chain sitting on one photon's polarization.
class LinkedState {
 public:
  // New chain whose first photon carries chi = a0|0> + a1|1>; returns its index.
  int add_chain(Complex a0, Complex a1);
  // add_chain followed by num_links ideal link additions.
  int build_chain(int num_links, Complex a0, Complex a1);

  // Appends a photon linked to the tail: H(path), CZ with a |+> photon, H.
  void add_link_ideal(int chain);
  // CZ between the polarization qubits of two nodes on different chains.
  void apply_gate_edge(NodeRef a, NodeRef b);

  // Bell-measures (pol, path) of the node holding the chain's data and applies
  // the Pauli corrections to the next node (and the partner of a gate edge on
  // that node). Returns the outcome; the data moves to the next node.
  BellOutcome teleport_step(int chain, OutcomeSelector& selector);

  // Replaces the chain's first photon by the external qubit: Bell-measures the
  // external qubit with path(p1), corrects p2, and measures pol(p1) out. The
  // data then sits on node 1.
  BellOutcome inject_quantum_input(int chain, QubitId external, OutcomeSelector& selector);

  void apply_local(int chain, const Eigen::Matrix2cd& m);

  int num_chains() const { return static_cast<int>(chains_.size()); }
  int chain_length(int chain) const { return static_cast<int>(chains_.at(chain).size()); }
  const PhotonNode& node(int chain, int index) const { return chains_.at(chain).at(index); }
  int data_node(int chain) const { return data_.at(chain); }
  QubitId data_qubit(int chain) const;

  QubitRegister& reg() { return reg_; }
  const QubitRegister& reg() const { return reg_; }

 private:
  PhotonNode& mutable_node(int chain, int index) { return chains_.at(chain).at(index); }
  QubitId path_of(int chain, int index);
  BellOutcome bell_into_next(int chain, QubitId data, QubitId path, OutcomeSelector& selector);

  QubitRegister reg_;
  std::vector<std::vector<PhotonNode>> chains_;
  std::vector<int> data_;
  std::vector<std::vector<std::optional<NodeRef>>> partner_;
};

}  // namespace photonchain::linked
