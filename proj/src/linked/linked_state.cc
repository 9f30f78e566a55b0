// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/linked/linked_state.h"

#include <stdexcept>
#include <string>

namespace photonchain::linked {

int LinkedState::add_chain(Complex a0, Complex a1) {
  const int c = num_chains();
  chains_.push_back({PhotonNode{c, 0, reg_.allocate(a0, a1), std::nullopt, false}});
  data_.push_back(0);
  partner_.push_back({std::nullopt});
  return c;
}

int LinkedState::build_chain(int num_links, Complex a0, Complex a1) {
  int c = add_chain(a0, a1);
  for (int i = 0; i < num_links; ++i) add_link_ideal(c);
  return c;
}

QubitId LinkedState::path_of(int chain, int index) {
  PhotonNode& p = mutable_node(chain, index);
  if (!p.path) p.path = reg_.allocate(1, 0);
  return *p.path;
}

void LinkedState::add_link_ideal(int chain) {
  auto& nodes = chains_.at(chain);
  const int tail = static_cast<int>(nodes.size()) - 1;
  if (nodes[tail].path) throw std::logic_error("chain tail already has a link");
  QubitId path = path_of(chain, tail);
  QubitId pol = reg_.allocate(1, 1);  // |+>
  reg_.h(path);
  reg_.cz(path, pol);
  reg_.h(pol);
  nodes.push_back(PhotonNode{chain, tail + 1, pol, std::nullopt, false});
  partner_.at(chain).push_back(std::nullopt);
}

void LinkedState::apply_gate_edge(NodeRef a, NodeRef b) {
  if (a.chain == b.chain) throw std::invalid_argument("gate edge within one chain");
  const PhotonNode& pa = node(a.chain, a.node);
  const PhotonNode& pb = node(b.chain, b.node);
  if (pa.measured || pb.measured) throw std::logic_error("gate edge on a measured photon");
  auto& sa = partner_.at(a.chain).at(a.node);
  auto& sb = partner_.at(b.chain).at(b.node);
  if (sa || sb) throw std::logic_error("photon already carries a gate edge");
  reg_.cz(pa.pol, pb.pol);
  sa = b;
  sb = a;
}

QubitId LinkedState::data_qubit(int chain) const { return node(chain, data_.at(chain)).pol; }

BellOutcome LinkedState::bell_into_next(int chain, QubitId data, QubitId path,
                                        OutcomeSelector& selector) {
  const int dest = data_.at(chain) + 1;
  if (dest >= chain_length(chain)) throw std::logic_error("no link to teleport through");
  reg_.cnot(data, path);
  reg_.h(data);
  BellOutcome out;
  out.pol_bit = reg_.measure(data, selector);
  out.path_bit = reg_.measure(path, selector);

  const QubitId next = node(chain, dest).pol;
  if (out.path_bit) reg_.x(next);
  if (out.pol_bit) reg_.z(next);
  // CZ X_A = X_A Z_B CZ: an X byproduct on a gated photon leaves Z on its partner.
  if (const auto& p = partner_.at(chain).at(dest); p && out.path_bit) {
    const PhotonNode& q = node(p->chain, p->node);
    if (q.measured) throw std::logic_error("gate partner already measured");
    reg_.z(q.pol);
  }
  return out;
}

BellOutcome LinkedState::teleport_step(int chain, OutcomeSelector& selector) {
  const int d = data_.at(chain);
  if (d + 1 >= chain_length(chain)) throw std::logic_error("data already on the last node");
  QubitId path = path_of(chain, d);
  BellOutcome out = bell_into_next(chain, node(chain, d).pol, path, selector);
  mutable_node(chain, d).measured = true;
  data_[chain] = d + 1;
  return out;
}

BellOutcome LinkedState::inject_quantum_input(int chain, QubitId external,
                                              OutcomeSelector& selector) {
  if (data_.at(chain) != 0) throw std::logic_error("inject: chain already started");
  QubitId path = path_of(chain, 0);
  BellOutcome out = bell_into_next(chain, external, path, selector);
  reg_.measure(node(chain, 0).pol, selector);
  mutable_node(chain, 0).measured = true;
  data_[chain] = 1;
  return out;
}

void LinkedState::apply_local(int chain, const Eigen::Matrix2cd& m) {
  reg_.apply(data_qubit(chain), m);
}

}  // namespace photonchain::linked
