// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/linked/blueprint.h"

#include <map>
#include <stdexcept>

namespace photonchain::linked {

using nlohmann::json;

std::string_view to_string(ScheduleMode m) {
  return m == ScheduleMode::eager ? "eager" : "full-build";
}

std::string_view to_string(LinkKind k) { return k == LinkKind::active ? "active" : "inert"; }

std::string_view to_string(ScheduleStep::Kind k) {
  switch (k) {
    case ScheduleStep::Kind::add_link: return "add_link";
    case ScheduleStep::Kind::apply_gate: return "gate";
    case ScheduleStep::Kind::teleport: return "teleport";
  }
  return "?";
}

json to_json(const LinkedBlueprint& b) {
  json chains = json::array();
  for (const auto& c : b.chains) {
    json links = json::array();
    for (LinkKind k : c.links) links.push_back(to_string(k));
    chains.push_back({{"links", links}});
  }
  json edges = json::array();
  for (const auto& e : b.gate_edges) {
    edges.push_back({{"a", {e.chain_a, e.link_a}}, {"b", {e.chain_b, e.link_b}}});
  }
  json ops = json::array();
  for (const auto& op : b.local_ops) {
    json o = {{"chain", op.chain}, {"node", op.node}, {"gate", gate_name(op.gate.kind)}};
    if (op.gate.kind == GateKind::rz) o["angle"] = op.gate.angle;
    ops.push_back(o);
  }
  json schedule = json::array();
  for (const auto& s : b.schedule) {
    const char* key = s.kind == ScheduleStep::Kind::apply_gate ? "edge" : "chain";
    schedule.push_back({{"op", to_string(s.kind)}, {key, s.target}});
  }
  return {{"chains", chains},
          {"gate_edges", edges},
          {"local_ops", ops},
          {"schedule", schedule},
          {"mode", to_string(b.mode)},
          {"inert_links_per_gate", b.inert_links_per_gate},
          {"n_order", b.n_order},
          {"safety_margin", b.safety_margin}};
}

LinkedBlueprint blueprint_from_json(const json& j) {
  LinkedBlueprint b;
  for (const auto& c : j.at("chains")) {
    ChainSpec spec;
    for (const auto& l : c.at("links")) {
      auto s = l.get<std::string>();
      if (s == "active") spec.links.push_back(LinkKind::active);
      else if (s == "inert") spec.links.push_back(LinkKind::inert);
      else throw std::invalid_argument("unknown link kind '" + s + "'");
    }
    b.chains.push_back(spec);
  }
  for (const auto& e : j.at("gate_edges")) {
    b.gate_edges.push_back({e.at("a").at(0).get<int>(), e.at("a").at(1).get<int>(),
                            e.at("b").at(0).get<int>(), e.at("b").at(1).get<int>()});
  }
  for (const auto& o : j.value("local_ops", json::array())) {
    auto kind = parse_gate_name(o.at("gate").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown gate in local_ops");
    b.local_ops.push_back({o.at("chain").get<int>(), o.at("node").get<int>(),
                           {*kind, o.value("angle", 0.0)}});
  }
  for (const auto& s : j.at("schedule")) {
    auto op = s.at("op").get<std::string>();
    if (op == "add_link") b.schedule.push_back({ScheduleStep::Kind::add_link, s.at("chain").get<int>()});
    else if (op == "gate") b.schedule.push_back({ScheduleStep::Kind::apply_gate, s.at("edge").get<int>()});
    else if (op == "teleport") b.schedule.push_back({ScheduleStep::Kind::teleport, s.at("chain").get<int>()});
    else throw std::invalid_argument("unknown schedule op '" + op + "'");
  }
  auto mode = j.value("mode", std::string("full-build"));
  if (mode == "eager") b.mode = ScheduleMode::eager;
  else if (mode == "full-build") b.mode = ScheduleMode::full_build;
  else throw std::invalid_argument("unknown schedule mode '" + mode + "'");
  b.inert_links_per_gate = j.value("inert_links_per_gate", 0);
  b.n_order = j.value("n_order", 0);
  b.safety_margin = j.value("safety_margin", 0);
  return b;
}

std::vector<std::string> validate(const LinkedBlueprint& b) {
  std::vector<std::string> v;
  const int nc = b.num_qubits();
  auto chain_ok = [&](int c) { return c >= 0 && c < nc; };

  // Node -> edge index, for every edge endpoint.
  std::map<std::pair<int, int>, int> edge_at;
  for (std::size_t e = 0; e < b.gate_edges.size(); ++e) {
    const auto& g = b.gate_edges[e];
    std::string name = "gate edge " + std::to_string(e);
    if (!chain_ok(g.chain_a) || !chain_ok(g.chain_b)) {
      v.push_back(name + " refers to a missing chain");
      continue;
    }
    if (g.chain_a == g.chain_b) v.push_back(name + " joins a chain to itself");
    for (auto [c, l] : {std::pair{g.chain_a, g.link_a}, std::pair{g.chain_b, g.link_b}}) {
      const auto& links = b.chains[c].links;
      if (l < 0 || l >= static_cast<int>(links.size())) {
        v.push_back(name + " refers to missing link " + std::to_string(l) + " of chain " +
                    std::to_string(c));
      } else if (links[l] != LinkKind::active) {
        v.push_back(name + " sits on an inert link");
      } else if (!edge_at.emplace(std::pair{c, l + 1}, static_cast<int>(e)).second) {
        v.push_back(name + " reuses an active link of chain " + std::to_string(c));
      }
    }
  }
  for (int c = 0; c < nc; ++c) {
    int inert_run = 0;
    const auto& links = b.chains[c].links;
    for (int l = 0; l < static_cast<int>(links.size()); ++l) {
      if (links[l] == LinkKind::inert) {
        ++inert_run;
        continue;
      }
      if (!edge_at.count({c, l + 1})) {
        v.push_back("active link " + std::to_string(l) + " of chain " + std::to_string(c) +
                    " carries no gate edge");
      }
      if (inert_run != b.inert_links_per_gate) {
        v.push_back("chain " + std::to_string(c) + " has " + std::to_string(inert_run) +
                    " inert links before active link " + std::to_string(l) + ", policy needs " +
                    std::to_string(b.inert_links_per_gate));
      }
      inert_run = 0;
    }
    if (inert_run != 0) {
      v.push_back("chain " + std::to_string(c) + " ends with unused inert links");
    }
  }
  for (const auto& op : b.local_ops) {
    if (!chain_ok(op.chain) || op.node < 0 || op.node >= b.chains[op.chain].num_nodes()) {
      v.push_back("local op targets missing node (" + std::to_string(op.chain) + ", " +
                  std::to_string(op.node) + ")");
    }
  }
  if (!v.empty()) return v;

  // Replay the schedule.
  std::vector<int> built(nc, 0), data(nc, 0);
  std::vector<bool> applied(b.gate_edges.size(), false);
  auto partner_node = [&](int c, int node, int& pc, int& pn) {
    const auto& g = b.gate_edges[edge_at.at({c, node})];
    bool first = g.chain_a == c;
    pc = first ? g.chain_b : g.chain_a;
    pn = (first ? g.link_b : g.link_a) + 1;
  };
  for (std::size_t i = 0; i < b.schedule.size(); ++i) {
    const auto& s = b.schedule[i];
    std::string where = "schedule step " + std::to_string(i) + ": ";
    switch (s.kind) {
      case ScheduleStep::Kind::add_link:
        if (!chain_ok(s.target)) v.push_back(where + "missing chain");
        else if (built[s.target] >= static_cast<int>(b.chains[s.target].links.size()))
          v.push_back(where + "chain " + std::to_string(s.target) + " has no links left to add");
        else ++built[s.target];
        break;
      case ScheduleStep::Kind::apply_gate: {
        if (s.target < 0 || s.target >= static_cast<int>(b.gate_edges.size())) {
          v.push_back(where + "missing gate edge");
          break;
        }
        const auto& g = b.gate_edges[s.target];
        if (applied[s.target]) v.push_back(where + "gate edge applied twice");
        if (built[g.chain_a] <= g.link_a || built[g.chain_b] <= g.link_b)
          v.push_back(where + "gate edge applied before its links exist");
        if (data[g.chain_a] > g.link_a + 1 || data[g.chain_b] > g.link_b + 1)
          v.push_back(where + "gate edge applied after the data passed its node");
        applied[s.target] = true;
        break;
      }
      case ScheduleStep::Kind::teleport: {
        if (!chain_ok(s.target)) {
          v.push_back(where + "missing chain");
          break;
        }
        const int c = s.target;
        if (data[c] >= built[c]) {
          v.push_back(where + "teleport on chain " + std::to_string(c) + " beyond built links");
          break;
        }
        int pc, pn;
        if (edge_at.count({c, data[c]})) {
          partner_node(c, data[c], pc, pn);
          if (data[pc] < pn)
            v.push_back(where + "data leaves a gate node before its partner arrived");
        }
        const int dest = data[c] + 1;
        if (edge_at.count({c, dest})) {
          if (!applied[edge_at.at({c, dest})])
            v.push_back(where + "data reaches a gate node before the gate edge");
          partner_node(c, dest, pc, pn);
          if (data[pc] > pn) v.push_back(where + "partner data already left the gate node");
        }
        ++data[c];
        break;
      }
    }
  }
  for (int c = 0; c < nc; ++c) {
    if (built[c] != static_cast<int>(b.chains[c].links.size()))
      v.push_back("schedule leaves links of chain " + std::to_string(c) + " unbuilt");
    if (data[c] != built[c])
      v.push_back("schedule leaves the data of chain " + std::to_string(c) + " before the last node");
  }
  for (std::size_t e = 0; e < applied.size(); ++e) {
    if (!applied[e]) v.push_back("gate edge " + std::to_string(e) + " never applied");
  }
  return v;
}

}  // namespace photonchain::linked
