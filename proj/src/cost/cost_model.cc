// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/cost/cost_model.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cost_branches.h"

namespace photonchain::cost {

double ConstructionPolicy::p() const {
  if (basic_gate_prob) return *basic_gate_prob;
  double d = n_order + 1.0;
  return n_order * n_order / (d * d);
}

double ConstructionPolicy::q() const {
  if (basic_gate_prob) return std::sqrt(*basic_gate_prob);
  return n_order / (n_order + 1.0);
}

void ConstructionPolicy::check() const {
  if (n_order < 1) throw std::invalid_argument("n_order must be >= 1");
  if (inert_links_per_gate < 0) throw std::invalid_argument("inert_links_per_gate must be >= 0");
  if (basic_gate_prob && !(*basic_gate_prob > 0 && *basic_gate_prob <= 1)) {
    throw std::invalid_argument("basic_gate_prob must lie in (0, 1]");
  }
}

nlohmann::json to_json(const ConstructionPolicy& p) {
  nlohmann::json j = {{"n_order", p.n_order},
                      {"inert_links_per_gate", p.inert_links_per_gate},
                      {"sequential_teleport", p.sequential_teleport},
                      {"p", p.p()}};
  j["basic_gate_prob"] = p.basic_gate_prob ? nlohmann::json(*p.basic_gate_prob) : nlohmann::json();
  return j;
}

Phase next_phase(const BuildState& s, const ConstructionPolicy& policy) {
  const int k = policy.links_per_gate();
  const int fa = s.free_links[0], fb = s.free_links[1];
  if (fa >= k && fb >= k) return Phase::gate;
  if (fa < k && (fa <= fb || fb >= k)) return Phase::link_a;
  return Phase::link_b;
}

namespace detail {

BranchList link_branches(const BuildState& s, int chain, const ConstructionPolicy& policy) {
  const double p = policy.p(), q = policy.q();
  const int cap = policy.links_per_gate();
  BuildState ok = s;
  ok.free_links[chain] = std::min(cap, ok.free_links[chain] + 1);

  BuildState broken = s;
  bool reverted = false;
  int& f = broken.free_links[chain];
  int& other = broken.free_links[1 - chain];
  if (f > 0) {
    --f;
  } else if (broken.completed_gates > 0) {
    // The lost link carried the last gate edge: the gate goes with it, this
    // chain keeps the inert links below it and the partner's gated link is
    // demoted to a plain link on top of its own inert links.
    --broken.completed_gates;
    f = policy.inert_links_per_gate;
    other = std::min(cap, policy.inert_links_per_gate + 1 + other);
    reverted = true;
  }

  const double v_fail = (1 - q) / 2, h_fail = q * (1 - q) / 2;
  return {{{{p, ok, {LinkOutcome::success, false, 2}, {}},
          {v_fail, broken, {LinkOutcome::destructive, reverted, 1}, {}},
          {h_fail, broken, {LinkOutcome::destructive, reverted, 2}, {}},
          {v_fail, s, {LinkOutcome::neutral, false, 1}, {}},
          {h_fail, s, {LinkOutcome::neutral, false, 2}, {}}}},
          5};
}

BranchList gate_branches(const BuildState& s, const ConstructionPolicy& policy) {
  const double p = policy.p(), q = policy.q();
  BuildState ok = s;
  ++ok.completed_gates;
  ok.free_links = {0, 0};
  BuildState a = s, b = s, both = s;
  --a.free_links[0];
  --b.free_links[1];
  --both.free_links[0];
  --both.free_links[1];
  if (policy.sequential_teleport) {
    return {{{{p, ok, {}, {GateOutcome::success, 2}},
             {1 - q, a, {}, {GateOutcome::broke_first, 1}},
             {q * (1 - q), b, {}, {GateOutcome::broke_second, 2}}}},
            3};
  }
  return {{{{p, ok, {}, {GateOutcome::success, 2}},
           {(1 - q) * q, a, {}, {GateOutcome::broke_first, 2}},
           {q * (1 - q), b, {}, {GateOutcome::broke_second, 2}},
           {(1 - q) * (1 - q), both, {}, {GateOutcome::broke_both, 2}}}},
          4};
}

const Branch& sample(const BranchList& branches, Rng& rng) {
  double u = uniform01(rng);
  const Branch* last = branches.begin();
  for (const auto& b : branches) {
    if (b.probability <= 0) continue;
    if (u < b.probability) return b;
    u -= b.probability;
    last = &b;
  }
  return *last;  // rounding left u just above the total
}

}  // namespace detail

LinkTransition step_link_addition(BuildState& s, int chain, const ConstructionPolicy& policy,
                                  Rng& rng) {
  if (chain != 0 && chain != 1) throw std::invalid_argument("chain must be 0 or 1");
  const auto branches = detail::link_branches(s, chain, policy);
  const auto& b = detail::sample(branches, rng);
  s = b.next;
  return b.link;
}

GateTransition step_gate(BuildState& s, const ConstructionPolicy& policy, Rng& rng) {
  const int k = policy.links_per_gate();
  if (s.free_links[0] < k || s.free_links[1] < k) {
    throw std::logic_error("step_gate: chain tails are not ready");
  }
  const auto branches = detail::gate_branches(s, policy);
  const auto& b = detail::sample(branches, rng);
  s = b.next;
  return b.gate;
}

double CostReport::per_gate(const TrialResult& t) const {
  return static_cast<double>(t.cz_equivalents) / num_logical_gates;
}

namespace {

TrialResult run_trial(int gates, const ConstructionPolicy& policy, std::uint64_t seed,
                      std::int64_t max_steps) {
  Rng rng(seed);
  BuildState s;
  TrialResult r;
  while (s.completed_gates < gates && r.cz_equivalents < max_steps) {
    Phase ph = next_phase(s, policy);
    if (ph == Phase::gate) {
      r.teleports += step_gate(s, policy, rng).teleports;
    } else {
      r.teleports += step_link_addition(s, ph == Phase::link_a ? 0 : 1, policy, rng).teleports;
    }
    ++r.cz_equivalents;
  }
  r.truncated = s.completed_gates < gates;
  return r;
}

std::vector<HistogramBin> histogram(const CostReport& r, int bins) {
  if (r.trials.empty()) return {};
  double lo = r.per_gate(r.trials.front()), hi = lo;
  for (const auto& t : r.trials) {
    lo = std::min(lo, r.per_gate(t));
    hi = std::max(hi, r.per_gate(t));
  }
  if (hi == lo) return {{lo, hi, static_cast<std::int64_t>(r.trials.size())}};
  const double w = (hi - lo) / bins;
  std::vector<HistogramBin> h(bins);
  for (int i = 0; i < bins; ++i) h[i] = {lo + i * w, i + 1 == bins ? hi : lo + (i + 1) * w, 0};
  for (const auto& t : r.trials) {
    int i = static_cast<int>((r.per_gate(t) - lo) / w);
    ++h[std::clamp(i, 0, bins - 1)].count;
  }
  return h;
}

}  // namespace

CostReport simulate_build(int num_logical_gates, const ConstructionPolicy& policy, int trials,
                          std::uint64_t master_seed, const SimulationOptions& options) {
  policy.check();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (num_logical_gates < 1) throw std::invalid_argument("num_logical_gates must be >= 1");
  if (options.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

  CostReport r;
  r.policy = policy;
  r.num_logical_gates = num_logical_gates;
  r.master_seed = master_seed;
  r.trials.resize(trials);

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, trials);
  auto worker = [&](int w) {
    for (int i = w; i < trials; i += threads) {
      r.trials[i] = run_trial(num_logical_gates, policy, split_seed(master_seed, i), options.max_steps);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  double sum = 0;
  for (const auto& t : r.trials) {
    sum += r.per_gate(t);
    r.truncated += t.truncated;
  }
  r.mean = sum / trials;
  double ss = 0;
  for (const auto& t : r.trials) ss += (r.per_gate(t) - r.mean) * (r.per_gate(t) - r.mean);
  r.stddev = trials > 1 ? std::sqrt(ss / (trials - 1)) : 0.0;
  r.stderr_mean = r.stddev / std::sqrt(static_cast<double>(trials));
  r.histogram = histogram(r, 20);
  return r;
}

nlohmann::json to_json(const CostReport& r, std::optional<double> reference) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& b : r.histogram) hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  std::int64_t teleports = 0;
  for (const auto& t : r.trials) teleports += t.teleports;
  return {{"policy", to_json(r.policy)},
          {"num_logical_gates", r.num_logical_gates},
          {"trials", r.trials.size()},
          {"master_seed", r.master_seed},
          {"mean", r.mean},
          {"stddev", r.stddev},
          {"stderr", r.stderr_mean},
          {"truncated", r.truncated},
          {"teleports_per_logical_gate",
           static_cast<double>(teleports) / (static_cast<double>(r.trials.size()) * r.num_logical_gates)},
          {"histogram", hist},
          {"paper_reference", reference ? nlohmann::json(*reference) : nlohmann::json()}};
}

std::string to_csv(const CostReport& r) {
  std::ostringstream out;
  out << "trial,cz_equivalents,teleports,truncated\n";
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const auto& t = r.trials[i];
    out << i << ',' << t.cz_equivalents << ',' << t.teleports << ',' << (t.truncated ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace photonchain::cost
