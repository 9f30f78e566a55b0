// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/fock/fock_state.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace photonchain::fock {

namespace {

int total(const Occupation& occ) { return std::accumulate(occ.begin(), occ.end(), 0); }

std::vector<bool> mode_mask(int num_modes, std::span<const int> modes) {
  std::vector<bool> mask(num_modes, false);
  for (int m : modes) {
    if (m < 0 || m >= num_modes) {
      throw std::out_of_range("mode " + std::to_string(m) + " out of range");
    }
    if (mask[m]) throw std::invalid_argument("duplicate mode " + std::to_string(m));
    mask[m] = true;
  }
  return mask;
}

}  // namespace

FockState::FockState(int num_modes) : num_modes_(num_modes) {
  if (num_modes < 0) throw std::invalid_argument("negative mode count");
  terms_.emplace(Occupation(num_modes, 0), Complex(1.0));
}

FockState FockState::basis(const Occupation& occ) {
  FockState s(static_cast<int>(occ.size()));
  s.check_occupation(occ);
  s.terms_.clear();
  s.terms_.emplace(occ, Complex(1.0));
  return s;
}

FockState FockState::from_terms(int num_modes,
                                const std::vector<std::pair<Occupation, Complex>>& terms) {
  FockState s(num_modes);
  s.terms_.clear();
  for (const auto& [occ, amp] : terms) s.add(occ, amp);
  s.prune();
  return s;
}

void FockState::check_occupation(const Occupation& occ) const {
  if (static_cast<int>(occ.size()) != num_modes_) {
    throw std::invalid_argument("occupation has " + std::to_string(occ.size()) +
                                " modes, state has " + std::to_string(num_modes_));
  }
  for (int n : occ) {
    if (n < 0) throw std::invalid_argument("negative occupation");
  }
}

Complex FockState::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void FockState::add(const Occupation& occ, Complex amp) {
  check_occupation(occ);
  terms_[occ] += amp;
}

void FockState::prune(double eps) {
  std::erase_if(terms_, [eps](const auto& kv) { return std::abs(kv.second) < eps; });
}

double FockState::norm_squared() const {
  double n = 0;
  for (const auto& [occ, amp] : terms_) n += std::norm(amp);
  return n;
}

void FockState::normalize() {
  double n = std::sqrt(norm_squared());
  if (n == 0) throw std::domain_error("cannot normalize the zero vector");
  for (auto& [occ, amp] : terms_) amp /= n;
}

int FockState::max_photons() const {
  int m = -1;
  for (const auto& [occ, amp] : terms_) m = std::max(m, total(occ));
  return m;
}

bool FockState::photon_number_definite() const {
  if (terms_.empty()) return true;
  int first = total(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [first](const auto& kv) { return total(kv.first) == first; });
}

Complex FockState::inner(const FockState& other) const {
  if (other.num_modes_ != num_modes_) throw std::invalid_argument("mode count mismatch");
  Complex s = 0;
  for (const auto& [occ, amp] : terms_) {
    auto it = other.terms_.find(occ);
    if (it != other.terms_.end()) s += std::conj(amp) * it->second;
  }
  return s;
}

FockState FockState::tensor(const FockState& other) const {
  FockState r(num_modes_ + other.num_modes_);
  r.terms_.clear();
  for (const auto& [oa, aa] : terms_) {
    for (const auto& [ob, ab] : other.terms_) {
      Occupation occ = oa;
      occ.insert(occ.end(), ob.begin(), ob.end());
      r.terms_.emplace(std::move(occ), aa * ab);
    }
  }
  r.norm_tracking_ = norm_tracking_ * other.norm_tracking_;
  return r;
}

void FockState::swap_modes(int a, int b) {
  if (a < 0 || b < 0 || a >= num_modes_ || b >= num_modes_) {
    throw std::out_of_range("swap_modes: mode out of range");
  }
  if (a == b) return;
  TermMap next;
  for (auto& [occ, amp] : terms_) {
    Occupation o = occ;
    std::swap(o[a], o[b]);
    next.emplace(std::move(o), amp);
  }
  terms_ = std::move(next);
}

void FockState::apply_mode_phase(int mode, Complex phase) {
  if (mode < 0 || mode >= num_modes_) throw std::out_of_range("apply_mode_phase");
  for (auto& [occ, amp] : terms_) {
    for (int i = 0; i < occ[mode]; ++i) amp *= phase;
  }
}

void FockState::absorb(std::span<const int> modes) {
  mode_mask(num_modes_, modes);
  if (terms_.empty()) return;
  const Occupation& ref = terms_.begin()->first;
  for (const auto& [occ, amp] : terms_) {
    for (int m : modes) {
      if (occ[m] != ref[m]) throw std::invalid_argument("absorb: occupation not definite");
    }
  }
  TermMap next;
  for (auto& [occ, amp] : terms_) {
    Occupation o = occ;
    for (int m : modes) o[m] = 0;
    next.emplace(std::move(o), amp);
  }
  terms_ = std::move(next);
}

FockState FockState::discard_modes(std::span<const int> modes, double tol) const {
  auto mask = mode_mask(num_modes_, modes);
  // Split each term into (kept occupation, discarded occupation).
  std::map<Occupation, std::map<Occupation, Complex>> groups;
  for (const auto& [occ, amp] : terms_) {
    Occupation kept, gone;
    for (int m = 0; m < num_modes_; ++m) (mask[m] ? gone : kept).push_back(occ[m]);
    groups[kept][gone] += amp;
  }
  FockState r(num_modes_ - static_cast<int>(modes.size()));
  r.terms_.clear();
  r.norm_tracking_ = norm_tracking_;
  if (groups.empty()) return r;

  // The discarded factor is the group vector with the largest weight, normalized.
  const std::map<Occupation, Complex>* best = nullptr;
  double best_w = -1;
  for (const auto& [kept, g] : groups) {
    double w = 0;
    for (const auto& [o, a] : g) w += std::norm(a);
    if (w > best_w) best_w = w, best = &g;
  }
  std::map<Occupation, Complex> phi = *best;
  for (auto& [o, a] : phi) a /= std::sqrt(best_w);

  double total_w = norm_squared();
  for (const auto& [kept, g] : groups) {
    Complex c = 0;
    for (const auto& [o, a] : g) {
      auto it = phi.find(o);
      if (it != phi.end()) c += std::conj(it->second) * a;
    }
    double resid = 0;
    for (const auto& [o, a] : g) {
      auto it = phi.find(o);
      Complex proj = it == phi.end() ? Complex(0) : c * it->second;
      resid += std::norm(a - proj);
    }
    for (const auto& [o, a] : phi) {
      if (!g.count(o)) resid += std::norm(c * a);
    }
    if (resid > tol * tol * std::max(total_w, 1e-300)) {
      throw std::invalid_argument("discard_modes: modes are entangled with the rest");
    }
    if (std::abs(c) >= kPruneEpsilon) r.terms_.emplace(kept, c);
  }
  return r;
}

nlohmann::json FockState::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [occ, amp] : terms_) {
    terms.push_back({{"occ", occ}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  return {{"modes", num_modes_}, {"terms", terms}};
}

FockState FockState::from_json(const nlohmann::json& j) {
  FockState s(j.at("modes").get<int>());
  s.terms_.clear();
  for (const auto& t : j.at("terms")) {
    s.add(t.at("occ").get<Occupation>(),
          Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return s;
}

double reduced_fidelity(const FockState& state, const FockState& target,
                        std::span<const int> kept_modes) {
  if (target.num_modes() != static_cast<int>(kept_modes.size())) {
    throw std::invalid_argument("reduced_fidelity: target mode count mismatch");
  }
  auto mask = mode_mask(state.num_modes(), kept_modes);
  std::map<Occupation, Complex> overlap;  // environment occupation -> <target|state_env>
  for (const auto& [occ, amp] : state.terms()) {
    Occupation sys, env;
    for (int m : kept_modes) sys.push_back(occ[m]);
    for (int m = 0; m < state.num_modes(); ++m) {
      if (!mask[m]) env.push_back(occ[m]);
    }
    Complex t = target.amplitude(sys);
    if (t != Complex(0)) overlap[env] += std::conj(t) * amp;
  }
  double f = 0;
  for (const auto& [env, c] : overlap) f += std::norm(c);
  return f / (state.norm_squared() * target.norm_squared());
}

double fidelity(const FockState& a, const FockState& b) {
  return std::norm(a.inner(b)) / (a.norm_squared() * b.norm_squared());
}

}  // namespace photonchain::fock
