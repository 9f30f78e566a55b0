// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/linked/qubit_register.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace photonchain::linked {

namespace {
constexpr double kZeroProbability = 1e-14;
}

int RandomSelector::choose_bit(double prob_one) {
  return uniform01(rng_) < prob_one ? 1 : 0;
}

int ScriptedSelector::choose_bit(double prob_one) {
  if (next_ >= bits_.size()) throw std::invalid_argument("outcome script exhausted");
  int b = bits_[next_++];
  double p = b ? prob_one : 1 - prob_one;
  if (p < kZeroProbability) throw std::invalid_argument("scripted outcome has zero probability");
  return b;
}

QubitRegister::QubitRegister() : amps_{Complex(1.0)} {}

QubitId QubitRegister::allocate(Complex a0, Complex a1) {
  if (live_qubits() >= kMaxLiveQubits) {
    throw QubitCapacityExceeded("more than " + std::to_string(kMaxLiveQubits) +
                                " live qubits");
  }
  double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (n == 0) throw std::invalid_argument("allocate: zero vector");
  a0 /= n;
  a1 /= n;
  const std::size_t size = amps_.size();
  amps_.resize(2 * size);
  for (std::size_t i = 0; i < size; ++i) {
    amps_[size + i] = amps_[i] * a1;
    amps_[i] *= a0;
  }
  QubitId id{static_cast<int>(bit_by_id_.size())};
  bit_by_id_.push_back(static_cast<int>(bit_owner_.size()));
  bit_owner_.push_back(id.value);
  return id;
}

bool QubitRegister::is_live(QubitId q) const {
  return q.value >= 0 && q.value < static_cast<int>(bit_by_id_.size()) &&
         bit_by_id_[q.value] >= 0;
}

int QubitRegister::bit_of(QubitId q) const {
  if (!is_live(q)) throw std::invalid_argument("qubit " + std::to_string(q.value) + " is not live");
  return bit_by_id_[q.value];
}

void QubitRegister::apply(QubitId q, const Eigen::Matrix2cd& m) {
  const std::size_t mask = std::size_t{1} << bit_of(q);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    Complex a = amps_[i], b = amps_[i | mask];
    amps_[i] = m(0, 0) * a + m(0, 1) * b;
    amps_[i | mask] = m(1, 0) * a + m(1, 1) * b;
  }
}

void QubitRegister::x(QubitId q) {
  const std::size_t mask = std::size_t{1} << bit_of(q);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & mask)) std::swap(amps_[i], amps_[i | mask]);
  }
}

void QubitRegister::z(QubitId q) {
  const std::size_t mask = std::size_t{1} << bit_of(q);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) amps_[i] = -amps_[i];
  }
}

void QubitRegister::h(QubitId q) {
  const double r = 1 / std::sqrt(2.0);
  const std::size_t mask = std::size_t{1} << bit_of(q);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    Complex a = amps_[i], b = amps_[i | mask];
    amps_[i] = r * (a + b);
    amps_[i | mask] = r * (a - b);
  }
}

void QubitRegister::cz(QubitId a, QubitId b) {
  const std::size_t mask = (std::size_t{1} << bit_of(a)) | (std::size_t{1} << bit_of(b));
  if (a == b) throw std::invalid_argument("cz on a single qubit");
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] = -amps_[i];
  }
}

void QubitRegister::cnot(QubitId control, QubitId target) {
  if (control == target) throw std::invalid_argument("cnot on a single qubit");
  const std::size_t c = std::size_t{1} << bit_of(control);
  const std::size_t t = std::size_t{1} << bit_of(target);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
  }
}

double QubitRegister::probability_one(QubitId q) const {
  const std::size_t mask = std::size_t{1} << bit_of(q);
  double p1 = 0, total = 0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    double w = std::norm(amps_[i]);
    total += w;
    if (i & mask) p1 += w;
  }
  return p1 / total;
}

int QubitRegister::measure(QubitId q, OutcomeSelector& selector) {
  const int bit = bit_of(q);
  const double p1 = probability_one(q);
  const int outcome = selector.choose_bit(p1);
  const double p = outcome ? p1 : 1 - p1;
  if (p <= 0) throw std::logic_error("selected a zero-probability outcome");
  const double scale = 1 / std::sqrt(p);

  // Keep the chosen half, squeezing out `bit`.
  const std::size_t low = (std::size_t{1} << bit) - 1;
  std::vector<Complex> next(amps_.size() / 2);
  for (std::size_t j = 0; j < next.size(); ++j) {
    std::size_t i = ((j & ~low) << 1) | (j & low) | (static_cast<std::size_t>(outcome) << bit);
    next[j] = amps_[i] * scale;
  }
  amps_ = std::move(next);

  bit_owner_.erase(bit_owner_.begin() + bit);
  bit_by_id_[q.value] = -1;
  for (std::size_t b = bit; b < bit_owner_.size(); ++b) bit_by_id_[bit_owner_[b]] = static_cast<int>(b);
  return outcome;
}

double QubitRegister::norm_squared() const {
  double n = 0;
  for (const auto& a : amps_) n += std::norm(a);
  return n;
}

std::vector<Complex> QubitRegister::amplitudes(const std::vector<QubitId>& order) const {
  if (static_cast<int>(order.size()) != live_qubits()) {
    throw std::invalid_argument("amplitudes: order must list every live qubit");
  }
  std::vector<int> bits;
  std::vector<bool> seen(order.size(), false);
  for (QubitId q : order) {
    int b = bit_of(q);
    if (seen[b]) throw std::invalid_argument("amplitudes: qubit listed twice");
    seen[b] = true;
    bits.push_back(b);
  }
  std::vector<Complex> out(amps_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::size_t i = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (j >> k & 1) i |= std::size_t{1} << bits[k];
    }
    out[j] = amps_[i];
  }
  return out;
}

}  // namespace photonchain::linked
