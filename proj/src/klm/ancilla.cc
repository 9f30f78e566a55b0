// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "photonchain/klm/ancilla.h"

#include <cmath>
#include <stdexcept>

namespace photonchain::klm {

using fock::Complex;
using fock::Occupation;

namespace {

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("teleportation order n must be >= 1");
}

Occupation concat(Occupation a, const Occupation& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Occupation tn_term(int n, int j) {
  Occupation occ(2 * n, 0);
  for (int i = 0; i < j; ++i) occ[i] = 1;
  for (int i = j; i < n; ++i) occ[n + i] = 1;
  return occ;
}

TeleportAncilla prepare_tn(int n, AncillaVariant variant) {
  check_order(n);
  std::vector<std::pair<Occupation, Complex>> terms;
  const double norm = 1.0 / std::sqrt(n + 1.0);
  for (int j = 0; j <= n; ++j) {
    double sign = (variant == AncillaVariant::modified && j % 2) ? -1.0 : 1.0;
    terms.emplace_back(tn_term(n, j), sign * norm);
  }
  return {n, variant, FockState::from_terms(2 * n, terms)};
}

LinkAncilla prepare_link_ancilla(int n) {
  check_order(n);
  std::vector<std::pair<Occupation, Complex>> terms;
  const double norm = 1.0 / (std::sqrt(2.0) * (n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Occupation blocks = concat(tn_term(n, i), tn_term(n, j));
      double sign = ((i + j) % 2) ? -1.0 : 1.0;
      terms.emplace_back(concat({1, 0}, blocks), sign * norm);
      terms.emplace_back(concat({0, 1}, blocks), norm);
    }
  }
  return {n, FockState::from_terms(2 + 4 * n, terms)};
}

FockState prepare_cz_ancilla(int n) {
  check_order(n);
  std::vector<std::pair<Occupation, Complex>> terms;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double sign = ((i * j) % 2) ? -1.0 : 1.0;
      terms.emplace_back(concat(tn_term(n, i), tn_term(n, j)), sign / (n + 1.0));
    }
  }
  return FockState::from_terms(4 * n, terms);
}

}  // namespace photonchain::klm
