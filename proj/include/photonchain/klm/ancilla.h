// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "photonchain/fock/fock_state.h"

namespace photonchain::klm {

using fock::FockState;

enum class AncillaVariant { plain, modified };

// |t_n> over 2n modes [in_0..in_{n-1}, out_0..out_{n-1}]:
//   sum_j s^j |1^j 0^{n-j}>_in |0^j 1^{n-j}>_out / sqrt(n+1),
// with s = 1 (plain) or -1 (modified).
struct TeleportAncilla {
  int n = 0;
  AncillaVariant variant = AncillaVariant::plain;
  FockState state;
};

TeleportAncilla prepare_tn(int n, AncillaVariant variant = AncillaVariant::plain);

// Single term j of |t_n> as an occupation over 2n modes.
fock::Occupation tn_term(int n, int j);

// Link-addition ancilla over 2 + 4n modes [c5, c6, block1 (2n), block2 (2n)]:
//   (|1,0> |t~>_1 |t~>_2 + |0,1> |t>_1 |t>_2) / sqrt(2).
struct LinkAncilla {
  int n = 0;
  FockState state;
};

LinkAncilla prepare_link_ancilla(int n);

// CZ ancilla over 4n modes [blockA (2n), blockB (2n)]:
//   sum_{i,j} (-1)^{ij} |t term i>_A |t term j>_B / (n+1).
FockState prepare_cz_ancilla(int n);

}  // namespace photonchain::klm
