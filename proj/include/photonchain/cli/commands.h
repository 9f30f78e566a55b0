// Copyright 2026 The photonchain Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "photonchain/cost/cost_model.h"

namespace photonchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternalError = 2;

// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Published per-gate costs for the policies that have one.
std::optional<double> reference_cost(const cost::ConstructionPolicy& policy);

}  // namespace photonchain::cli
