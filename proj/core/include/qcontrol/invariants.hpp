// Copyright 2026 The qcontrol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcontrol/random_states.hpp"

namespace qcontrol {

/// Result of one property check run over its whole input grid.
struct InvariantOutcome {
  std::string module;
  std::string name;
  bool passed = true;
  /// Full inputs and error of the first failing case; empty on success.
  std::string counterexample;
  /// Number of individual cases evaluated.
  int cases = 0;
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Multiplies every numeric tolerance in the suite. 1 is the contract;
  /// anything else exists so a harness can check that failures surface.
  double tolerance_scale = 1.0;
  /// Size of the large random-state samples.
  int random_states = 1000;
};

/// Runs every module invariant sequentially, in a fixed order, from a
/// single seeded generator. Identical options give identical outcomes.
std::vector<InvariantOutcome> run_invariant_suite(const SuiteOptions& options);

}  // namespace qcontrol
