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

#include <iosfwd>

#include "qcontrol/invariants.hpp"

namespace qcontrol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by main() and the tests. Returns the process exit
/// code: 0 on success, 2 for bad arguments (including a singular map
/// interval), 1 for numeric failure or a failed invariant.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

/// Runs the invariant suite and prints the pass/fail table. Exposed so
/// tests can run it with non-default options that the command line does
/// not offer.
int run_verify(const SuiteOptions& options, std::ostream& out);

}  // namespace qcontrol::cli
