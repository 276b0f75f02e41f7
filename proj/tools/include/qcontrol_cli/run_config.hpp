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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "qcontrol/dynamics.hpp"
#include "qcontrol/pauli.hpp"
#include "qcontrol/random_states.hpp"

namespace qcontrol::cli {

enum class OutputFormat { Csv, Json };

struct SweepConfig {
  BellSign sign = BellSign::Plus;
  double phi_start = 0.0;
  double phi_end = 3.141592653589793;
  int steps = 181;
  // Present when qubit B also interacts with its own control. The grid is
  // then steps x steps, with phi varying slowest.
  std::optional<RotationAxis> second_axis;
  double phi_b_start = 0.0;
  double phi_b_end = 3.141592653589793;
};

struct DecayConfig {
  double gamma_a = 1.0;
  double gamma_b = 1.0;
  RotationAxis axis = RotationAxis::X;
  BellSign sign = BellSign::Plus;
  double t_max = 3.0;
  int steps = 61;
};

struct MapAnalysisConfig {
  QubitLabel qubit = QubitLabel::A;
  RotationAxis axis = RotationAxis::Z;
  double phi_i = 0.0;
  double phi_f = 0.0;
  std::uint64_t seed = kDefaultSeed;
};

struct VerifyConfig {
  std::uint64_t seed = kDefaultSeed;
};

using CommandConfig =
    std::variant<SweepConfig, DecayConfig, MapAnalysisConfig, VerifyConfig>;

struct RunConfig {
  CommandConfig command;
  OutputFormat format = OutputFormat::Csv;
  /// Empty means standard output.
  std::string output_path;

  std::string command_name() const;
};

/// Thrown for arguments that parse but make no sense (non-finite numbers,
/// too few steps, reversed ranges).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Either a parsed configuration or the exit code the process should end
/// with (help requested, or a usage error already reported on err).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = 0;
};

ParseOutcome parse_arguments(int argc, const char* const* argv,
                             std::ostream& out, std::ostream& err);

/// Throws ArgumentError describing the first invalid setting.
void validate(const RunConfig& config);

}  // namespace qcontrol::cli
