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

#include "qcontrol_cli/run_config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <map>
#include <ostream>
#include <string>

namespace qcontrol::cli {
namespace {

const std::map<std::string, BellSign> kSigns{{"plus", BellSign::Plus},
                                             {"minus", BellSign::Minus}};
const std::map<std::string, RotationAxis> kAxes{{"z", RotationAxis::Z},
                                                {"x", RotationAxis::X}};
const std::map<std::string, QubitLabel> kQubits{{"A", QubitLabel::A},
                                                {"B", QubitLabel::B}};
const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

void add_output_options(CLI::App& sub, RunConfig& run) {
  sub.add_option("--format", run.format, "Output encoding")
      ->transform(CLI::CheckedTransformer(kFormats))
      ->option_text("csv|json");
  sub.add_option("--out", run.output_path,
                 "Write to this file instead of standard output");
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw ArgumentError(std::string(name) + " must be a finite number");
  }
}

void require_steps(int steps) {
  if (steps < 2) throw ArgumentError("--steps must be at least 2");
}

struct Validator {
  void operator()(const SweepConfig& c) const {
    require_finite(c.phi_start, "--phi-start");
    require_finite(c.phi_end, "--phi-end");
    require_finite(c.phi_b_start, "--phi-b-start");
    require_finite(c.phi_b_end, "--phi-b-end");
    require_steps(c.steps);
  }
  void operator()(const DecayConfig& c) const {
    require_finite(c.gamma_a, "--gamma-a");
    require_finite(c.gamma_b, "--gamma-b");
    require_finite(c.t_max, "--t-max");
    if (c.gamma_a < 0.0 || c.gamma_b < 0.0) {
      throw ArgumentError("decay rates must be non-negative");
    }
    if (c.t_max <= 0.0) throw ArgumentError("--t-max must be positive");
    require_steps(c.steps);
  }
  void operator()(const MapAnalysisConfig& c) const {
    require_finite(c.phi_i, "--phi-i");
    require_finite(c.phi_f, "--phi-f");
  }
  void operator()(const VerifyConfig&) const {}
};

}  // namespace

std::string RunConfig::command_name() const {
  switch (command.index()) {
    case 0: return "sweep";
    case 1: return "decay";
    case 2: return "map-analysis";
    default: return "verify";
  }
}

void validate(const RunConfig& config) {
  std::visit(Validator{}, config.command);
}

ParseOutcome parse_arguments(int argc, const char* const* argv,
                             std::ostream& out, std::ostream& err) {
  CLI::App app{"Controlled-qubit entanglement toolkit"};
  app.name("qcontrol");
  app.require_subcommand(1);

  RunConfig run;
  SweepConfig sweep;
  DecayConfig decay;
  MapAnalysisConfig map;
  VerifyConfig verify;

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate entanglement along an angle grid");
  sweep_cmd->add_option("--sign", sweep.sign, "Initial Bell state")
      ->transform(CLI::CheckedTransformer(kSigns))
      ->option_text("plus|minus");
  sweep_cmd->add_option("--phi-start", sweep.phi_start, "First angle (rad)");
  sweep_cmd->add_option("--phi-end", sweep.phi_end, "Last angle (rad)");
  sweep_cmd->add_option("--steps", sweep.steps, "Grid points per axis");
  auto* second = sweep_cmd
                     ->add_option("--second-axis", sweep.second_axis,
                                  "Rotation axis of the B interaction")
                     ->transform(CLI::CheckedTransformer(kAxes))
                     ->option_text("z|x");
  sweep_cmd->add_option("--phi-b-start", sweep.phi_b_start,
                        "First B angle (rad)")
      ->needs(second);
  sweep_cmd->add_option("--phi-b-end", sweep.phi_b_end, "Last B angle (rad)")
      ->needs(second);
  add_output_options(*sweep_cmd, run);

  auto* decay_cmd =
      app.add_subcommand("decay", "Exponential decay and sudden death");
  decay_cmd->add_option("--gamma-a", decay.gamma_a, "Decay rate of A");
  decay_cmd->add_option("--gamma-b", decay.gamma_b, "Decay rate of B");
  decay_cmd->add_option("--axis", decay.axis, "Rotation axis for B")
      ->transform(CLI::CheckedTransformer(kAxes))
      ->option_text("z|x");
  decay_cmd->add_option("--sign", decay.sign, "Initial Bell state")
      ->transform(CLI::CheckedTransformer(kSigns))
      ->option_text("plus|minus");
  decay_cmd->add_option("--t-max", decay.t_max, "Last time");
  decay_cmd->add_option("--steps", decay.steps, "Number of time points");
  add_output_options(*decay_cmd, run);

  auto* map_cmd = app.add_subcommand(
      "map-analysis", "Classify the map between two interaction angles");
  map_cmd->add_option("--qubit", map.qubit, "Qubit the map acts on")
      ->transform(CLI::CheckedTransformer(kQubits))
      ->option_text("A|B");
  map_cmd->add_option("--axis", map.axis, "Rotation axis")
      ->transform(CLI::CheckedTransformer(kAxes))
      ->option_text("z|x");
  map_cmd->add_option("--phi-i", map.phi_i, "Initial angle (rad)")
      ->required();
  map_cmd->add_option("--phi-f", map.phi_f, "Final angle (rad)")->required();
  map_cmd->add_option("--seed", map.seed, "Seed for the witness search");
  add_output_options(*map_cmd, run);

  auto* verify_cmd =
      app.add_subcommand("verify", "Run every invariant check");
  verify_cmd->add_option("--seed", verify.seed, "Random-state seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? 0 : 2};
  }

  if (*sweep_cmd) {
    run.command = sweep;
  } else if (*decay_cmd) {
    run.command = decay;
  } else if (*map_cmd) {
    run.command = map;
  } else {
    run.command = verify;
  }
  try {
    validate(run);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return {std::nullopt, 2};
  }
  return {std::move(run), 0};
}

}  // namespace qcontrol::cli
