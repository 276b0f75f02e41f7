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

#include <json.hpp>

#include <vector>

#include "qcontrol_cli/run_config.hpp"

namespace qcontrol::cli {

using Json = nlohmann::ordered_json;

/// Command output before encoding. Records are flat objects whose values
/// are numbers, booleans, strings, arrays of numbers, or arrays of
/// {label, value} objects.
struct Report {
  Json config = Json::object();
  std::vector<Json> records;
  Json summary = Json::object();
};

/// Encodes a double; non-finite values become the markers "nan", "inf" and
/// "-inf".
Json json_number(double x);

Json config_json(const RunConfig& run);

Report sweep_report(const SweepConfig& config);
Report decay_report(const DecayConfig& config);
/// Throws SingularIntervalError when cos(phi_i) is numerically zero.
Report map_analysis_report(const MapAnalysisConfig& config);

}  // namespace qcontrol::cli
