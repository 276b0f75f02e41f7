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
#include <string>

#include "qcontrol_cli/reports.hpp"

namespace qcontrol::cli {

/// One object {config, records, summary}; each record on its own line.
void write_json(const Report& report, std::ostream& out);

/// Header row from the first record's keys, one row per record, then the
/// config and summary entries as trailing "# key: value" lines.
void write_csv(const Report& report, std::ostream& out);

/// The CSV rendering of a single value (numbers in shortest round-trip
/// form, lists joined with ';', labelled values as "label:value").
std::string csv_cell(const Json& value);

}  // namespace qcontrol::cli
