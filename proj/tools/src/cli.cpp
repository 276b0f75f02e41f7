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

#include "qcontrol_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qcontrol/errors.hpp"
#include "qcontrol_cli/output.hpp"
#include "qcontrol_cli/reports.hpp"
#include "qcontrol_cli/run_config.hpp"

namespace qcontrol::cli {
namespace {

Report build_report(const RunConfig& run) {
  Report report;
  if (const auto* c = std::get_if<SweepConfig>(&run.command)) {
    report = sweep_report(*c);
  } else if (const auto* c = std::get_if<DecayConfig>(&run.command)) {
    report = decay_report(*c);
  } else {
    report = map_analysis_report(std::get<MapAnalysisConfig>(run.command));
  }
  report.config = config_json(run);
  return report;
}

int emit(const RunConfig& run, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (run.output_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(run.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << run.output_path << " for writing\n";
    return kExitUsage;
  }
  file << text;
  return file ? kExitOk : kExitFailure;
}

}  // namespace

int run_verify(const SuiteOptions& options, std::ostream& out) {
  const std::vector<InvariantOutcome> results = run_invariant_suite(options);
  std::size_t width = 0;
  for (const auto& r : results) {
    width = std::max(width, r.module.size() + 1 + r.name.size());
  }
  int failed = 0;
  const InvariantOutcome* first_failure = nullptr;
  out << "seed " << options.seed << ", " << options.random_states
      << " random states per sample\n";
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left
        << std::setw(static_cast<int>(width)) << r.module + '/' + r.name
        << "  cases=" << r.cases << '\n';
    if (!r.passed) {
      ++failed;
      if (first_failure == nullptr) first_failure = &r;
    }
  }
  out << results.size() << " invariants, " << results.size() - failed
      << " passed, " << failed << " failed\n";
  if (first_failure != nullptr) {
    out << "first counterexample (" << first_failure->module << '/'
        << first_failure->name << "): " << first_failure->counterexample
        << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  ParseOutcome parsed = parse_arguments(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  const RunConfig& run = *parsed.config;

  try {
    if (const auto* v = std::get_if<VerifyConfig>(&run.command)) {
      SuiteOptions options;
      options.seed = v->seed;
      return run_verify(options, out);
    }
    const Report report = build_report(run);
    std::ostringstream text;
    if (run.format == OutputFormat::Json) {
      write_json(report, text);
    } else {
      write_csv(report, text);
    }
    return emit(run, text.str(), out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace qcontrol::cli
