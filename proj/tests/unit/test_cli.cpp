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

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcontrol_cli/cli.hpp"

using Catch::Matchers::WithinAbs;
using nlohmann::json;
using qcontrol::cli::run_cli;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"qcontrol"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::initializer_list<const char*> args) {
  RunResult r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      csv.comments.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line, ',');
    } else {
      csv.rows.push_back(split(line, ','));
    }
  }
  return csv;
}

const std::string kPi = "3.141592653589793";
const std::string kHalfPi = "1.5707963267948966";
const std::string kThirdPi = "1.0471975511965976";

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"sweep", "--steps", "3"}).code == 0);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"sweep", "--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"launch"}).code == 2);
  CHECK(run({"sweep", "--unknown", "1"}).code == 2);
  CHECK(run({"sweep", "--steps", "1"}).code == 2);
  CHECK(run({"sweep", "--steps", "many"}).code == 2);
  CHECK(run({"sweep", "--phi-end", "nan"}).code == 2);
  CHECK(run({"sweep", "--phi-end", "inf"}).code == 2);
  CHECK(run({"sweep", "--sign", "neutral"}).code == 2);
  CHECK(run({"sweep", "--phi-b-start", "0.1"}).code == 2);
  CHECK(run({"decay", "--gamma-a", "-1"}).code == 2);
  CHECK(run({"decay", "--axis", "y"}).code == 2);
  CHECK(run({"map-analysis", "--phi-i", "0.1"}).code == 2);
  CHECK(run({"map-analysis", "--qubit", "C", "--phi-i", "0", "--phi-f", "0"}).code == 2);
  CHECK(run({"sweep", "--out", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("a singular interval is a usage error with a message") {
  const RunResult r = run({"map-analysis", "--phi-i", kHalfPi.c_str(), "--phi-f", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cos(phi_i)") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("sweep concurrence column is |cos phi|") {
  const json doc = run_json({"sweep", "--sign", "minus", "--phi-start", "0", "--phi-end",
                             kPi.c_str(), "--steps", "181", "--format", "json"});
  const auto& recs = doc["records"];
  REQUIRE(recs.size() == 181);
  for (const auto& r : recs) {
    CHECK_THAT(r["concurrence"].get<double>(),
               WithinAbs(std::abs(std::cos(r["phi"].get<double>())), 1e-9));
    CHECK(r["eigenvalues"].size() == 4);
  }
  CHECK(doc["config"]["sign"] == "minus");
}

TEST_CASE("sweep at the separable point") {
  const json doc = run_json({"sweep", "--phi-start", kHalfPi.c_str(), "--phi-end",
                             kHalfPi.c_str(), "--steps", "2", "--format", "json"});
  for (const auto& r : doc["records"]) {
    CHECK(r["ppt_separable"] == true);
    CHECK_THAT(r["concurrence"].get<double>(), WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("two-interaction sweep follows the closed form") {
  const json doc =
      run_json({"sweep", "--second-axis", "x", "--phi-start", "0", "--phi-end", kPi.c_str(),
                "--phi-b-start", "0", "--phi-b-end", kPi.c_str(), "--steps", "7",
                "--format", "json"});
  REQUIRE(doc["records"].size() == 49);
  for (const auto& r : doc["records"]) {
    const double a = std::abs(std::cos(r["phi"].get<double>()));
    const double b = std::abs(std::cos(r["phi_b"].get<double>()));
    CHECK_THAT(r["concurrence"].get<double>(),
               WithinAbs(0.5 * std::max(0.0, a + a * b + b - 1.0), 1e-9));
  }
}

TEST_CASE("decay summaries") {
  const json x = run_json({"decay", "--gamma-a", "1", "--gamma-b", "1", "--axis", "x",
                           "--t-max", "2", "--steps", "41", "--format", "json"});
  CHECK(x["summary"]["has_finite_death_time"] == true);
  const double ts = x["summary"]["sudden_death_time"].get<double>();
  CHECK_THAT(ts, WithinAbs(0.8813736, 1e-7));
  CHECK(x["summary"]["death_decomposition_weights"].size() == 6);
  CHECK(x["summary"]["death_decomposition_verified"] == true);
  for (const auto& r : x["records"]) {
    const double t = r["t"].get<double>();
    const double c = r["concurrence"].get<double>();
    if (t >= ts) {
      CHECK(c == 0.0);
      CHECK(r["ppt_separable"] == true);
      CHECK(r["decomposition_weights"].size() >= 6);
    } else {
      CHECK(c > 0.0);
      CHECK(r["decomposition_weights"].empty());
    }
  }

  const json a_only = run_json({"decay", "--gamma-a", "1", "--gamma-b", "0", "--format", "json"});
  CHECK(a_only["summary"]["has_finite_death_time"] == false);
  CHECK(a_only["summary"]["sudden_death_time"].is_null());
  for (const auto& r : a_only["records"]) {
    CHECK_THAT(r["concurrence"].get<double>(), WithinAbs(std::exp(-r["t"].get<double>()), 1e-12));
  }

  const json z = run_json({"decay", "--axis", "z", "--format", "json"});
  CHECK(z["summary"]["sudden_death_time"].is_null());
  for (const auto& r : z["records"]) {
    CHECK_THAT(r["concurrence"].get<double>(),
               WithinAbs(std::exp(-2.0 * r["t"].get<double>()), 1e-12));
  }
}

TEST_CASE("map analysis reports") {
  const json ncp = run_json({"map-analysis", "--phi-i", kThirdPi.c_str(), "--phi-f", "0",
                             "--format", "json"});
  const auto& r = ncp["records"][0];
  CHECK_THAT(r["factor"].get<double>(), WithinAbs(2.0, 1e-12));
  CHECK_THAT(r["choi_min_eigenvalue"].get<double>(), WithinAbs(-1.0, 1e-12));
  CHECK(r["completely_positive"] == false);
  CHECK(r["witness_label"] == "rho_plus");
  CHECK(r["domain_mapped_valid"] == true);
  CHECK_THAT(r["domain_mapped_concurrence"].get<double>(), WithinAbs(1.0, 1e-12));
  CHECK(ncp["summary"]["witness_state"].size() == 4);

  const json cp = run_json({"map-analysis", "--phi-i", "0", "--phi-f", kThirdPi.c_str(),
                            "--format", "json"});
  CHECK_THAT(cp["records"][0]["factor"].get<double>(), WithinAbs(0.5, 1e-12));
  CHECK(cp["records"][0]["completely_positive"] == true);
  CHECK(cp["records"][0]["has_witness"] == false);

  const json same = run_json({"map-analysis", "--qubit", "B", "--axis", "x", "--phi-i", "0.4",
                              "--phi-f", "0.4", "--format", "json"});
  CHECK(same["records"][0]["factor"].get<double>() == 1.0);
  CHECK(same["records"][0]["completely_positive"] == true);
}

TEST_CASE("CSV and JSON carry identical numbers") {
  const std::vector<std::vector<const char*>> commands = {
      {"sweep", "--sign", "plus", "--steps", "13"},
      {"sweep", "--second-axis", "z", "--steps", "4"},
      {"decay", "--gamma-a", "0.7", "--gamma-b", "1.3", "--steps", "17"},
      {"map-analysis", "--phi-i", "1.2", "--phi-f", "0.1"},
  };
  for (const auto& base : commands) {
    std::vector<const char*> argv{"qcontrol"};
    argv.insert(argv.end(), base.begin(), base.end());
    std::ostringstream csv_out, json_out, err;
    auto with = [&](const char* fmt, std::ostream& out) {
      std::vector<const char*> a = argv;
      a.push_back("--format");
      a.push_back(fmt);
      return run_cli(static_cast<int>(a.size()), a.data(), out, err);
    };
    REQUIRE(with("csv", csv_out) == 0);
    REQUIRE(with("json", json_out) == 0);
    const Csv csv = parse_csv(csv_out.str());
    const json doc = json::parse(json_out.str());
    REQUIRE(csv.rows.size() == doc["records"].size());
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      const json& rec = doc["records"][i];
      REQUIRE(csv.header.size() == rec.size());
      for (std::size_t k = 0; k < csv.header.size(); ++k) {
        const json& v = rec[csv.header[k]];
        const std::string& cell = csv.rows[i][k];
        if (v.is_number()) {
          CHECK(std::strtod(cell.c_str(), nullptr) == v.get<double>());
        } else if (v.is_boolean()) {
          CHECK(cell == (v.get<bool>() ? "true" : "false"));
        } else if (v.is_array() && !v.empty() && v[0].is_number()) {
          const auto parts = split(cell, ';');
          REQUIRE(parts.size() == v.size());
          for (std::size_t j = 0; j < parts.size(); ++j) {
            CHECK(std::strtod(parts[j].c_str(), nullptr) == v[j].get<double>());
          }
        } else if (v.is_array() && !v.empty()) {
          const auto parts = split(cell, ';');
          REQUIRE(parts.size() == v.size());
          for (std::size_t j = 0; j < parts.size(); ++j) {
            const auto lv = split(parts[j], ':');
            CHECK(lv[0] == v[j]["label"]);
            CHECK(std::strtod(lv[1].c_str(), nullptr) == v[j]["value"].get<double>());
          }
        }
      }
    }
  }
}

TEST_CASE("csv layout") {
  const RunResult r = run({"sweep", "--steps", "3"});
  const Csv csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{
                          "phi", "concurrence", "eigenvalues", "w_fidelity_plus",
                          "w_fidelity_minus", "ghz_fidelity", "mermin_max_abs",
                          "ppt_separable", "nonzero_three_point"});
  CHECK(csv.rows.size() == 3);
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(r.out.find("# config.command: sweep\n") != std::string::npos);
}

TEST_CASE("runs are deterministic") {
  for (auto args : {std::initializer_list<const char*>{"sweep", "--steps", "25"},
                    std::initializer_list<const char*>{"decay", "--format", "json"},
                    std::initializer_list<const char*>{"verify", "--seed", "99"}}) {
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output can go to a file") {
  const std::string path = "cli_test_output.json";
  REQUIRE(run({"decay", "--format", "json", "--out", path.c_str()}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"decay", "--format", "json"}).out);
  std::remove(path.c_str());
}

TEST_CASE("verify passes by default and fails under a perturbed tolerance") {
  const RunResult ok = run({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("0 failed") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  qcontrol::SuiteOptions broken;
  broken.tolerance_scale = 0.0;
  std::ostringstream out;
  CHECK(qcontrol::cli::run_verify(broken, out) == 1);
  CHECK(out.str().find("counterexample") != std::string::npos);
  CHECK(out.str().find("FAIL") != std::string::npos);
}
