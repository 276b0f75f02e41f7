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

#include "qcontrol_cli/output.hpp"

#include <charconv>
#include <ostream>

namespace qcontrol::cli {
namespace {

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

bool is_labelled(const Json& v) {
  return v.is_object() && v.size() == 2 && v.contains("label") &&
         v.contains("value");
}

std::string scalar_text(const Json& v) {
  switch (v.type()) {
    case Json::value_t::number_float:
      return shortest(v.get<double>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::boolean:
    case Json::value_t::null:
      return v.dump();
    case Json::value_t::string:
      return v.get<std::string>();
    default:
      return v.dump();
  }
}

std::string quoted(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string csv_cell(const Json& value) {
  if (!value.is_array()) return scalar_text(value);
  std::string out;
  bool first = true;
  for (const Json& item : value) {
    if (!first) out += ';';
    first = false;
    if (is_labelled(item)) {
      out += scalar_text(item["label"]) + ':' + scalar_text(item["value"]);
    } else if (item.is_primitive()) {
      out += scalar_text(item);
    } else {
      return value.dump();
    }
  }
  return out;
}

void write_json(const Report& report, std::ostream& out) {
  out << "{\n  \"config\": " << report.config.dump() << ",\n  \"records\": [";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    out << (i == 0 ? "\n    " : ",\n    ") << report.records[i].dump();
  }
  out << (report.records.empty() ? "]" : "\n  ]") << ",\n  \"summary\": "
      << report.summary.dump() << "\n}\n";
}

void write_csv(const Report& report, std::ostream& out) {
  if (!report.records.empty()) {
    bool first = true;
    for (const auto& item : report.records.front().items()) {
      out << (first ? "" : ",") << item.key();
      first = false;
    }
    out << '\n';
    for (const Json& rec : report.records) {
      first = true;
      for (const auto& item : rec.items()) {
        out << (first ? "" : ",") << quoted(csv_cell(item.value()));
        first = false;
      }
      out << '\n';
    }
  }
  for (const auto& item : report.config.items()) {
    out << "# config." << item.key() << ": " << csv_cell(item.value()) << '\n';
  }
  for (const auto& item : report.summary.items()) {
    out << "# " << item.key() << ": " << csv_cell(item.value()) << '\n';
  }
}

}  // namespace qcontrol::cli
