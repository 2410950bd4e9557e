// Copyright 2026 The frobkit Authors
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

#include "report.h"

#include <algorithm>
#include <sstream>

namespace frobkit::cli {

namespace {

constexpr Int kExactDoubleLimit = Int{1} << 53;

void AppendText(const Json& value, std::string& out) {
  if (value.is_string()) {
    out += value.get<std::string>();
  } else if (value.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) out += ", ";
      AppendText(value[i], out);
    }
    out += ']';
  } else if (value.is_object()) {
    out += '{';
    bool first = true;
    for (const auto& [key, item] : value.items()) {
      if (!first) out += ", ";
      first = false;
      out += key + ": ";
      AppendText(item, out);
    }
    out += '}';
  } else {
    out += value.dump();
  }
}

std::string Text(const Json& value) {
  std::string out;
  AppendText(value, out);
  return out;
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

Json Report::ToJson() const {
  Json checks_json = Json::array();
  for (const Check& c : checks) {
    checks_json.push_back({{"name", c.name}, {"pass", c.passed}});
  }
  return {{"command", command},
          {"inputs", inputs},
          {"result", result},
          {"checks", checks_json}};
}

Report Report::FromJson(const Json& json) {
  Report report;
  report.command = json.at("command").get<std::string>();
  report.inputs = json.at("inputs");
  report.result = json.at("result");
  for (const Json& c : json.at("checks")) {
    report.checks.push_back(
        {c.at("name").get<std::string>(), c.at("pass").get<bool>()});
  }
  return report;
}

Json IntToJson(Int v) {
  if (v <= kExactDoubleLimit && v >= -kExactDoubleLimit) {
    return static_cast<std::int64_t>(v);
  }
  return ToString(v);
}

Int IntFromJson(const Json& json) {
  if (json.is_string()) return ParseInt(json.get<std::string>());
  return json.get<std::int64_t>();
}

Json IntsToJson(std::span<const Int> values) {
  Json out = Json::array();
  for (Int v : values) out.push_back(IntToJson(v));
  return out;
}

std::string RenderJson(const Report& report) {
  return report.ToJson().dump(2) + "\n";
}

std::string RenderText(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  if (!report.inputs.empty()) {
    out << "inputs:\n";
    for (const auto& [key, value] : report.inputs.items()) {
      out << "  " << key << ": " << Text(value) << "\n";
    }
  }
  if (report.result.is_object()) {
    out << "result:\n";
    for (const auto& [key, value] : report.result.items()) {
      out << "  " << key << ": " << Text(value) << "\n";
    }
  } else {
    out << "result: " << Text(report.result) << "\n";
  }
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const Check& c : report.checks) {
      out << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
    }
  }
  return out.str();
}

}  // namespace frobkit::cli
