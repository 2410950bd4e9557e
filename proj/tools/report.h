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

#ifndef FROBKIT_TOOLS_REPORT_H_
#define FROBKIT_TOOLS_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "frobkit/integer.h"
#include "json.hpp"

namespace frobkit::cli {

using Json = nlohmann::json;

struct Check {
  std::string name;
  bool passed = false;

  friend bool operator==(const Check&, const Check&) = default;
};

// Output of every subcommand. Serialized with the top-level keys
// `command`, `inputs`, `result`, `checks`.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::vector<Check> checks;

  bool all_passed() const;

  Json ToJson() const;
  static Report FromJson(const Json& json);

  friend bool operator==(const Report&, const Report&) = default;
};

// Integers up to 2^53 in magnitude become JSON numbers; larger ones become
// decimal strings.
Json IntToJson(Int v);
Int IntFromJson(const Json& json);
Json IntsToJson(std::span<const Int> values);

std::string RenderJson(const Report& report);
std::string RenderText(const Report& report);

}  // namespace frobkit::cli

#endif  // FROBKIT_TOOLS_REPORT_H_
