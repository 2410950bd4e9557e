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

#ifndef FROBKIT_TOOLS_COMMANDS_H_
#define FROBKIT_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/domain.h"
#include "frobkit/oracle.h"
#include "report.h"

namespace frobkit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

// Comma-separated decimal integers; whitespace is ignored.
std::vector<Int> ParseGeneratorList(std::string_view text);

// Oracle options with the table cap taken from FROBKIT_BUDGET when set.
OracleOptions OptionsFromEnvironment();

struct FrobeniusArgs {
  std::optional<Int> m;
  std::optional<Int> n;
  std::optional<std::vector<Int>> generators;
  bool check = false;
};
Report RunFrobenius(const FrobeniusArgs& args, const OracleOptions& options);

struct RepresentArgs {
  Int m = 0;
  Int n = 0;
  Int target = 0;
  bool trace = false;
};
Report RunRepresent(const RepresentArgs& args, const OracleOptions& options);

struct VerifyArgs {
  std::int64_t max_m = 20;
  std::int64_t rep_window = 2000;
  std::int64_t b_max = 500;
  unsigned jobs = 1;
};
// Runs every check for every valid (m, n) with m <= max_m. Cells may be
// evaluated on several threads; the report is always in (m, n) order.
Report RunVerify(const VerifyArgs& args, const OracleOptions& options);

Report RunApery(const std::vector<Int>& generators, std::optional<Int> modulus,
                const OracleOptions& options);
Report RunGaps(const std::vector<Int>& generators,
               const OracleOptions& options);
Report RunDenumerant(const std::vector<Int>& generators, Int target,
                     const OracleOptions& options);

// Full command-line entry point. Writes reports to out and diagnostics to
// err; returns the process exit code.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace frobkit::cli

#endif  // FROBKIT_TOOLS_COMMANDS_H_
