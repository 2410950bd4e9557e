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

#ifndef FROBKIT_ERROR_H_
#define FROBKIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobkit {

enum class ErrorCode {
  kNonPositive,
  kNotCoprime,
  kSameParity,
  kOrderViolation,
  kGcdNotOne,
  kTooFewGenerators,
  kOverflow,
  kTargetNotAboveFrobenius,
  kNotRepresentable,
  kBudgetExceeded,
  kInvalidArgument,
  kInternal,
};

// Stable names, used verbatim in CLI diagnostics.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frobkit

#endif  // FROBKIT_ERROR_H_
