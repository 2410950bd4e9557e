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

#include "frobkit/error.h"

namespace frobkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositive:
      return "NonPositive";
    case ErrorCode::kNotCoprime:
      return "NotCoprime";
    case ErrorCode::kSameParity:
      return "SameParity";
    case ErrorCode::kOrderViolation:
      return "OrderViolation";
    case ErrorCode::kGcdNotOne:
      return "GcdNotOne";
    case ErrorCode::kTooFewGenerators:
      return "TooFewGenerators";
    case ErrorCode::kOverflow:
      return "Overflow";
    case ErrorCode::kTargetNotAboveFrobenius:
      return "TargetNotAboveFrobenius";
    case ErrorCode::kNotRepresentable:
      return "NotRepresentable";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
      code_(code) {}

}  // namespace frobkit
