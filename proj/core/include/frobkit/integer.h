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

// Checked 128-bit integer arithmetic. Every arithmetic step in the library
// goes through these helpers; overflow raises ErrorCode::kOverflow.

#ifndef FROBKIT_INTEGER_H_
#define FROBKIT_INTEGER_H_

#include <string>
#include <string_view>

#include "frobkit/error.h"

namespace frobkit {

using Int = __int128;

Int CheckedAdd(Int a, Int b);
Int CheckedSub(Int a, Int b);
Int CheckedMul(Int a, Int b);

inline Int Abs(Int a) { return a < 0 ? CheckedSub(0, a) : a; }

// Nonnegative gcd; Gcd(0, 0) == 0.
Int Gcd(Int a, Int b);

// Floor and ceiling of a / b for b > 0.
Int FloorDiv(Int a, Int b);
Int CeilDiv(Int a, Int b);

// Nonnegative remainder of a modulo b > 0.
Int Mod(Int a, Int b);

struct BezoutResult {
  Int gcd;
  Int x;
  Int y;  // a * x + b * y == gcd
};

// Iterative extended Euclid for a, b >= 0.
BezoutResult ExtendedGcd(Int a, Int b);

// Inverse of a modulo m > 1, in [0, m). Throws kNotCoprime when gcd != 1.
Int ModInverse(Int a, Int m);

std::string ToString(Int v);

// Parses an optionally signed decimal integer. Throws kInvalidArgument on
// malformed text and kOverflow when the value does not fit.
Int ParseInt(std::string_view text);

}  // namespace frobkit

#endif  // FROBKIT_INTEGER_H_
