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

#include "frobkit/closed_forms.h"

namespace frobkit {

FrobeniusValue SylvesterFrobenius(Int a, Int b) {
  if (a <= 0 || b <= 0) {
    throw Error(ErrorCode::kNonPositive, "generators must be positive");
  }
  if (Gcd(a, b) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "gcd(" + ToString(a) + ", " + ToString(b) + ") != 1");
  }
  if (a == 1 || b == 1) return {-1};
  return {CheckedSub(CheckedSub(CheckedMul(a, b), a), b)};
}

FrobeniusValue PythagoreanFrobenius(const TripleParams& params) {
  const Int m = params.m();
  const Int n = params.n();
  // m^2 + 2mn - n^2 - 2m - 2n
  Int inner = CheckedMul(m, m);
  inner = CheckedAdd(inner, CheckedMul(2, CheckedMul(m, n)));
  inner = CheckedSub(inner, CheckedMul(n, n));
  inner = CheckedSub(inner, CheckedMul(2, CheckedAdd(m, n)));
  return {CheckedMul(m, inner)};
}

}  // namespace frobkit
