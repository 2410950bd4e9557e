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

#ifndef FROBKIT_CLOSED_FORMS_H_
#define FROBKIT_CLOSED_FORMS_H_

#include "frobkit/domain.h"
#include "frobkit/integer.h"

namespace frobkit {

// Frobenius number. -1 means every nonnegative integer is representable.
struct FrobeniusValue {
  Int value = -1;

  friend bool operator==(const FrobeniusValue&, const FrobeniusValue&) =
      default;
};

// a*b - a - b for coprime a, b >= 1; -1 when either is 1.
FrobeniusValue SylvesterFrobenius(Int a, Int b);

// Frobenius number of (m^2 - n^2, 2mn, m^2 + n^2), evaluated as
// m (m^2 + 2mn - n^2 - 2m - 2n).
FrobeniusValue PythagoreanFrobenius(const TripleParams& params);

}  // namespace frobkit

#endif  // FROBKIT_CLOSED_FORMS_H_
