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

// Explicit representations of integers above the Frobenius number of a
// primitive Pythagorean triple (m^2 - n^2, 2mn, m^2 + n^2).
//
// For N > A the construction is:
//   1. pick a, b >= 0 with a (m^2 - n^2) - b (2mn) = N, a minimal;
//   2. pick the least y >= 0 whose interval [(b + yn) / m, ym / n] holds an
//      integer, and let x be the least such integer;
//   3. N = (a - ym - xn)(m^2 - n^2) + (xm - yn - b)(2mn) + (ym - xn)(m^2 + n^2)
//      with all three coefficients nonnegative.
// All interval tests are exact integer comparisons.

#ifndef FROBKIT_CONSTRUCTIVE_H_
#define FROBKIT_CONSTRUCTIVE_H_

#include <optional>

#include "frobkit/domain.h"
#include "frobkit/integer.h"
#include "frobkit/oracle.h"

namespace frobkit {

// a (m^2 - n^2) - b (2mn) == target.
struct DiophantinePair {
  Int a = 0;
  Int b = 0;
  Int target = 0;

  friend bool operator==(const DiophantinePair&, const DiophantinePair&) =
      default;
};

// Smallest y >= 0 (and smallest x in its interval) for offset b >= 0.
LemmaWitness LemmaIntervalSearch(Int b, const TripleParams& params);

// (ym + xn)(m^2 - n^2) <= A + (m^2 - n^2) + b (2mn), evaluated exactly.
bool LemmaBoundHolds(const LemmaWitness& witness, const TripleParams& params);

// Pair with the least a >= 0 such that b >= 0. Requires target >= 1.
DiophantinePair SolveDiophantine(Int target, const TripleParams& params);

struct Construction {
  DiophantinePair pair;
  LemmaWitness witness;
  Representation rep;  // coefficients of (m^2 - n^2, 2mn, m^2 + n^2)
};

// Full trace of the construction for n > A. Throws kTargetNotAboveFrobenius
// when n <= A.
Construction ConstructWithTrace(Int n, const TripleParams& params);

Representation ConstructRepresentation(Int n, const TripleParams& params);

// Construction above A, bounded oracle search at or below it. Returns
// std::nullopt for non-representable n.
std::optional<Representation> RepresentAny(
    Int n, const TripleParams& params,
    const OracleOptions& options = OracleOptions());

}  // namespace frobkit

#endif  // FROBKIT_CONSTRUCTIVE_H_
