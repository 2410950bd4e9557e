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

#include "frobkit/constructive.h"

#include <algorithm>
#include <array>

#include "frobkit/closed_forms.h"

namespace frobkit {

LemmaWitness LemmaIntervalSearch(Int b, const TripleParams& params) {
  if (b < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "offset b=" + ToString(b) + " is negative");
  }
  const Int m = params.m();
  const Int n = params.n();
  const PythTriple triple = TripleFromParams(params);
  // From this y on the interval is at least 1 long.
  const Int y_cap = CeilDiv(CheckedMul(n, CheckedAdd(b, m)), triple.p);
  for (Int y = 0; y <= y_cap; ++y) {
    const Int lo = CeilDiv(CheckedAdd(b, CheckedMul(y, n)), m);
    const Int hi = FloorDiv(CheckedMul(y, m), n);
    if (lo <= hi) return {lo, y, b};
  }
  throw Error(ErrorCode::kInternal, "interval search passed its cap");
}

bool LemmaBoundHolds(const LemmaWitness& witness, const TripleParams& params) {
  const PythTriple triple = TripleFromParams(params);
  const Int a = PythagoreanFrobenius(params).value;
  const Int lhs = CheckedMul(CheckedAdd(CheckedMul(witness.y, params.m()),
                                        CheckedMul(witness.x, params.n())),
                             triple.p);
  const Int rhs =
      CheckedAdd(CheckedAdd(a, triple.p), CheckedMul(witness.b, triple.q));
  return lhs <= rhs;
}

DiophantinePair SolveDiophantine(Int target, const TripleParams& params) {
  if (target < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "target " + ToString(target) + " must be positive");
  }
  const PythTriple triple = TripleFromParams(params);
  // a p = target (mod q), least representative first.
  const Int inverse = ModInverse(triple.p, triple.q);
  Int a = Mod(CheckedMul(Mod(target, triple.q), inverse), triple.q);
  // Lift within the residue class until b = (a p - target) / q >= 0.
  const Int shortfall = CheckedSub(target, CheckedMul(a, triple.p));
  if (shortfall > 0) {
    const Int lifts = CeilDiv(shortfall, CheckedMul(triple.p, triple.q));
    a = CheckedAdd(a, CheckedMul(lifts, triple.q));
  }
  const Int b = CheckedSub(CheckedMul(a, triple.p), target) / triple.q;
  return {a, b, target};
}

Construction ConstructWithTrace(Int n, const TripleParams& params) {
  const Int frobenius = PythagoreanFrobenius(params).value;
  if (n <= frobenius) {
    throw Error(ErrorCode::kTargetNotAboveFrobenius,
                "target " + ToString(n) + " <= frobenius=" +
                    ToString(frobenius));
  }
  const Int m = params.m();
  const Int k = params.n();
  Construction out;
  out.pair = SolveDiophantine(n, params);
  out.witness = LemmaIntervalSearch(out.pair.b, params);
  const Int x = out.witness.x;
  const Int y = out.witness.y;
  const Int ym = CheckedMul(y, m);
  const Int xn = CheckedMul(x, k);
  out.rep.coeffs = {
      CheckedSub(out.pair.a, CheckedAdd(ym, xn)),
      CheckedSub(CheckedSub(CheckedMul(x, m), CheckedMul(y, k)), out.pair.b),
      CheckedSub(ym, xn),
  };
  const std::array<Int, 3> gens = TripleFromParams(params).generators();
  if (!Represents(out.rep, gens, n)) {
    throw Error(ErrorCode::kInternal,
                "construction failed for target " + ToString(n));
  }
  return out;
}

Representation ConstructRepresentation(Int n, const TripleParams& params) {
  return ConstructWithTrace(n, params).rep;
}

std::optional<Representation> RepresentAny(Int n, const TripleParams& params,
                                           const OracleOptions& options) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "target " + ToString(n) + " is negative");
  }
  if (n > PythagoreanFrobenius(params).value) {
    return ConstructRepresentation(n, params);
  }
  const PythTriple triple = TripleFromParams(params);
  const GeneratorSet set = GeneratorSetFromTriple(triple);
  std::optional<Representation> sorted = FindRepresentationDp(n, set, options);
  if (!sorted) return std::nullopt;

  // The generator set is sorted; map back to (p, q, r) order.
  const std::span<const Int> gens = set.gens();
  Representation rep;
  for (Int g : triple.generators()) {
    const auto idx = std::find(gens.begin(), gens.end(), g) - gens.begin();
    rep.coeffs.push_back(sorted->coeffs[static_cast<std::size_t>(idx)]);
  }
  return rep;
}

}  // namespace frobkit
