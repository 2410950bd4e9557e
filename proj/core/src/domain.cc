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

#include "frobkit/domain.h"

#include <algorithm>

namespace frobkit {

TripleParams MakeTripleParams(Int m, Int n) {
  if (m <= 0 || n <= 0) {
    throw Error(ErrorCode::kNonPositive, "m and n must be positive (m=" +
                                             ToString(m) + ", n=" +
                                             ToString(n) + ")");
  }
  if (Gcd(m, n) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "gcd(m, n) = " + ToString(Gcd(m, n)) + ", must be 1");
  }
  if (m % 2 == n % 2) {
    throw Error(ErrorCode::kSameParity,
                "m and n must have opposite parity (m=" + ToString(m) +
                    ", n=" + ToString(n) + ")");
  }
  if (m <= n) {
    throw Error(ErrorCode::kOrderViolation,
                "m must exceed n (m=" + ToString(m) + ", n=" + ToString(n) +
                    ")");
  }
  return TripleParams(m, n);
}

PythTriple TripleFromParams(const TripleParams& params) {
  const Int m2 = CheckedMul(params.m(), params.m());
  const Int n2 = CheckedMul(params.n(), params.n());
  return PythTriple{CheckedSub(m2, n2),
                    CheckedMul(2, CheckedMul(params.m(), params.n())),
                    CheckedAdd(m2, n2)};
}

GeneratorSet MakeGeneratorSet(std::span<const Int> values) {
  std::vector<Int> gens(values.begin(), values.end());
  for (Int g : gens) {
    if (g <= 0) {
      throw Error(ErrorCode::kNonPositive,
                  "generator " + ToString(g) + " is not positive");
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() < 2) {
    throw Error(ErrorCode::kTooFewGenerators,
                "at least two distinct generators are required");
  }
  Int g = 0;
  for (Int v : gens) g = Gcd(g, v);
  if (g != 1) {
    throw Error(ErrorCode::kGcdNotOne,
                "generators share the factor " + ToString(g));
  }
  return GeneratorSet(std::move(gens));
}

GeneratorSet MakeGeneratorSet(std::initializer_list<Int> values) {
  return MakeGeneratorSet(std::span<const Int>(values.begin(), values.size()));
}

GeneratorSet GeneratorSetFromTriple(const PythTriple& triple) {
  const std::array<Int, 3> gens = triple.generators();
  return MakeGeneratorSet(gens);
}

Int Dot(std::span<const Int> coeffs, std::span<const Int> gens) {
  if (coeffs.size() != gens.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "coefficient count does not match generator count");
  }
  Int sum = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    sum = CheckedAdd(sum, CheckedMul(coeffs[i], gens[i]));
  }
  return sum;
}

bool Represents(const Representation& rep, std::span<const Int> gens,
                Int target) {
  if (rep.coeffs.size() != gens.size()) return false;
  for (Int c : rep.coeffs) {
    if (c < 0) return false;
  }
  return Dot(rep.coeffs, gens) == target;
}

}  // namespace frobkit
