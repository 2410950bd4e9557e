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

#ifndef FROBKIT_DOMAIN_H_
#define FROBKIT_DOMAIN_H_

#include <array>
#include <span>
#include <vector>

#include "frobkit/integer.h"

namespace frobkit {

// Generator pair (m, n) of a primitive Pythagorean triple:
// m > n >= 1, gcd(m, n) = 1, and exactly one of m, n even.
class TripleParams {
 public:
  Int m() const { return m_; }
  Int n() const { return n_; }

  friend bool operator==(const TripleParams&, const TripleParams&) = default;

 private:
  friend TripleParams MakeTripleParams(Int m, Int n);
  TripleParams(Int m, Int n) : m_(m), n_(n) {}

  Int m_;
  Int n_;
};

// Validation order: NonPositive, NotCoprime, SameParity, OrderViolation.
// The first failing invariant is reported.
TripleParams MakeTripleParams(Int m, Int n);

// (m^2 - n^2, 2mn, m^2 + n^2). p and r are odd, q is even.
struct PythTriple {
  Int p;
  Int q;
  Int r;

  std::array<Int, 3> generators() const { return {p, q, r}; }

  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

PythTriple TripleFromParams(const TripleParams& params);

// Sorted, duplicate-free, gcd-one list of at least two positive generators.
// A generator equal to 1 is allowed.
class GeneratorSet {
 public:
  std::span<const Int> gens() const { return gens_; }
  Int min() const { return gens_.front(); }
  Int max() const { return gens_.back(); }
  std::size_t size() const { return gens_.size(); }
  bool contains_one() const { return gens_.front() == 1; }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  friend GeneratorSet MakeGeneratorSet(std::span<const Int> values);
  explicit GeneratorSet(std::vector<Int> gens) : gens_(std::move(gens)) {}

  std::vector<Int> gens_;
};

GeneratorSet MakeGeneratorSet(std::span<const Int> values);
GeneratorSet MakeGeneratorSet(std::initializer_list<Int> values);
GeneratorSet GeneratorSetFromTriple(const PythTriple& triple);

// Nonnegative coefficients, in the order of the generator list they were
// built against.
struct Representation {
  std::vector<Int> coeffs;

  friend bool operator==(const Representation&, const Representation&) =
      default;
};

// Sum of coeffs[i] * gens[i]; sizes must match.
Int Dot(std::span<const Int> coeffs, std::span<const Int> gens);

// True when every coefficient is >= 0 and the dot product equals target.
bool Represents(const Representation& rep, std::span<const Int> gens,
                Int target);

struct LemmaWitness {
  Int x = 0;
  Int y = 0;
  Int b = 0;

  friend bool operator==(const LemmaWitness&, const LemmaWitness&) = default;
};

}  // namespace frobkit

#endif  // FROBKIT_DOMAIN_H_
