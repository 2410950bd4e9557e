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

#include <vector>

#include <gtest/gtest.h>

#include "support/brute_force.h"

namespace frobkit {
namespace {

ErrorCode CodeOf(Int m, Int n) {
  try {
    MakeTripleParams(m, n);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted";
  return ErrorCode::kInternal;
}

TEST(TripleParamsTest, Examples) {
  const TripleParams p = MakeTripleParams(2, 1);
  EXPECT_EQ(p.m(), 2);
  EXPECT_EQ(p.n(), 1);
  EXPECT_EQ(CodeOf(3, 3), ErrorCode::kNotCoprime);
  EXPECT_EQ(CodeOf(5, 3), ErrorCode::kSameParity);
  EXPECT_EQ(CodeOf(4, 2), ErrorCode::kNotCoprime);
  EXPECT_EQ(CodeOf(1, 2), ErrorCode::kOrderViolation);
  EXPECT_EQ(CodeOf(0, 1), ErrorCode::kNonPositive);
  EXPECT_EQ(CodeOf(2, -1), ErrorCode::kNonPositive);
}

// Every pair yields a value or exactly one error, and acceptance matches
// the brute-force parameter list.
TEST(TripleParamsTest, ValidationIsTotal) {
  const auto valid = testing::ValidParams(40);
  std::size_t accepted = 0;
  for (Int m = -3; m <= 40; ++m) {
    for (Int n = -3; n <= 40; ++n) {
      try {
        MakeTripleParams(m, n);
        ++accepted;
      } catch (const Error&) {
      }
    }
  }
  EXPECT_EQ(accepted, valid.size());
}

TEST(PythTripleTest, Examples) {
  EXPECT_EQ(TripleFromParams(MakeTripleParams(2, 1)), (PythTriple{3, 4, 5}));
  EXPECT_EQ(TripleFromParams(MakeTripleParams(3, 2)), (PythTriple{5, 12, 13}));
  EXPECT_EQ(TripleFromParams(MakeTripleParams(4, 1)), (PythTriple{15, 8, 17}));
}

TEST(PythTripleTest, InvariantsForAllParamsUpTo100) {
  for (const auto& [m, n] : testing::ValidParams(100)) {
    const PythTriple t = TripleFromParams(MakeTripleParams(m, n));
    EXPECT_EQ(t.p * t.p + t.q * t.q, t.r * t.r);
    EXPECT_EQ(Gcd(t.p, t.q), 1) << m << "," << n;
    EXPECT_EQ(t.p % 2, 1);
    EXPECT_EQ(t.q % 2, 0);
    EXPECT_EQ(t.r % 2, 1);
  }
}

TEST(PythTripleTest, OverflowIsAnError) {
  const Int big = Int{1} << 70;
  const TripleParams p = MakeTripleParams(big, 1);
  try {
    TripleFromParams(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(GeneratorSetTest, Examples) {
  const GeneratorSet g = MakeGeneratorSet({5, 12, 13});
  EXPECT_EQ(std::vector<Int>(g.gens().begin(), g.gens().end()),
            (std::vector<Int>{5, 12, 13}));
  EXPECT_EQ(MakeGeneratorSet({13, 5, 12, 5}), g);
  EXPECT_TRUE(MakeGeneratorSet({1, 7}).contains_one());

  auto code = [](std::initializer_list<Int> v) {
    try {
      MakeGeneratorSet(v);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code({4, 6}), ErrorCode::kGcdNotOne);
  EXPECT_EQ(code({}), ErrorCode::kTooFewGenerators);
  EXPECT_EQ(code({3}), ErrorCode::kTooFewGenerators);
  EXPECT_EQ(code({3, 3}), ErrorCode::kTooFewGenerators);
  EXPECT_EQ(code({3, 0}), ErrorCode::kNonPositive);
  EXPECT_EQ(code({3, -4}), ErrorCode::kNonPositive);
}

TEST(RepresentationTest, DotAndValidity) {
  const std::vector<Int> gens{3, 4, 5};
  EXPECT_EQ(Dot(std::vector<Int>{1, 1, 0}, gens), 7);
  EXPECT_TRUE(Represents({{1, 1, 0}}, gens, 7));
  EXPECT_FALSE(Represents({{1, 1, 0}}, gens, 8));
  EXPECT_FALSE(Represents({{-1, 2, 0}}, gens, 5));
  EXPECT_FALSE(Represents({{1, 1}}, gens, 7));
  EXPECT_THROW(Dot(std::vector<Int>{1}, gens), Error);
}

}  // namespace
}  // namespace frobkit
