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

#include "frobkit/integer.h"

#include <cstdint>
#include <random>

#include <gtest/gtest.h>

namespace frobkit {
namespace {

constexpr Int kMax = ~(Int{1} << 127);

TEST(CheckedArithmeticTest, OverflowIsReported) {
  EXPECT_EQ(CheckedAdd(kMax - 1, 1), kMax);
  try {
    CheckedAdd(kMax, 1);
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
  EXPECT_THROW(CheckedMul(Int{1} << 64, Int{1} << 64), Error);
  EXPECT_THROW(CheckedSub(-kMax - 1, 1), Error);
  EXPECT_EQ(CheckedMul(Int{1} << 62, Int{1} << 62), Int{1} << 124);
}

TEST(IntegerDivisionTest, FloorAndCeilMatchEnumeration) {
  for (int a = -40; a <= 40; ++a) {
    for (int b = 1; b <= 9; ++b) {
      int floor_ref = -100;
      while ((floor_ref + 1) * b <= a) ++floor_ref;
      int ceil_ref = 100;
      while ((ceil_ref - 1) * b >= a) --ceil_ref;
      EXPECT_EQ(FloorDiv(a, b), floor_ref) << a << "/" << b;
      EXPECT_EQ(CeilDiv(a, b), ceil_ref) << a << "/" << b;
      const Int r = Mod(a, b);
      EXPECT_TRUE(r >= 0 && r < b);
      EXPECT_EQ((a - r) % b, 0);
    }
  }
}

TEST(ExtendedGcdTest, BezoutIdentityHolds) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(0, 1'000'000'007);
  for (int i = 0; i < 2000; ++i) {
    const Int a = dist(rng);
    const Int b = dist(rng);
    const BezoutResult r = ExtendedGcd(a, b);
    EXPECT_EQ(r.gcd, Gcd(a, b));
    EXPECT_EQ(a * r.x + b * r.y, r.gcd);
  }
  EXPECT_EQ(ExtendedGcd(0, 0).gcd, 0);
}

TEST(ModInverseTest, InverseIsExact) {
  EXPECT_EQ(ModInverse(3, 4), 3);
  EXPECT_EQ(ModInverse(5, 12), 5);
  EXPECT_EQ(ModInverse(15, 8), 7);
  for (Int m = 2; m < 60; ++m) {
    for (Int a = 0; a < m; ++a) {
      if (Gcd(a, m) != 1) {
        EXPECT_THROW(ModInverse(a, m), Error);
        continue;
      }
      const Int inv = ModInverse(a, m);
      EXPECT_EQ(Mod(a * inv, m), 1);
    }
  }
  EXPECT_THROW(ModInverse(3, 1), Error);
}

TEST(DecimalTest, RoundTripAndMalformedInput) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Int v = (static_cast<Int>(rng()) << 64 | rng()) >> (rng() % 120);
    const Int signed_v = (i % 2) ? -v : v;
    EXPECT_EQ(ParseInt(ToString(signed_v)), signed_v);
  }
  EXPECT_EQ(ToString(0), "0");
  EXPECT_EQ(ToString(-1), "-1");
  EXPECT_EQ(ToString(kMax), "170141183460469231731687303715884105727");
  EXPECT_EQ(ToString(-kMax - 1), "-170141183460469231731687303715884105728");
  EXPECT_EQ(ParseInt("+17"), 17);
  EXPECT_THROW(ParseInt(""), Error);
  EXPECT_THROW(ParseInt("-"), Error);
  EXPECT_THROW(ParseInt("12a"), Error);
  EXPECT_THROW(ParseInt("1 2"), Error);
  try {
    ParseInt("999999999999999999999999999999999999999999");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

}  // namespace
}  // namespace frobkit
