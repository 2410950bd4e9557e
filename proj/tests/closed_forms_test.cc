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

#include <gtest/gtest.h>

#include "support/brute_force.h"

namespace frobkit {
namespace {

TEST(SylvesterTest, Examples) {
  // Expected values from brute-force scans up to a*b.
  EXPECT_EQ(testing::BruteFrobenius({3, 4}, 12), 5);
  EXPECT_EQ(testing::BruteFrobenius({5, 7}, 35), 23);
  EXPECT_EQ(SylvesterFrobenius(3, 4).value, 5);
  EXPECT_EQ(SylvesterFrobenius(5, 7).value, 23);
  EXPECT_EQ(SylvesterFrobenius(1, 7).value, -1);
  EXPECT_EQ(SylvesterFrobenius(7, 1).value, -1);
}

TEST(SylvesterTest, Errors) {
  EXPECT_THROW(SylvesterFrobenius(4, 6), Error);
  EXPECT_THROW(SylvesterFrobenius(0, 3), Error);
  const Int big = Int{1} << 100;
  try {
    SylvesterFrobenius(big, big + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(SylvesterTest, MatchesBruteForce) {
  for (std::int64_t a = 1; a <= 14; ++a) {
    for (std::int64_t b = a + 1; b <= 15; ++b) {
      if (testing::Gcd64(a, b) != 1) continue;
      EXPECT_EQ(SylvesterFrobenius(a, b).value,
                testing::BruteFrobenius({a, b}, a * b))
          << a << "," << b;
    }
  }
}

TEST(PythagoreanTest, Examples) {
  // Brute-force scans over (3,4,5), (5,12,13), (7,24,25).
  EXPECT_EQ(testing::BruteFrobenius({3, 4, 5}, 12), 2);
  EXPECT_EQ(testing::BruteFrobenius({5, 12, 13}, 60), 21);
  EXPECT_EQ(testing::BruteFrobenius({7, 24, 25}, 168), 68);
  EXPECT_EQ(PythagoreanFrobenius(MakeTripleParams(2, 1)).value, 2);
  EXPECT_EQ(PythagoreanFrobenius(MakeTripleParams(3, 2)).value, 21);
  EXPECT_EQ(PythagoreanFrobenius(MakeTripleParams(4, 3)).value, 68);
}

TEST(PythagoreanTest, FactoredAndExpandedFormsAgree) {
  for (const auto& [m, n] : testing::ValidParams(1000)) {
    ASSERT_EQ(PythagoreanFrobenius(MakeTripleParams(m, n)).value,
              testing::ExpandedFrobenius(m, n))
        << m << "," << n;
  }
}

TEST(PythagoreanTest, BruteForceForSmallParams) {
  for (const auto& [m, n] : testing::ValidParams(7)) {
    const std::int64_t p = m * m - n * n, q = 2 * m * n, r = m * m + n * n;
    EXPECT_EQ(PythagoreanFrobenius(MakeTripleParams(m, n)).value,
              testing::BruteFrobenius({p, q, r}, p * q))
        << m << "," << n;
  }
}

TEST(PythagoreanTest, LargeParamsStayExact) {
  const Int m = Int{1} << 40;
  const FrobeniusValue v = PythagoreanFrobenius(MakeTripleParams(m, 1));
  EXPECT_EQ(v.value, m * (m * m + 2 * m - 1 - 2 * m - 2));
  EXPECT_THROW(PythagoreanFrobenius(MakeTripleParams(Int{1} << 50, 1)), Error);
}

}  // namespace
}  // namespace frobkit
