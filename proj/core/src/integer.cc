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

#include <algorithm>

namespace frobkit {

Int CheckedAdd(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "addition exceeds 128 bits");
  }
  return out;
}

Int CheckedSub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "subtraction exceeds 128 bits");
  }
  return out;
}

Int CheckedMul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "multiplication exceeds 128 bits");
  }
  return out;
}

Int Gcd(Int a, Int b) {
  a = Abs(a);
  b = Abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int FloorDiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

Int CeilDiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

Int Mod(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

BezoutResult ExtendedGcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int quotient = old_r / r;
    Int next = old_r - quotient * r;
    old_r = r;
    r = next;
    next = CheckedSub(old_s, CheckedMul(quotient, s));
    old_s = s;
    s = next;
    next = CheckedSub(old_t, CheckedMul(quotient, t));
    old_t = t;
    t = next;
  }
  return {old_r, old_s, old_t};
}

Int ModInverse(Int a, Int m) {
  if (m <= 1) throw Error(ErrorCode::kInvalidArgument, "modulus must exceed 1");
  const BezoutResult bz = ExtendedGcd(Mod(a, m), m);
  if (bz.gcd != 1) {
    throw Error(ErrorCode::kNotCoprime,
                ToString(a) + " has no inverse modulo " + ToString(m));
  }
  return Mod(bz.x, m);
}

std::string ToString(Int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with negative values so that the minimum is handled.
  std::string digits;
  Int w = negative ? v : -v;
  while (w != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(w % 10)));
    w /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int ParseInt(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected an integer, got '" + std::string(text) + "'");
  }
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kInvalidArgument,
                  "expected an integer, got '" + std::string(text) + "'");
    }
    value = CheckedAdd(CheckedMul(value, 10), c - '0');
  }
  return negative ? -value : value;
}

}  // namespace frobkit
