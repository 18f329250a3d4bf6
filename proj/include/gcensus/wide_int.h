// Copyright 2026 The gcensus Authors
//
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

#ifndef GCENSUS_WIDE_INT_H_
#define GCENSUS_WIDE_INT_H_

#include <cstdint>
#include <string>

#include "gcensus/errors.h"

namespace gcensus {

// Global graphlet counts. C(n,4) overflows 64 bits once n passes ~1.5e5.
using Count = unsigned __int128;
using SignedCount = __int128;

std::string ToString(Count value);
std::string ToString(SignedCount value);

// Parses a non-negative decimal string. Throws InvalidArgument.
Count ParseCount(const std::string& text);

inline Count Choose2(Count n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline Count Choose3(Count n) {
  return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3;
}
inline Count Choose4(Count n) {
  // n(n-1)/2 is exact, times (n-2) then /3 is exact (product of three
  // consecutive integers / 6), times (n-3) then /4 is exact.
  return n < 4 ? 0 : n * (n - 1) / 2 * (n - 2) / 3 * (n - 3) / 4;
}

// Checked 64-bit helpers for per-edge values.
inline std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("per-edge product exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("per-edge sum exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t CheckedChoose2(std::uint64_t n) {
  if (n < 2) return 0;
  // One of n, n-1 is even; halve it first so the product cannot overflow
  // unless the result itself does.
  return (n % 2 == 0) ? CheckedMul(n / 2, n - 1) : CheckedMul(n, (n - 1) / 2);
}

// Exact division; anything else is a census bug.
inline Count ExactDiv(Count value, unsigned divisor, const char* what) {
  if (value % divisor != 0) {
    throw ConsistencyError(std::string("inexact division in ") + what + ": " +
                           ToString(value) + " / " +
                           std::to_string(divisor));
  }
  return value / divisor;
}

// a - b, refusing to wrap below zero.
inline Count CheckedSub(Count a, Count b, const char* what) {
  if (b > a) {
    throw ConsistencyError(std::string("negative intermediate in ") + what +
                           ": " + ToString(a) + " - " + ToString(b));
  }
  return a - b;
}

}  // namespace gcensus

#endif  // GCENSUS_WIDE_INT_H_
