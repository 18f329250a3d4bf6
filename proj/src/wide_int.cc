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

#include "gcensus/wide_int.h"

#include <algorithm>

namespace gcensus {

std::string ToString(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string ToString(SignedCount value) {
  if (value < 0) {
    // Negate in unsigned space so the minimum value is handled.
    return "-" + ToString(static_cast<Count>(0) - static_cast<Count>(value));
  }
  return ToString(static_cast<Count>(value));
}

Count ParseCount(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty count string");
  constexpr Count kMax = ~static_cast<Count>(0);
  Count value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("count string is not decimal: " + text);
    }
    const unsigned digit = static_cast<unsigned>(c - '0');
    if (value > (kMax - digit) / 10) {
      throw InvalidArgument("count string overflows 128 bits: " + text);
    }
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace gcensus
