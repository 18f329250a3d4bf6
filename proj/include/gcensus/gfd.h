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

// Graphlet frequency distributions (normalized counts of one graphlet size)
// and distances between them.

#ifndef GCENSUS_GFD_H_
#define GCENSUS_GFD_H_

#include <optional>
#include <string_view>
#include <vector>

#include "gcensus/census.h"
#include "gcensus/graphlet_class.h"

namespace gcensus {

enum class GfdScope { kConnected, kAll };
enum class DistanceMetric { kEuclidean, kCosine };

// "connected" / "connected-only" / "all".
std::optional<GfdScope> ParseGfdScope(std::string_view text);
std::string_view ScopeName(GfdScope scope);
// "euclidean" / "cosine".
std::optional<DistanceMetric> ParseDistanceMetric(std::string_view text);

struct GfdVector {
  int k = 4;
  GfdScope scope = GfdScope::kConnected;
  std::vector<GraphletClass> classes;  // serialization order
  std::vector<double> values;          // sums to 1 unless all_zero
  bool all_zero = false;               // no graphlet in scope; values are 0
};

// Throws InvalidArgument unless k is 3 or 4.
GfdVector Gfd(const GraphletFrequencies& freqs, int k,
              GfdScope scope = GfdScope::kConnected);

// Euclidean: L2 norm of the difference. Cosine: 1 - cos(a, b), clamped to
// [0, 2]; two all-zero vectors are at distance 0, an all-zero vector and a
// non-zero one at distance 1. Throws InvalidArgument if k or scope differ.
double GfdDistance(const GfdVector& a, const GfdVector& b,
                   DistanceMetric metric);

}  // namespace gcensus

#endif  // GCENSUS_GFD_H_
