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

#include "gcensus/gfd.h"

#include <algorithm>
#include <cmath>

#include "gcensus/errors.h"

namespace gcensus {

std::optional<GfdScope> ParseGfdScope(std::string_view text) {
  if (text == "connected" || text == "connected-only") {
    return GfdScope::kConnected;
  }
  if (text == "all") return GfdScope::kAll;
  return std::nullopt;
}

std::string_view ScopeName(GfdScope scope) {
  return scope == GfdScope::kConnected ? "connected" : "all";
}

std::optional<DistanceMetric> ParseDistanceMetric(std::string_view text) {
  if (text == "euclidean") return DistanceMetric::kEuclidean;
  if (text == "cosine") return DistanceMetric::kCosine;
  return std::nullopt;
}

GfdVector Gfd(const GraphletFrequencies& freqs, int k, GfdScope scope) {
  if (k != 3 && k != 4) throw InvalidArgument("gfd requires k = 3 or 4");
  GfdVector out;
  out.k = k;
  out.scope = scope;
  const auto classes = scope == GfdScope::kConnected
                           ? ConnectedClassesOfSize(k)
                           : ClassesOfSize(k);
  out.classes.assign(classes.begin(), classes.end());

  Count total = 0;
  for (GraphletClass c : classes) total += freqs[c];
  out.values.assign(classes.size(), 0.0);
  if (total == 0) {
    out.all_zero = true;
    return out;
  }
  // long double keeps the ratio accurate for counts beyond 2^53.
  const auto denom = static_cast<long double>(total);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.values[i] =
        static_cast<double>(static_cast<long double>(freqs[classes[i]]) /
                            denom);
  }
  return out;
}

double GfdDistance(const GfdVector& a, const GfdVector& b,
                   DistanceMetric metric) {
  if (a.k != b.k || a.scope != b.scope || a.values.size() != b.values.size()) {
    throw InvalidArgument("gfd vectors differ in k or scope");
  }
  if (metric == DistanceMetric::kEuclidean) {
    double sum = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      const double d = a.values[i] - b.values[i];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    na += a.values[i] * a.values[i];
    nb += b.values[i] * b.values[i];
  }
  if (na == 0 && nb == 0) return 0;
  if (na == 0 || nb == 0) return 1;
  if (a.values == b.values) return 0;
  return std::clamp(1.0 - dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 2.0);
}

}  // namespace gcensus
