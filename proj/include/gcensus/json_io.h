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

// JSON forms shared by the command-line tool and the HTTP service.
//
// Counts are JSON numbers up to 2^53 (exactly representable as a double in
// every consumer) and decimal strings above it. Count maps are keyed by the
// class key ("g4_1") in serialization order.

#ifndef GCENSUS_JSON_IO_H_
#define GCENSUS_JSON_IO_H_

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "gcensus/census.h"
#include "gcensus/gfd.h"
#include "gcensus/graph.h"
#include "gcensus/ranking.h"
#include "gcensus/selection.h"
#include "gcensus/wide_int.h"

namespace gcensus {

// nlohmann::ordered_json keeps keys in insertion order, so serialized output
// is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr Count kMaxJsonSafeInteger = Count{1} << 53;

Json CountToJson(Count value);
Json SignedCountToJson(SignedCount value);
// Inverse of CountToJson; accepts numbers and decimal strings. Throws
// InvalidArgument.
Count CountFromJson(const Json& value);

// {"g2_1": .., ..., "g4_11": ..}
Json CountsToJson(const GraphletFrequencies& f);
Json DeltasToJson(const CountDeltas& deltas);

// {"n": .., "m": .., "counts": {..}} plus "runtime_seconds" when given.
Json CensusToJson(const GraphletFrequencies& f,
                  std::optional<double> runtime_seconds = std::nullopt);

// {"k": 4, "scope": "connected", "all_zero": false, "classes": [..],
//  "values": [..]}
Json GfdToJson(const GfdVector& gfd);

// [{"index": .., "src": .., "dst": .., "weight": ..}] with original ids.
Json WeightsToJson(const Graph& g, std::span<const WeightedEdge> weights);

// {"code": .., "message": .., "detail": ..}
Json ErrorJson(const std::string& code, const std::string& message,
               Json detail = Json::object());

}  // namespace gcensus

#endif  // GCENSUS_JSON_IO_H_
