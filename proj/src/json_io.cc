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

#include "gcensus/json_io.h"

#include "gcensus/errors.h"

namespace gcensus {

Json CountToJson(Count value) {
  if (value <= kMaxJsonSafeInteger) {
    return static_cast<std::uint64_t>(value);
  }
  return ToString(value);
}

Json SignedCountToJson(SignedCount value) {
  const Count magnitude =
      value < 0 ? Count{0} - static_cast<Count>(value) : static_cast<Count>(value);
  if (magnitude <= kMaxJsonSafeInteger) {
    return static_cast<std::int64_t>(value);
  }
  return ToString(value);
}

Count CountFromJson(const Json& value) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer()) {
    const auto v = value.get<std::int64_t>();
    if (v < 0) throw InvalidArgument("count must be non-negative");
    return static_cast<Count>(v);
  }
  if (value.is_string()) return ParseCount(value.get<std::string>());
  throw InvalidArgument("count must be an integer or a decimal string");
}

Json CountsToJson(const GraphletFrequencies& f) {
  Json out = Json::object();
  for (GraphletClass c : AllClasses()) {
    out[std::string(Key(c))] = CountToJson(f[c]);
  }
  return out;
}

Json DeltasToJson(const CountDeltas& deltas) {
  Json out = Json::object();
  for (GraphletClass c : AllClasses()) {
    out[std::string(Key(c))] =
        SignedCountToJson(deltas[static_cast<std::size_t>(c)]);
  }
  return out;
}

Json CensusToJson(const GraphletFrequencies& f,
                  std::optional<double> runtime_seconds) {
  Json out = Json::object();
  out["n"] = f.n;
  out["m"] = f.m;
  out["counts"] = CountsToJson(f);
  if (runtime_seconds) out["runtime_seconds"] = *runtime_seconds;
  return out;
}

Json GfdToJson(const GfdVector& gfd) {
  Json out = Json::object();
  out["k"] = gfd.k;
  out["scope"] = std::string(ScopeName(gfd.scope));
  out["all_zero"] = gfd.all_zero;
  Json classes = Json::array();
  for (GraphletClass c : gfd.classes) classes.push_back(std::string(Key(c)));
  out["classes"] = std::move(classes);
  out["values"] = gfd.values;
  return out;
}

Json WeightsToJson(const Graph& g, std::span<const WeightedEdge> weights) {
  Json out = Json::array();
  for (const auto& w : weights) {
    Json row = Json::object();
    row["index"] = w.index;
    row["src"] = g.original_id(w.u);
    row["dst"] = g.original_id(w.v);
    row["weight"] = w.weight;
    out.push_back(std::move(row));
  }
  return out;
}

Json ErrorJson(const std::string& code, const std::string& message,
               Json detail) {
  Json out = Json::object();
  out["code"] = code;
  out["message"] = message;
  out["detail"] = std::move(detail);
  return out;
}

}  // namespace gcensus
