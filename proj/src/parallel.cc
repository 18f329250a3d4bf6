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

#include "gcensus/parallel.h"

#include <string>

namespace gcensus {

std::optional<EdgeOrdering> ParseEdgeOrdering(std::string_view text) {
  if (text == "input") return EdgeOrdering::kInput;
  if (text == "degree" || text == "degree-desc") {
    return EdgeOrdering::kDegreeDesc;
  }
  return std::nullopt;
}

unsigned DefaultWorkers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void ParallelConfig::Validate() const {
  if (workers < 1) throw InvalidArgument("workers must be >= 1");
  if (batch_size < 1 || batch_size > kMaxBatchSize) {
    throw InvalidArgument("batch size must be in [1, " +
                          std::to_string(kMaxBatchSize) + "]");
  }
}

}  // namespace gcensus
