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

// Wall-clock timing of the census (graph loading excluded).

#ifndef GCENSUS_BENCH_H_
#define GCENSUS_BENCH_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "gcensus/census.h"
#include "gcensus/graph.h"
#include "gcensus/parallel.h"

namespace gcensus {

struct TimedCensus {
  GraphletFrequencies frequencies;
  double seconds = 0;
};

TimedCensus TimeCensus(const Graph& g, const ParallelConfig& config);

struct SpeedupRow {
  unsigned workers = 1;
  double seconds = 0;  // median over the repetitions
  double speedup = 1;  // t(1 worker) / t(workers)
};

// Median-of-`repetitions` census time for each worker count; speedups are
// relative to a single worker, which is always measured even when absent
// from `worker_counts`. Throws ConsistencyError if two runs disagree on the
// counts. `base` supplies batch size and ordering.
std::vector<SpeedupRow> MeasureSpeedup(const Graph& g,
                                       std::span<const unsigned> worker_counts,
                                       const ParallelConfig& base = {},
                                       int repetitions = 5);

// "workers,seconds,speedup" table.
void WriteSpeedupCsv(std::span<const SpeedupRow> rows, std::ostream& out);

}  // namespace gcensus

#endif  // GCENSUS_BENCH_H_
