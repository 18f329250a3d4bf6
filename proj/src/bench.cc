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

#include "gcensus/bench.h"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include "gcensus/errors.h"

namespace gcensus {

TimedCensus TimeCensus(const Graph& g, const ParallelConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  TimedCensus out;
  out.frequencies = GraphletCensus(g, config);
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

std::vector<SpeedupRow> MeasureSpeedup(const Graph& g,
                                       std::span<const unsigned> worker_counts,
                                       const ParallelConfig& base,
                                       int repetitions) {
  if (repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
  std::vector<unsigned> workers(worker_counts.begin(), worker_counts.end());
  if (std::find(workers.begin(), workers.end(), 1u) == workers.end()) {
    workers.insert(workers.begin(), 1u);
  }

  std::optional<GraphletFrequencies> reference;
  std::vector<SpeedupRow> rows;
  for (unsigned w : workers) {
    ParallelConfig config = base;
    config.workers = w;
    std::vector<double> times;
    for (int r = 0; r < repetitions; ++r) {
      TimedCensus run = TimeCensus(g, config);
      if (!reference) {
        reference = run.frequencies;
      } else if (run.frequencies != *reference) {
        throw ConsistencyError("census differs between runs (workers=" +
                               std::to_string(w) + ")");
      }
      times.push_back(run.seconds);
    }
    std::sort(times.begin(), times.end());
    rows.push_back({w, times[times.size() / 2], 1.0});
  }
  const double single =
      std::find_if(rows.begin(), rows.end(), [](const SpeedupRow& r) {
        return r.workers == 1;
      })->seconds;
  for (auto& row : rows) {
    row.speedup = row.seconds > 0 ? single / row.seconds : 1.0;
  }
  return rows;
}

void WriteSpeedupCsv(std::span<const SpeedupRow> rows, std::ostream& out) {
  out << "workers,seconds,speedup\n";
  for (const auto& r : rows) {
    out << r.workers << ',' << r.seconds << ',' << r.speedup << '\n';
  }
}

}  // namespace gcensus
