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

#ifndef GCENSUS_PARALLEL_H_
#define GCENSUS_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "gcensus/errors.h"
#include "gcensus/graph.h"

namespace gcensus {

enum class EdgeOrdering { kInput, kDegreeDesc };

std::optional<EdgeOrdering> ParseEdgeOrdering(std::string_view text);

unsigned DefaultWorkers();

struct ParallelConfig {
  static constexpr std::size_t kMaxBatchSize = 4096;

  unsigned workers = DefaultWorkers();
  std::size_t batch_size = 64;
  EdgeOrdering ordering = EdgeOrdering::kDegreeDesc;

  // Throws InvalidArgument.
  void Validate() const;
};

// Runs `kernel(EdgeRef, Scratch&, Accumulator&)` once per edge. Workers claim
// contiguous batches of the edge permutation through a shared atomic cursor
// and accumulate privately; accumulators are summed with `+=` after all
// workers have joined, in worker order.
//
// If any kernel invocation throws, the remaining workers stop at their next
// claim and the first exception is rethrown to the caller.
template <class Accumulator, class ScratchFactory, class Kernel>
Accumulator RunEdgeJobs(const Graph& g, const ParallelConfig& config,
                        ScratchFactory make_scratch, Kernel kernel) {
  config.Validate();
  const std::size_t m = g.num_edges();
  std::vector<EdgeIndex> order;
  if (config.ordering == EdgeOrdering::kDegreeDesc) {
    order = OrderEdgesByDegree(g);
  } else {
    order.resize(m);
    std::iota(order.begin(), order.end(), EdgeIndex{0});
  }

  const unsigned workers = static_cast<unsigned>(std::max<std::size_t>(
      1, std::min<std::size_t>(config.workers,
                               (m + config.batch_size - 1) /
                                   std::max<std::size_t>(1, config.batch_size))));
  std::vector<Accumulator> partial(workers);
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&](unsigned id) {
    try {
      auto scratch = make_scratch();
      Accumulator& acc = partial[id];
      while (!abort.load(std::memory_order_relaxed)) {
        const std::size_t begin =
            cursor.fetch_add(config.batch_size, std::memory_order_relaxed);
        if (begin >= m) break;
        const std::size_t end = std::min(m, begin + config.batch_size);
        for (std::size_t i = begin; i < end; ++i) {
          kernel(g.edge(order[i]), scratch, acc);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      abort.store(true);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Accumulator total{};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace gcensus

#endif  // GCENSUS_PARALLEL_H_
