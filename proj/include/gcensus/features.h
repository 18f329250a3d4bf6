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

// Graph-level feature vectors: the 17 graphlet counts of one graph, for use
// as input to downstream classifiers.

#ifndef GCENSUS_FEATURES_H_
#define GCENSUS_FEATURES_H_

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcensus/census.h"
#include "gcensus/graph.h"
#include "gcensus/parallel.h"

namespace gcensus {

struct FeatureOptions {
  // log(1 + count) instead of the raw count.
  bool log_scale = false;
  // Divide each size block (k = 2, 3, 4) by its sum after optional log
  // scaling, so every block sums to 1 (or is all zero).
  bool normalize = false;
  ParallelConfig parallel;
};

struct FeatureRow {
  std::string name;
  GraphletFrequencies counts;
  std::array<double, kNumGraphletClasses> values{};
  double seconds = 0;  // census time, loading excluded
};

struct SkippedGraph {
  std::string name;
  std::string reason;
};

struct FeatureMatrix {
  std::vector<FeatureRow> rows;  // input order, failures omitted
  std::vector<SkippedGraph> skipped;
};

// Values of one row from its counts.
std::array<double, kNumGraphletClasses> FeatureValues(
    const GraphletFrequencies& counts, const FeatureOptions& options);

// A named graph source; `load` may throw, which skips the row.
struct GraphSource {
  std::string name;
  std::function<Graph()> load;
};

FeatureMatrix BuildFeatureMatrix(const std::vector<GraphSource>& sources,
                                 const FeatureOptions& options = {});
// Sources that read edge-list files; names are the paths.
std::vector<GraphSource> FileSources(const std::vector<std::string>& paths);

// "graph,g2_1,...,g4_11,seconds". Values are exact integers unless the
// options scale them.
void WriteFeatureCsv(const FeatureMatrix& matrix,
                     const FeatureOptions& options, std::ostream& out);

}  // namespace gcensus

#endif  // GCENSUS_FEATURES_H_
