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

#include "gcensus/features.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>

#include "gcensus/wide_int.h"

namespace gcensus {

std::array<double, kNumGraphletClasses> FeatureValues(
    const GraphletFrequencies& counts, const FeatureOptions& options) {
  std::array<double, kNumGraphletClasses> values{};
  for (GraphletClass c : AllClasses()) {
    const auto raw = static_cast<long double>(counts[c]);
    values[static_cast<std::size_t>(c)] = static_cast<double>(
        options.log_scale ? std::log1p(raw) : raw);
  }
  if (options.normalize) {
    for (int k = 2; k <= 4; ++k) {
      double sum = 0;
      for (GraphletClass c : ClassesOfSize(k)) {
        sum += values[static_cast<std::size_t>(c)];
      }
      if (sum == 0) continue;
      for (GraphletClass c : ClassesOfSize(k)) {
        values[static_cast<std::size_t>(c)] /= sum;
      }
    }
  }
  return values;
}

FeatureMatrix BuildFeatureMatrix(const std::vector<GraphSource>& sources,
                                 const FeatureOptions& options) {
  FeatureMatrix matrix;
  for (const auto& source : sources) {
    try {
      const Graph g = source.load();
      FeatureRow row;
      row.name = source.name;
      const auto start = std::chrono::steady_clock::now();
      row.counts = GraphletCensus(g, options.parallel);
      row.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      row.values = FeatureValues(row.counts, options);
      matrix.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      matrix.skipped.push_back({source.name, e.what()});
    }
  }
  return matrix;
}

std::vector<GraphSource> FileSources(const std::vector<std::string>& paths) {
  std::vector<GraphSource> sources;
  sources.reserve(paths.size());
  for (const auto& path : paths) {
    sources.push_back({path, [path] { return LoadEdgeListFile(path); }});
  }
  return sources;
}

namespace {

// Names may contain commas (paths); quote per RFC 4180 when needed.
std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void WriteFeatureCsv(const FeatureMatrix& matrix,
                     const FeatureOptions& options, std::ostream& out) {
  const bool exact = !options.log_scale && !options.normalize;
  out << "graph";
  for (GraphletClass c : AllClasses()) out << ',' << Key(c);
  out << ",seconds\n";
  for (const auto& row : matrix.rows) {
    out << CsvField(row.name);
    for (GraphletClass c : AllClasses()) {
      out << ',';
      if (exact) {
        out << ToString(row.counts[c]);
      } else {
        out << row.values[static_cast<std::size_t>(c)];
      }
    }
    out << ',' << row.seconds << '\n';
  }
}

}  // namespace gcensus
