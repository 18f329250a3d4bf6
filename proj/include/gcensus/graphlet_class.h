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

#ifndef GCENSUS_GRAPHLET_CLASS_H_
#define GCENSUS_GRAPHLET_CLASS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace gcensus {

// The 17 induced graphlet classes on 2, 3 and 4 vertices. The enumerator
// value is the position in every serialized vector.
enum class GraphletClass : int {
  kEdge = 0,             // g2_1
  kTwoIndependent,       // g2_2
  kTriangle,             // g3_1
  kTwoStar,              // g3_2
  kThreeOneEdge,         // g3_3
  kThreeIndependent,     // g3_4
  kFourClique,           // g4_1
  kChordalCycle,         // g4_2
  kTailedTriangle,       // g4_3
  kFourCycle,            // g4_4
  kThreeStar,            // g4_5
  kFourPath,             // g4_6
  kFourOneTriangle,      // g4_7
  kFourTwoStar,          // g4_8
  kFourTwoEdge,          // g4_9
  kFourOneEdge,          // g4_10
  kFourIndependent,      // g4_11
};

inline constexpr std::size_t kNumGraphletClasses = 17;

struct GraphletClassInfo {
  GraphletClass id;
  std::string_view key;   // "g4_2"
  std::string_view name;  // "4-chordalcycle"
  int k;
  bool connected;
  GraphletClass complement;
};

const GraphletClassInfo& Info(GraphletClass c);
inline std::string_view Key(GraphletClass c) { return Info(c).key; }
inline std::string_view Name(GraphletClass c) { return Info(c).name; }
inline GraphletClass ComplementOf(GraphletClass c) {
  return Info(c).complement;
}

// All classes in serialization order.
std::span<const GraphletClass, kNumGraphletClasses> AllClasses();
// The classes of size k (2, 3 or 4), in order.
std::span<const GraphletClass> ClassesOfSize(int k);
// Connected classes of size k.
std::span<const GraphletClass> ConnectedClassesOfSize(int k);

// Accepts either the key ("g4_1") or the name ("4-clique").
std::optional<GraphletClass> ParseGraphletClass(std::string_view text);

}  // namespace gcensus

#endif  // GCENSUS_GRAPHLET_CLASS_H_
