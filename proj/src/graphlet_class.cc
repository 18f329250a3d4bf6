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

#include "gcensus/graphlet_class.h"

#include "gcensus/errors.h"

namespace gcensus {
namespace {

using C = GraphletClass;

constexpr std::array<GraphletClassInfo, kNumGraphletClasses> kInfo = {{
    {C::kEdge, "g2_1", "edge", 2, true, C::kTwoIndependent},
    {C::kTwoIndependent, "g2_2", "2-node-independent", 2, false, C::kEdge},
    {C::kTriangle, "g3_1", "triangle", 3, true, C::kThreeIndependent},
    {C::kTwoStar, "g3_2", "2-star", 3, true, C::kThreeOneEdge},
    {C::kThreeOneEdge, "g3_3", "3-node-1-edge", 3, false, C::kTwoStar},
    {C::kThreeIndependent, "g3_4", "3-node-independent", 3, false,
     C::kTriangle},
    {C::kFourClique, "g4_1", "4-clique", 4, true, C::kFourIndependent},
    {C::kChordalCycle, "g4_2", "4-chordalcycle", 4, true, C::kFourOneEdge},
    {C::kTailedTriangle, "g4_3", "4-tailedtriangle", 4, true,
     C::kFourTwoStar},
    {C::kFourCycle, "g4_4", "4-cycle", 4, true, C::kFourTwoEdge},
    {C::kThreeStar, "g4_5", "3-star", 4, true, C::kFourOneTriangle},
    {C::kFourPath, "g4_6", "4-path", 4, true, C::kFourPath},
    {C::kFourOneTriangle, "g4_7", "4-node-1-triangle", 4, false,
     C::kThreeStar},
    {C::kFourTwoStar, "g4_8", "4-node-2-star", 4, false, C::kTailedTriangle},
    {C::kFourTwoEdge, "g4_9", "4-node-2-edge", 4, false, C::kFourCycle},
    {C::kFourOneEdge, "g4_10", "4-node-1-edge", 4, false, C::kChordalCycle},
    {C::kFourIndependent, "g4_11", "4-node-independent", 4, false,
     C::kFourClique},
}};

constexpr std::array<GraphletClass, kNumGraphletClasses> kAll = {
    C::kEdge,           C::kTwoIndependent,   C::kTriangle,
    C::kTwoStar,        C::kThreeOneEdge,     C::kThreeIndependent,
    C::kFourClique,     C::kChordalCycle,     C::kTailedTriangle,
    C::kFourCycle,      C::kThreeStar,        C::kFourPath,
    C::kFourOneTriangle, C::kFourTwoStar,     C::kFourTwoEdge,
    C::kFourOneEdge,    C::kFourIndependent,
};

}  // namespace

const GraphletClassInfo& Info(GraphletClass c) {
  return kInfo[static_cast<std::size_t>(c)];
}

std::span<const GraphletClass, kNumGraphletClasses> AllClasses() {
  return kAll;
}

std::span<const GraphletClass> ClassesOfSize(int k) {
  switch (k) {
    case 2:
      return std::span(kAll).subspan(0, 2);
    case 3:
      return std::span(kAll).subspan(2, 4);
    case 4:
      return std::span(kAll).subspan(6, 11);
  }
  throw InvalidArgument("graphlet size must be 2, 3 or 4");
}

std::span<const GraphletClass> ConnectedClassesOfSize(int k) {
  switch (k) {
    case 2:
      return std::span(kAll).subspan(0, 1);
    case 3:
      return std::span(kAll).subspan(2, 2);
    case 4:
      return std::span(kAll).subspan(6, 6);
  }
  throw InvalidArgument("graphlet size must be 2, 3 or 4");
}

std::optional<GraphletClass> ParseGraphletClass(std::string_view text) {
  for (const auto& info : kInfo) {
    if (info.key == text || info.name == text) return info.id;
  }
  return std::nullopt;
}

}  // namespace gcensus
