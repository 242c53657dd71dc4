// Copyright 2026 The Pursuit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PURSUIT_PLANAR_H_
#define PURSUIT_PLANAR_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/characterize.h"
#include "pursuit/cycles.h"
#include "pursuit/game.h"
#include "pursuit/graph.h"

namespace pursuit {

inline constexpr int kOuterplanarMaxVertices = 32;

// Outer (Hamiltonian) cycle and chords of every nontrivial block.
struct OuterplanarEmbedding {
  struct Component {
    std::vector<VertexId> outer;
    std::vector<std::pair<VertexId, VertexId>> chords;  // (a, b), a < b
  };
  std::vector<Component> components;
};

struct OuterplanarResult {
  bool outerplanar = false;
  std::optional<OuterplanarEmbedding> embedding;
  // "K4" or "K2,3" with branch vertices when the subdivision search ran.
  std::string obstruction;
  bool minor_checked = false;
};

// Throws kInvalidArgument above kOuterplanarMaxVertices vertices; the
// subdivision cross-check runs on blocks within kSubdivisionMaxVertices.
OuterplanarResult IsOuterplanar(const OrientedGraph& g);

// Bounded faces of one component, each in boundary order.
std::vector<std::vector<VertexId>> ComponentFaces(
    const OuterplanarEmbedding::Component& c);

void ValidateEmbedding(const OrientedGraph& g, const OuterplanarEmbedding& e);

struct FaceSearch {
  UndirectedCycle face;  // directed: face[i] -> face[i + 1]
  int shrink_steps = 0;
};

// Descends from a directed cycle (`start`, or the shortest one) to a
// well-directed bounded face.
FaceSearch WellDirectedFace(const OrientedGraph& g,
                            const OuterplanarEmbedding& e,
                            const std::optional<UndirectedCycle>& start = {});

// WT and 2-chase witnesses on a well-directed face, each checked against
// the solved game.
EquilibriumReport OuterplanarEquilibria(const GameConfig& cfg);

}  // namespace pursuit

#endif  // PURSUIT_PLANAR_H_
