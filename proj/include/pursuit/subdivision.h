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

#ifndef PURSUIT_SUBDIVISION_H_
#define PURSUIT_SUBDIVISION_H_

#include <optional>
#include <vector>

#include "pursuit/graph.h"

namespace pursuit {

inline constexpr int kSubdivisionMaxVertices = 16;

// Branch vertices of a subdivision together with one path per pattern edge.
// For the bipartite patterns the first side comes first in `branch`.
struct Subdivision {
  std::vector<VertexId> branch;
  std::vector<std::vector<VertexId>> paths;
};

// Exhaustive searches over branch vertices with internally disjoint
// connecting paths, run block by block. Blocks larger than
// kSubdivisionMaxVertices throw kInvalidArgument.
std::optional<Subdivision> FindK33Subdivision(const OrientedGraph& g);
std::optional<Subdivision> FindK4Subdivision(const OrientedGraph& g);
std::optional<Subdivision> FindK23Subdivision(const OrientedGraph& g);

// Checks that `s` is a subdivision of K_{a,b} (a, b > 0) or of K_a (b == 0).
bool IsSubdivisionOf(const OrientedGraph& g, const Subdivision& s, int a,
                     int b);

}  // namespace pursuit

#endif  // PURSUIT_SUBDIVISION_H_
