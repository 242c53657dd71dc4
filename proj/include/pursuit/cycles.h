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

#ifndef PURSUIT_CYCLES_H_
#define PURSUIT_CYCLES_H_

#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.h"

namespace pursuit {

// Cyclic vertex sequence; consecutive vertices (and last/first) adjacent.
struct UndirectedCycle {
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const UndirectedCycle&) const = default;
};

// Throws kInvalidArgument unless `c` is a simple cycle of g of length >= 3.
void ValidateCycle(const OrientedGraph& g, const UndirectedCycle& c);

// True when every edge of the cycle points from vertices[i] to vertices[i+1]
// or every edge points the other way.
bool IsWellDirected(const OrientedGraph& g, const UndirectedCycle& c);

// Orientation of a k-cycle up to the dihedral group acting on its vertices.
struct CycleOrientationClass {
  int length = 0;
  // Maximal same-direction runs of the canonical representative, starting
  // with the longest run.
  std::vector<int> runs;
  // Lexicographically smallest edge-direction word over the dihedral orbit;
  // bit i is 1 when edge (i, i+1) points forward.
  unsigned canonical_word = 0;
  // C^5_{4,1}, C^5_{3,2}, C^4_{2,2} and C^4_{3,1}: exactly one source and one
  // sink on a 4- or 5-cycle.
  bool unbalanced = false;

  // "C5_{3,2}" style label; "C5_{5,0}" for a well-directed cycle.
  std::string Label() const;
  bool operator==(const CycleOrientationClass&) const = default;
};

// Canonical class of the direction word `word` on a k-cycle.
CycleOrientationClass ClassifyWord(int k, unsigned word);

CycleOrientationClass ClassifyCycleOrientation(const OrientedGraph& g,
                                               const UndirectedCycle& c);

struct ClassifiedCycle {
  UndirectedCycle cycle;
  CycleOrientationClass orientation;
};

// Every undirected cycle of the given length, each reported once, starting at
// its smallest vertex with the smaller neighbour second.
std::vector<UndirectedCycle> CyclesOfLength(const OrientedGraph& g, int k);

// All unbalanced 4- and 5-cycles of g.
std::vector<ClassifiedCycle> FindUnbalancedSmallCycles(const OrientedGraph& g);

// Number of dihedral orbits of orientations of the k-cycle, by enumerating
// all 2^k direction words.
int OrientationOrbitCount(int k);

// A shortest well-directed cycle, listed along its arcs (v[i] -> v[i+1]).
std::optional<UndirectedCycle> FindDirectedCycle(const OrientedGraph& g);

// All simple directed cycles up to `max_length`, each listed once along its
// arcs starting from its smallest vertex. Stops after `limit` cycles.
std::vector<UndirectedCycle> DirectedCycles(const OrientedGraph& g,
                                            int max_length,
                                            std::size_t limit = 100000);

// All simple undirected cycles up to `max_length` (once each).
std::vector<UndirectedCycle> UndirectedCycles(const OrientedGraph& g,
                                              int max_length,
                                              std::size_t limit = 100000);

// All undirected shortest paths from x to y (each includes both endpoints),
// at most `limit` of them.
std::vector<std::vector<VertexId>> ShortestPaths(const OrientedGraph& g,
                                                 VertexId x, VertexId y,
                                                 std::size_t limit = 10000);

}  // namespace pursuit

#endif  // PURSUIT_CYCLES_H_
