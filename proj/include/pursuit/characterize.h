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

#ifndef PURSUIT_CHARACTERIZE_H_
#define PURSUIT_CHARACTERIZE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pursuit/cycles.h"
#include "pursuit/game.h"
#include "pursuit/graph.h"
#include "pursuit/solver.h"

namespace pursuit {

enum class Verdict { kXWins, kYWins, kDraw };

std::string_view VerdictName(Verdict v);

// Structural verdict for players starting at x and y. For a win, `middle`
// holds m (even distance) or m1, m2 (odd distance), `l` is the loser-side
// neighbour of m (or m1) and `subtree` the vertices of the loser's branch.
struct WinnerVerdict {
  Verdict verdict = Verdict::kDraw;
  std::vector<VertexId> path;  // a shortest path from x to y
  std::vector<VertexId> middle;
  VertexId l = -1;
  VertexId r = -1;
  std::vector<VertexId> subtree;
  // Declared range of the losing player's payoff (adjacent pairs only).
  std::optional<std::pair<double, double>> bracket;
  std::string reason;
};

// Hypothesis checks; each throws kPrecondition naming the offending structure.
void RequireTree(const OrientedGraph& g);
void RequireStronglyConnectedGirth6(const OrientedGraph& g);
void RequireNoSmallUnbalanced(const OrientedGraph& g, int min_girth = 4);
bool SatisfiesNoSmallUnbalanced(const OrientedGraph& g, int min_girth = 4);

WinnerVerdict TreeWinner(const OrientedGraph& g, VertexId x, VertexId y);
WinnerVerdict Char6Classify(const OrientedGraph& g, VertexId x, VertexId y,
                            double delta);
WinnerVerdict Char4Winner(const OrientedGraph& g, VertexId x, VertexId y);

// Char4Winner's test evaluated along one given shortest path; the verdict
// does not depend on the path.
Verdict Char4WinnerAlongPath(const OrientedGraph& g,
                             const std::vector<VertexId>& path);

struct StaticVerdict {
  bool exists = false;
  // First violated condition of the no-static characterisation (1..5), or 0.
  int violated = 0;
  std::optional<GameState> witness;
  std::string reason;
};

StaticVerdict StaticEquilibriumExists(const OrientedGraph& g);

// Pure on-path profiles on a closed walk c0, c1, ...: both players walk it
// together, or the chaser trails the leader by k steps.
PurePath WalkingTogetherPath(const std::vector<VertexId>& walk);
PurePath ChasePath(const std::vector<VertexId>& walk, int k);

struct CycleVerdict {
  bool exists = false;
  UndirectedCycle cycle;  // directed: c[i] -> c[i + 1]
  PurePath walking_together;
  PurePath chase;
};

CycleVerdict CycleEquilibriaExist(const OrientedGraph& g);

enum class Girth5Class { kHasStatic, kFiveCycleCore };

struct Girth5Verdict {
  Girth5Class kind = Girth5Class::kHasStatic;
  StaticVerdict static_verdict;
  UndirectedCycle core;  // kFiveCycleCore only
  PurePath walking_together;
  PurePath chase;
};

Girth5Verdict Girth5Classification(const OrientedGraph& g);

struct EquilibriumWitness {
  bool found = false;
  std::vector<VertexId> walk;
  PurePath path;
  double worst_gain = 0.0;
};

struct EquilibriumReport {
  EquilibriumWitness static_eq;
  EquilibriumWitness walking_together;
  EquilibriumWitness chase;
  int chase_k = 2;
  int static_pairs = 0;  // sustainable static pairs
  bool edge_decisive = false;
  std::string method = "solver-verified";
};

struct DetectOptions {
  int chase_k = 2;
  int max_cycle_length = 12;
  std::size_t cycle_limit = 20000;
  // Try every cycle in both directions even when all edges are decisive.
  bool all_cycles = false;
};

EquilibriumReport DetectEquilibria(const ValueTable& vt,
                                   const DetectOptions& options = {});

}  // namespace pursuit

#endif  // PURSUIT_CHARACTERIZE_H_
