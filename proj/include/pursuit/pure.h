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

#ifndef PURSUIT_PURE_H_
#define PURSUIT_PURE_H_

#include <optional>
#include <utility>
#include <vector>

#include "pursuit/game.h"
#include "pursuit/graph.h"
#include "pursuit/solver.h"

namespace pursuit {

// Output of the backward induction on the strong product graph.
class PureEqStructure {
 public:
  const OrientedGraph& graph() const { return graph_; }

  // Losing states, closed under mirroring.
  bool losing(GameState s) const { return f_inf_[Index(s)]; }
  std::vector<GameState> losing_states() const;

  // Surviving moves of the first player at (u, v); empty on losing states
  // that the sweep itself added or that start dominated.
  const std::vector<VertexId>& labels(GameState s) const {
    return labels_[Index(s)];
  }

  // First t with s in F_t, before mirroring; nullopt for states that are
  // losing only through their mirror, or not losing at all.
  std::optional<int> round(GameState s) const { return rounds_[Index(s)]; }

  // Number of sweeps run, and the size of F_t after each of them (index 0
  // holds |F_0|).
  int sweeps() const { return static_cast<int>(chain_sizes_.size()) - 1; }
  const std::vector<int>& chain_sizes() const { return chain_sizes_; }

 private:
  friend PureEqStructure ComputePureStructure(const OrientedGraph& g);

  explicit PureEqStructure(const OrientedGraph& g) : graph_(g) {}
  int Index(GameState s) const { return StateIndex(graph_, s); }

  OrientedGraph graph_;
  std::vector<bool> f_inf_;
  std::vector<std::vector<VertexId>> labels_;
  std::vector<std::optional<int>> rounds_;
  std::vector<int> chain_sizes_;
};

// Runs the fixpoint: labels start as closed neighbourhoods, F_0 holds the
// states whose first player is dominated, and each sweep removes a move u'
// from l(u, v) when some answer v' lands in F_t. At least one sweep is run.
PureEqStructure ComputePureStructure(const OrientedGraph& g);

// Joint moves (u', v') with u' in l(u, v), v' in l(v, u) and (u', v') not
// losing. Throws kPrecondition on a losing state.
std::vector<GameState> PureEquilibriumMoves(const PureEqStructure& ps,
                                            GameState s);

// Follows the first pure equilibrium move from s0 until a state repeats.
PurePath ExtractPurePath(const PureEqStructure& ps, GameState s0);

// True when every round after the initial one has payoff 0.
bool VerifyPurePayoffZero(const OrientedGraph& g, const PurePath& path);

}  // namespace pursuit

#endif  // PURSUIT_PURE_H_
