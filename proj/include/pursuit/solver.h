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

#ifndef PURSUIT_SOLVER_H_
#define PURSUIT_SOLVER_H_

#include <utility>
#include <vector>

#include "pursuit/game.h"
#include "pursuit/graph.h"
#include "pursuit/matrix_game.h"

namespace pursuit {

// Target sup-norm error of value iteration.
inline constexpr double kDefaultEpsilon = 1e-9;
// |V| at or below this counts as zero in every sign call.
inline constexpr double kSignThreshold = 1e-6;

enum class Arithmetic {
  // __float128 stage games: sweep-to-sweep contraction is observable down to
  // the stopping tolerance.
  kQuad,
  // long double: roughly 20x faster, enough for sign classification.
  kExtended,
};

struct ValueIterationOptions {
  double epsilon = kDefaultEpsilon;
  Arithmetic arithmetic = Arithmetic::kQuad;
};

// Bellman values V(u, v) of a player: the discounted value of the game from
// (u, v) with rewards counted after each joint move, so that
//   V(u, v) = max min E[(1 - delta) r(u', v') + delta V(u', v')].
// The payoff of the original game, which also counts the current round, is
// payoff(s) = (1 - delta) r(s) + delta V(s).
class ValueTable {
 public:
  ValueTable(GameConfig cfg, Player perspective, std::vector<double> values,
             double epsilon, std::vector<double> sweep_deltas);

  const GameConfig& config() const { return cfg_; }
  const OrientedGraph& graph() const { return cfg_.graph; }
  Player perspective() const { return perspective_; }
  double delta() const { return cfg_.delta; }
  double epsilon() const { return epsilon_; }

  double value(GameState s) const {
    return values_[StateIndex(cfg_.graph, s)];
  }
  double value(VertexId u, VertexId v) const { return value({u, v}); }
  double payoff(GameState s) const;

  const std::vector<double>& values() const { return values_; }
  int sweeps() const { return static_cast<int>(sweep_deltas_.size()); }
  // Sup-norm change of every sweep, in order.
  const std::vector<double>& sweep_deltas() const { return sweep_deltas_; }

 private:
  GameConfig cfg_;
  Player perspective_;
  std::vector<double> values_;
  double epsilon_;
  std::vector<double> sweep_deltas_;
};

// Signed payoff of `p` for the round at s.
inline int RoundPayoffFor(const OrientedGraph& g, GameState s, Player p) {
  return p == Player::kX ? RoundPayoff(g, s) : -RoundPayoff(g, s);
}

// Shapley iteration from V = 0 with synchronous sweeps, stopping once a sweep
// changes no value by more than epsilon (1 - delta) / delta. Values are from
// x's perspective.
ValueTable ValueIteration(const GameConfig& cfg,
                          const ValueIterationOptions& options = {});

// Stage game at s: rows are x's moves, columns y's moves (both sorted), with
// entries (1 - delta) r(u', v') + delta V(u', v').
MatrixGame StageGame(const ValueTable& vt, GameState s);

// One optimal (x, y) pair for the stage game at s.
std::pair<MixedMove, MixedMove> OptimalStageStrategies(const ValueTable& vt,
                                                       GameState s);

// The stationary profile playing OptimalStageStrategies everywhere.
std::pair<MarkovStrategy, MarkovStrategy> OptimalProfile(const ValueTable& vt);

// Moves of `player` that are not children of any vertex within distance one
// of the opponent. Requires a strongly connected graph of girth at least 6
// and a non-adjacent pair.
std::vector<VertexId> SafeMoveSet(const OrientedGraph& g, GameState s,
                                  Player player);

// u -> v is decisive when the player at u has a strictly positive value over
// the player at v, the round at (u, v) included: (1 - delta) + delta V(u, v).
bool IsDecisiveEdge(const ValueTable& vt, VertexId u, VertexId v);
bool IsEdgeDecisive(const ValueTable& vt);

struct GammaThreshold {
  int a;
  double gamma;
};

// Positive root of gamma^(a-2) + gamma - 1 = 0 by bisection. Requires a >= 4.
GammaThreshold Gamma(int a);

// Optimal values of the decision process faced by `responder` when the other
// player is frozen to `opponent`, in the responder's perspective and with the
// same reward timing as ValueTable.
ValueTable BestResponseValue(const GameConfig& cfg,
                             const MarkovStrategy& opponent, Player responder,
                             double epsilon = kDefaultEpsilon);

// Deterministic on-path play: states[i + 1] follows states[i], and the last
// state is followed by states[loop_start].
struct PurePath {
  std::vector<GameState> states;
  int loop_start = 0;

  int size() const { return static_cast<int>(states.size()); }
  int next(int i) const { return i + 1 < size() ? i + 1 : loop_start; }
};

// Throws kInvalidArgument unless every step is a legal joint move.
void ValidatePath(const OrientedGraph& g, const PurePath& path);

// Discounted value of the remaining path after each state, from x's
// perspective: C(i) = sum_k (1 - delta) delta^k r(s_{i+1+k}).
std::vector<double> PathContinuations(const GameConfig& cfg,
                                      const PurePath& path);

struct DeviationReport {
  bool equilibrium = true;
  double worst_gain = 0.0;
  int worst_index = -1;
  Player worst_player = Player::kX;
  VertexId worst_move = -1;
};

// A one-step deviation at on-path state i followed by minmax punishment is
// worth (1 - delta) r(s') + delta V(s') to the deviator; the path is an
// equilibrium when no such deviation beats the path continuation by more
// than kSignThreshold.
DeviationReport CheckProfileEquilibrium(const ValueTable& vt,
                                        const PurePath& path);

}  // namespace pursuit

#endif  // PURSUIT_SOLVER_H_
