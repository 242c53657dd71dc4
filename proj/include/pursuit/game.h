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

#ifndef PURSUIT_GAME_H_
#define PURSUIT_GAME_H_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "pursuit/graph.h"

namespace pursuit {

enum class Player { kX, kY };

inline Player Opponent(Player p) {
  return p == Player::kX ? Player::kY : Player::kX;
}

struct GameConfig {
  OrientedGraph graph;
  double delta;

  // Throws kInvalidArgument unless 0 < delta < 1.
  static GameConfig Create(OrientedGraph graph, double delta);

  int num_states() const {
    return graph.num_vertices() * graph.num_vertices();
  }
};

struct GameState {
  VertexId x;
  VertexId y;

  bool operator==(const GameState&) const = default;
  auto operator<=>(const GameState&) const = default;
};

inline int StateIndex(const OrientedGraph& g, GameState s) {
  return s.x * g.num_vertices() + s.y;
}
inline GameState StateAt(const OrientedGraph& g, int index) {
  return {index / g.num_vertices(), index % g.num_vertices()};
}
inline GameState Mirror(GameState s) { return {s.y, s.x}; }

// Position of player p in state s.
inline VertexId Own(GameState s, Player p) {
  return p == Player::kX ? s.x : s.y;
}

// Distribution over the closed neighbourhood of the mover's vertex.
using MixedMove = std::map<VertexId, double>;

// Throws kInvalidArgument unless the support lies in the closed
// neighbourhood of `from` and the probabilities sum to 1 within 1e-12.
void ValidateMove(const OrientedGraph& g, VertexId from, const MixedMove& m);

// Memoryless strategy of one player: a mixed move for every state.
class MarkovStrategy {
 public:
  MarkovStrategy(const OrientedGraph& g, Player player);

  // Deterministic strategy from a state -> move rule.
  static MarkovStrategy Pure(const OrientedGraph& g, Player player,
                             const std::function<VertexId(GameState)>& rule);
  // Stay put everywhere.
  static MarkovStrategy Static(const OrientedGraph& g, Player player);

  Player player() const { return player_; }
  const MixedMove& at(GameState s) const { return moves_[Index(s)]; }
  void set(GameState s, MixedMove m);

  // Throws kInvalidArgument if some state has no valid move.
  void Validate(const OrientedGraph& g) const;

  // Same moves with the roles of the players exchanged: the result is a
  // strategy for the opponent, indexed by mirrored states.
  MarkovStrategy Swapped() const;

 private:
  int Index(GameState s) const { return s.x * n_ + s.y; }

  int n_;
  Player player_;
  std::vector<MixedMove> moves_;
};

// +1 if x -> y, -1 if y -> x, 0 otherwise.
int RoundPayoff(const OrientedGraph& g, GameState s);

// Exact discounted payoff (1 - delta) * sum_t delta^t E[r(x_t, y_t)] of x
// from every state, counting round 0. Indexed by StateIndex.
std::vector<double> EvaluateProfileAll(const GameConfig& cfg,
                                       const MarkovStrategy& sx,
                                       const MarkovStrategy& sy);

double EvaluateProfile(const GameConfig& cfg, const MarkovStrategy& sx,
                       const MarkovStrategy& sy, GameState s0);

struct Playout {
  std::vector<GameState> states;  // states[0] is the start state
  int payoff;                     // round payoff at the final state
};

// Samples one episode: after every round the game ends with probability
// 1 - delta. The realised payoff is the round payoff of the last state, an
// unbiased sample of EvaluateProfile.
Playout SimulatePlayout(const GameConfig& cfg, const MarkovStrategy& sx,
                        const MarkovStrategy& sy, GameState s0,
                        std::uint64_t seed);

}  // namespace pursuit

#endif  // PURSUIT_GAME_H_
