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

#include "pursuit/game.h"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace pursuit {

GameConfig GameConfig::Create(OrientedGraph graph, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    ThrowInvalid("delta must lie in (0, 1)");
  }
  return {std::move(graph), delta};
}

void ValidateMove(const OrientedGraph& g, VertexId from, const MixedMove& m) {
  double total = 0.0;
  for (const auto& [v, p] : m) {
    if (v != from && (v < 0 || v >= g.num_vertices() || !g.adjacent(from, v))) {
      ThrowInvalid("move from " + g.name(from) + " leaves its neighbourhood");
    }
    if (!(p >= 0.0)) ThrowInvalid("negative move probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    ThrowInvalid("move probabilities from " + g.name(from) +
                 " do not sum to 1");
  }
}

MarkovStrategy::MarkovStrategy(const OrientedGraph& g, Player player)
    : n_(g.num_vertices()), player_(player), moves_(n_ * n_) {}

MarkovStrategy MarkovStrategy::Pure(
    const OrientedGraph& g, Player player,
    const std::function<VertexId(GameState)>& rule) {
  MarkovStrategy out(g, player);
  for (int i = 0; i < g.num_vertices() * g.num_vertices(); ++i) {
    GameState s = StateAt(g, i);
    out.moves_[i] = {{rule(s), 1.0}};
  }
  return out;
}

MarkovStrategy MarkovStrategy::Static(const OrientedGraph& g, Player player) {
  return Pure(g, player, [player](GameState s) { return Own(s, player); });
}

void MarkovStrategy::set(GameState s, MixedMove m) {
  moves_[Index(s)] = std::move(m);
}

void MarkovStrategy::Validate(const OrientedGraph& g) const {
  for (int i = 0; i < n_ * n_; ++i) {
    ValidateMove(g, Own(StateAt(g, i), player_), moves_[i]);
  }
}

MarkovStrategy MarkovStrategy::Swapped() const {
  MarkovStrategy out = *this;
  out.player_ = Opponent(player_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) out.moves_[y * n_ + x] = moves_[x * n_ + y];
  }
  return out;
}

int RoundPayoff(const OrientedGraph& g, GameState s) {
  return g.orientation(s.x, s.y);
}

std::vector<double> EvaluateProfileAll(const GameConfig& cfg,
                                       const MarkovStrategy& sx,
                                       const MarkovStrategy& sy) {
  const OrientedGraph& g = cfg.graph;
  if (sx.player() != Player::kX || sy.player() != Player::kY) {
    ThrowInvalid("strategies must be given as (x, y)");
  }
  sx.Validate(g);
  sy.Validate(g);
  const int states = cfg.num_states();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(states, states);
  Eigen::VectorXd b(states);
  for (int i = 0; i < states; ++i) {
    GameState s = StateAt(g, i);
    b(i) = (1.0 - cfg.delta) * RoundPayoff(g, s);
    for (const auto& [u, p] : sx.at(s)) {
      for (const auto& [v, q] : sy.at(s)) {
        a(i, StateIndex(g, {u, v})) -= cfg.delta * p * q;
      }
    }
  }
  Eigen::VectorXd sol = a.partialPivLu().solve(b);
  if (!sol.allFinite() || (a * sol - b).lpNorm<Eigen::Infinity>() > 1e-9) {
    ThrowInternal("profile evaluation failed to solve the linear system");
  }
  return {sol.data(), sol.data() + states};
}

double EvaluateProfile(const GameConfig& cfg, const MarkovStrategy& sx,
                       const MarkovStrategy& sy, GameState s0) {
  return EvaluateProfileAll(cfg, sx, sy)[StateIndex(cfg.graph, s0)];
}

namespace {

VertexId Sample(const MixedMove& m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r = unit(rng);
  VertexId last = m.begin()->first;
  for (const auto& [v, p] : m) {
    if (r < p) return v;
    r -= p;
    if (p > 0.0) last = v;
  }
  return last;
}

}  // namespace

Playout SimulatePlayout(const GameConfig& cfg, const MarkovStrategy& sx,
                        const MarkovStrategy& sy, GameState s0,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution stop(1.0 - cfg.delta);
  Playout out;
  GameState s = s0;
  out.states.push_back(s);
  while (!stop(rng)) {
    s = {Sample(sx.at(s), rng), Sample(sy.at(s), rng)};
    out.states.push_back(s);
  }
  out.payoff = RoundPayoff(cfg.graph, s);
  return out;
}

}  // namespace pursuit
