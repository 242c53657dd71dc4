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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "pursuit/game.h"
#include "pursuit/matrix_game.h"
#include "test_util.h"

namespace pursuit {
namespace {

using testing::DirectedCycle;
using testing::Path3;

TEST_CASE("matrix game examples") {
  MatrixSolution rps =
      SolveMatrixGame({{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}});
  CHECK(rps.value == doctest::Approx(0.0).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) {
    CHECK(rps.row_strategy[i] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(rps.col_strategy[i] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  }
  MatrixSolution pennies = SolveMatrixGame({{{1, -1}, {-1, 1}}});
  CHECK(std::abs(pennies.value) < 1e-12);
  CHECK(pennies.row_strategy[0] == doctest::Approx(0.5));
  CHECK(pennies.col_strategy[0] == doctest::Approx(0.5));

  // Closed form for 2x2 games without a saddle point.
  double a = 3, b = 1, c = 1, d = 2;
  MatrixSolution s = SolveMatrixGame({{{a, b}, {c, d}}});
  CHECK(s.value == doctest::Approx((a * d - b * c) / (a + d - b - c)));
  CHECK(s.row_strategy[0] == doctest::Approx((d - c) / (a + d - b - c)));
  CHECK(s.col_strategy[0] == doctest::Approx((d - b) / (a + d - b - c)));

  CHECK_THROWS_AS(SolveMatrixGame({}), Error);
  CHECK_THROWS_AS(SolveMatrixGame({{{1, 2}, {3}}}), Error);
  CHECK_THROWS_AS(SolveMatrixGame({{{NAN}}}), Error);
}

MatrixGame RandomGame(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> entry(-4, 4);
  MatrixGame g;
  g.payoffs.assign(m, std::vector<double>(n));
  for (auto& row : g.payoffs) {
    for (double& x : row) x = entry(rng) / 4.0;
  }
  return g;
}

TEST_CASE("matrix game optimality certificates") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    MatrixGame g = RandomGame(rng, 1 + trial % 6, 1 + (trial / 6) % 6);
    MatrixSolution s = SolveMatrixGame(g);
    CHECK(ExploitabilityGap(g, s) <= 1e-9);
    CHECK(ExpectedPayoff(g, s.row_strategy, s.col_strategy) ==
          doctest::Approx(s.value).epsilon(1e-9));

    // Shift invariance.
    MatrixGame shifted = g;
    for (auto& row : shifted.payoffs) {
      for (double& x : row) x += 2.0;
    }
    MatrixSolution t = SolveMatrixGame(shifted);
    CHECK(t.value == doctest::Approx(s.value + 2.0).epsilon(1e-12));
    CHECK(t.row_strategy == s.row_strategy);
    CHECK(t.col_strategy == s.col_strategy);

    // Monotone in every entry.
    MatrixGame bumped = g;
    int i = rng() % g.rows(), j = rng() % g.cols();
    bumped.payoffs[i][j] += 0.5;
    CHECK(SolveMatrixGame(bumped).value >= s.value - 1e-12);
  }
}

TEST_CASE("round payoff") {
  OrientedGraph p = Path3();
  VertexId t = p.index("T"), m = p.index("M"), b = p.index("B");
  CHECK(RoundPayoff(p, {t, m}) == 1);
  CHECK(RoundPayoff(p, {m, t}) == -1);
  CHECK(RoundPayoff(p, {t, t}) == 0);
  CHECK(RoundPayoff(p, {t, b}) == 0);
  OrientedGraph c4 = DirectedCycle(4);
  CHECK(RoundPayoff(c4, {0, 2}) == 0);
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      CHECK(RoundPayoff(c4, {u, v}) == -RoundPayoff(c4, {v, u}));
    }
  }
}

MarkovStrategy RandomStrategy(const OrientedGraph& g, Player p,
                              std::mt19937& rng) {
  MarkovStrategy s(g, p);
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  for (int i = 0; i < g.num_vertices() * g.num_vertices(); ++i) {
    GameState st = StateAt(g, i);
    MixedMove m;
    double total = 0;
    for (VertexId v : g.moves(Own(st, p))) total += m[v] = unit(rng);
    for (auto& [v, q] : m) q /= total;
    double sum = 0;
    for (auto& [v, q] : m) sum += q;
    m.begin()->second += 1.0 - sum;
    s.set(st, m);
  }
  return s;
}

// Oracle: truncated forward propagation of the state distribution.
double TruncatedPayoff(const GameConfig& cfg, const MarkovStrategy& sx,
                       const MarkovStrategy& sy, GameState s0) {
  const OrientedGraph& g = cfg.graph;
  std::vector<double> dist(cfg.num_states(), 0.0);
  dist[StateIndex(g, s0)] = 1.0;
  double total = 0.0, weight = 1.0 - cfg.delta;
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> next(cfg.num_states(), 0.0);
    for (int i = 0; i < cfg.num_states(); ++i) {
      if (dist[i] == 0.0) continue;
      GameState s = StateAt(g, i);
      total += weight * dist[i] * RoundPayoff(g, s);
      for (const auto& [u, p] : sx.at(s)) {
        for (const auto& [v, q] : sy.at(s)) {
          next[StateIndex(g, {u, v})] += dist[i] * p * q;
        }
      }
    }
    dist.swap(next);
    weight *= cfg.delta;
  }
  return total;
}

TEST_CASE("profile evaluation") {
  OrientedGraph p = Path3();
  VertexId t = p.index("T"), m = p.index("M"), b = p.index("B");
  GameConfig cfg = GameConfig::Create(p, 0.5);
  MarkovStrategy sx = MarkovStrategy::Static(p, Player::kX);
  MarkovStrategy sy = MarkovStrategy::Static(p, Player::kY);
  CHECK(EvaluateProfile(cfg, sx, sy, {t, b}) == doctest::Approx(0.0));
  CHECK(EvaluateProfile(cfg, sx, sy, {t, m}) == doctest::Approx(1.0));

  // Walking together along parents on the directed 4-cycle.
  OrientedGraph c4 = DirectedCycle(4);
  GameConfig cfg4 = GameConfig::Create(c4, 0.5);
  auto to_parent = [&](VertexId v) { return c4.parents(v)[0]; };
  MarkovStrategy wx = MarkovStrategy::Pure(
      c4, Player::kX, [&](GameState s) { return to_parent(s.x); });
  MarkovStrategy wy = MarkovStrategy::Pure(
      c4, Player::kY, [&](GameState s) { return to_parent(s.y); });
  CHECK(EvaluateProfile(cfg4, wx, wy, {0, 0}) == doctest::Approx(0.0));

  CHECK_THROWS_AS(GameConfig::Create(p, 1.0), Error);
  CHECK_THROWS_AS(GameConfig::Create(p, 0.0), Error);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    OrientedGraph g = trial % 2 ? DirectedCycle(5) : Path3();
    GameConfig c = GameConfig::Create(g, 0.2 + 0.03 * trial);
    MarkovStrategy rx = RandomStrategy(g, Player::kX, rng);
    MarkovStrategy ry = RandomStrategy(g, Player::kY, rng);
    std::vector<double> all = EvaluateProfileAll(c, rx, ry);
    std::vector<double> mirrored =
        EvaluateProfileAll(c, ry.Swapped(), rx.Swapped());
    for (int i = 0; i < c.num_states(); ++i) {
      GameState s = StateAt(g, i);
      CHECK(std::abs(all[i]) <= 1.0);
      CHECK(all[i] == doctest::Approx(TruncatedPayoff(c, rx, ry, s))
                          .epsilon(1e-9));
      CHECK(all[i] ==
            doctest::Approx(-mirrored[StateIndex(g, Mirror(s))]).epsilon(1e-12));
    }
  }
}

TEST_CASE("playout sampling") {
  OrientedGraph p = Path3();
  VertexId t = p.index("T"), b = p.index("B");
  GameConfig cfg = GameConfig::Create(p, 0.5);
  MarkovStrategy sx = MarkovStrategy::Static(p, Player::kX);
  MarkovStrategy sy = MarkovStrategy::Static(p, Player::kY);
  CHECK(SimulatePlayout(cfg, sx, sy, {t, b}, 1).payoff == 0);

  std::mt19937 rng(37);
  OrientedGraph c5 = DirectedCycle(5);
  GameConfig c = GameConfig::Create(c5, 0.7);
  MarkovStrategy rx = RandomStrategy(c5, Player::kX, rng);
  MarkovStrategy ry = RandomStrategy(c5, Player::kY, rng);
  const double exact = EvaluateProfile(c, rx, ry, {0, 2});
  const int runs = 100000;
  double sum = 0, sum_sq = 0, length = 0;
  for (int i = 0; i < runs; ++i) {
    Playout play = SimulatePlayout(c, rx, ry, {0, 2}, 1000 + i);
    sum += play.payoff;
    sum_sq += play.payoff * play.payoff;
    length += play.states.size();
  }
  double mean = sum / runs;
  double se = std::sqrt((sum_sq / runs - mean * mean) / runs);
  CHECK(std::abs(mean - exact) <= 3 * se);
  CHECK(length / runs == doctest::Approx(1.0 / (1.0 - 0.7)).epsilon(0.02));
  CHECK(SimulatePlayout(c, rx, ry, {0, 2}, 5).states ==
        SimulatePlayout(c, rx, ry, {0, 2}, 5).states);
}

}  // namespace
}  // namespace pursuit
