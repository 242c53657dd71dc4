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

#include "pursuit/solver.h"
#include "test_util.h"

namespace pursuit {
namespace {

using testing::DirectedCycle;
using testing::Make;
using testing::Path3;

void CheckHygiene(const ValueTable& vt) {
  const OrientedGraph& g = vt.graph();
  for (int u = 0; u < g.num_vertices(); ++u) {
    CHECK(std::abs(vt.value(u, u)) <= 2e-9);
    for (int v = 0; v < g.num_vertices(); ++v) {
      CHECK(std::abs(vt.value(u, v) + vt.value(v, u)) <= 2e-9);
      CHECK(std::abs(vt.value(u, v)) <= 1.0);
    }
  }
  const auto& d = vt.sweep_deltas();
  for (std::size_t t = 1; t < d.size(); ++t) {
    CHECK(d[t] <= (vt.delta() + 1e-9) * d[t - 1]);
  }
}

// Oracle: the optimal stationary profile evaluated by a linear solve must
// reproduce the table's payoffs, and no best response against either half of
// it may do better than the table.
void CheckAgainstPolicyEvaluation(const ValueTable& vt) {
  auto [sx, sy] = OptimalProfile(vt);
  std::vector<double> exact = EvaluateProfileAll(vt.config(), sx, sy);
  ValueTable bx = BestResponseValue(vt.config(), sy, Player::kX);
  ValueTable by = BestResponseValue(vt.config(), sx, Player::kY);
  for (int i = 0; i < vt.config().num_states(); ++i) {
    GameState s = StateAt(vt.graph(), i);
    CHECK(exact[i] == doctest::Approx(vt.payoff(s)).epsilon(1e-7));
    CHECK(bx.value(s) == doctest::Approx(vt.value(s)).epsilon(2e-8));
    CHECK(by.value(s) == doctest::Approx(-vt.value(s)).epsilon(2e-8));
  }
}

TEST_CASE("directed 3-cycle is repeated rock-paper-scissors") {
  OrientedGraph c3 = DirectedCycle(3);
  ValueTable vt = ValueIteration(GameConfig::Create(c3, 0.5));
  for (double v : vt.values()) CHECK(std::abs(v) <= 1e-6);
  for (int i = 0; i < 9; ++i) {
    auto [mx, my] = OptimalStageStrategies(vt, StateAt(c3, i));
    REQUIRE(mx.size() == 3);
    for (const auto& [v, p] : mx) CHECK(std::abs(p - 1.0 / 3) <= 1e-6);
    for (const auto& [v, p] : my) CHECK(std::abs(p - 1.0 / 3) <= 1e-6);
  }
  // Only the first round separates the players.
  CHECK(vt.payoff({0, 1}) == doctest::Approx(0.5));
  CHECK(IsDecisiveEdge(vt, 0, 1));
  CheckHygiene(vt);
  CheckAgainstPolicyEvaluation(vt);
}

TEST_CASE("directed 4-cycle") {
  OrientedGraph c4 = DirectedCycle(4);
  ValueTable vt = ValueIteration(GameConfig::Create(c4, 0.5));
  for (int u = 0; u < 4; ++u) {
    CHECK(std::abs(vt.value(u, u)) <= 1e-6);
    CHECK(std::abs(vt.value(u, (u + 2) % 4)) <= 1e-6);
    auto [mx, my] = OptimalStageStrategies(vt, {u, (u + 2) % 4});
    VertexId parent = c4.parents(u)[0];
    double on_parent = mx.count(parent) ? mx.at(parent) : 0.0;
    CHECK(on_parent <= 0.5 + 1e-6);
  }
  CheckHygiene(vt);
  CheckAgainstPolicyEvaluation(vt);
}

TEST_CASE("3-path") {
  OrientedGraph p = Path3();
  VertexId t = p.index("T"), b = p.index("B");
  ValueTable vt = ValueIteration(GameConfig::Create(p, 0.5));
  CHECK(vt.value(b, t) < -1e-6);
  CHECK(vt.value(t, b) >= 1e-3);
  CheckHygiene(vt);
  CheckAgainstPolicyEvaluation(vt);

  // Against a static opponent at B, the player at T walks to M.
  MarkovStrategy still = MarkovStrategy::Static(p, Player::kY);
  ValueTable br = BestResponseValue(GameConfig::Create(p, 0.5), still,
                                    Player::kX);
  CHECK(br.value(t, b) > 1e-6);
}

TEST_CASE("girth six bracket") {
  for (int n : {6, 7, 8}) {
    OrientedGraph c = DirectedCycle(n);
    for (double delta : {0.3, 0.5}) {
      ValueTable vt = ValueIteration(GameConfig::Create(c, delta));
      const double lo = -4 * (1 - delta) / (4 - delta);
      const double hi = -(1 - delta);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (c.has_arc(v, u)) {
            CHECK(vt.payoff({u, v}) >= lo - 1e-6);
            CHECK(vt.payoff({u, v}) <= hi + 1e-6);
            CHECK(IsDecisiveEdge(vt, v, u));
          } else if (!c.adjacent(u, v)) {
            CHECK(std::abs(vt.value(u, v)) <= 1e-6);
          }
        }
      }
      CheckHygiene(vt);
    }
  }
}

TEST_CASE("arithmetic modes agree") {
  OrientedGraph g = Make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"},
                          {"a", "e"}, {"e", "f"}});
  GameConfig cfg = GameConfig::Create(g, 0.8);
  ValueTable quad = ValueIteration(cfg);
  ValueTable ext = ValueIteration(cfg, {kDefaultEpsilon, Arithmetic::kExtended});
  for (int i = 0; i < cfg.num_states(); ++i) {
    CHECK(quad.values()[i] == doctest::Approx(ext.values()[i]).epsilon(1e-8));
  }
  CheckHygiene(quad);
  CheckAgainstPolicyEvaluation(quad);
  CHECK_THROWS_AS(ValueIteration(cfg, {0.0, Arithmetic::kQuad}), Error);
}

TEST_CASE("safe moves") {
  OrientedGraph c6 = DirectedCycle(6);
  auto far = SafeMoveSet(c6, {0, 3}, Player::kX);
  CHECK(std::find(far.begin(), far.end(), 0) != far.end());
  // At distance two, x keeps away by stepping off y's side.
  auto two = SafeMoveSet(c6, {0, 2}, Player::kX);
  CHECK(std::find(two.begin(), two.end(), c6.parents(0)[0]) != two.end());
  CHECK(SafeMoveSet(c6, {0, 0}, Player::kY) == c6.parents(0));
  CHECK_THROWS_AS(SafeMoveSet(c6, {0, 1}, Player::kX), Error);
  CHECK_THROWS_AS(SafeMoveSet(DirectedCycle(5), {0, 2}, Player::kX), Error);
}

TEST_CASE("gamma thresholds") {
  CHECK(std::abs(Gamma(5).gamma - 0.68233) <= 1e-5);
  CHECK(Gamma(4).gamma == doctest::Approx((std::sqrt(5.0) - 1) / 2));
  CHECK(Gamma(6).gamma > Gamma(5).gamma);
  for (int a = 4; a <= 10; ++a) {
    double g = Gamma(a).gamma;
    CHECK(std::abs(std::pow(g, a - 2) + g - 1) < 1e-12);
  }
  CHECK_THROWS_AS(Gamma(3), Error);

  // Below gamma_a every edge of a girth >= a graph is decisive.
  for (int n : {5, 6, 7}) {
    ValueTable vt =
        ValueIteration(GameConfig::Create(DirectedCycle(n), Gamma(n).gamma - 0.05));
    CHECK(IsEdgeDecisive(vt));
  }
  // The parent of a tree edge keeps its first round even when the child can
  // escape to another parent.
  OrientedGraph fork = Make({{"y", "x"}, {"w", "x"}});
  ValueTable vf = ValueIteration(GameConfig::Create(fork, 0.9));
  CHECK(std::abs(vf.value(fork.index("y"), fork.index("x"))) <= 1e-6);
  CHECK(IsDecisiveEdge(vf, fork.index("y"), fork.index("x")));
  OrientedGraph pendant = Make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                                {"e", "a"}, {"a", "p"}});
  CHECK(IsEdgeDecisive(ValueIteration(GameConfig::Create(pendant, 0.6))));
}

TEST_CASE("profile equilibrium check") {
  OrientedGraph c4 = DirectedCycle(4);
  ValueTable vt = ValueIteration(GameConfig::Create(c4, 0.5));
  PurePath wt;
  for (VertexId v = 0;;) {
    wt.states.push_back({v, v});
    v = c4.parents(v)[0];
    if (v == 0) break;
  }
  CHECK(CheckProfileEquilibrium(vt, wt).equilibrium);

  // Staying on an edge is broken by the dominated player leaving.
  PurePath edge{{{1, 0}}, 0};
  DeviationReport r = CheckProfileEquilibrium(vt, edge);
  CHECK_FALSE(r.equilibrium);
  CHECK(r.worst_gain > 0.5);
  CHECK(r.worst_player == Player::kX);

  OrientedGraph c6 = DirectedCycle(6);
  ValueTable v6 = ValueIteration(GameConfig::Create(c6, 0.5));
  CHECK(CheckProfileEquilibrium(v6, {{{0, 3}}, 0}).equilibrium);

  CHECK_THROWS_AS(CheckProfileEquilibrium(vt, {{{0, 0}, {2, 2}}, 0}), Error);
  CHECK_THROWS_AS(CheckProfileEquilibrium(vt, {{}, 0}), Error);
}

TEST_CASE("path continuations") {
  OrientedGraph p = Path3();
  GameConfig cfg = GameConfig::Create(p, 0.6);
  VertexId t = p.index("T"), m = p.index("M"), b = p.index("B");
  // Prefix (T,B) then loop on (T,M): every later round pays 1.
  PurePath path{{{t, b}, {t, m}}, 1};
  auto c = PathContinuations(cfg, path);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(1.0));
  PurePath alternate{{{t, m}, {t, b}}, 0};
  c = PathContinuations(cfg, alternate);
  // From (T,M) the rewards run 0, 1, 0, 1, ...
  CHECK(c[0] == doctest::Approx(0.4 * 0.6 / (1 - 0.36)));
  CHECK(c[1] == doctest::Approx(0.4 / (1 - 0.36)));
}

}  // namespace
}  // namespace pursuit
