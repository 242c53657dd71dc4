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

#include "pursuit/solver.h"

#include <algorithm>
#include <cmath>

#include "pursuit/internal/simplex.h"

namespace pursuit {

ValueTable::ValueTable(GameConfig cfg, Player perspective,
                       std::vector<double> values, double epsilon,
                       std::vector<double> sweep_deltas)
    : cfg_(std::move(cfg)),
      perspective_(perspective),
      values_(std::move(values)),
      epsilon_(epsilon),
      sweep_deltas_(std::move(sweep_deltas)) {}

double ValueTable::payoff(GameState s) const {
  return (1.0 - cfg_.delta) * RoundPayoffFor(cfg_.graph, s, perspective_) +
         cfg_.delta * value(s);
}

namespace {

template <typename Real>
Real Abs(Real x) {
  return x < 0 ? -x : x;
}

template <typename Real>
ValueTable Iterate(const GameConfig& cfg, double epsilon) {
  const OrientedGraph& g = cfg.graph;
  const int n = g.num_vertices();
  const int states = n * n;
  const Real delta = cfg.delta;
  const Real stay = Real(1) - delta;
  const Real stop = static_cast<Real>(epsilon) * stay / delta;
  std::vector<Real> v(states, Real(0)), next(states);
  std::vector<double> deltas;
  std::vector<std::vector<Real>> a;
  while (true) {
    Real change = 0;
    for (int i = 0; i < states; ++i) {
      GameState s = StateAt(g, i);
      const auto& rows = g.moves(s.x);
      const auto& cols = g.moves(s.y);
      a.assign(rows.size(), std::vector<Real>(cols.size()));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          a[r][c] = stay * g.orientation(rows[r], cols[c]) +
                    delta * v[rows[r] * n + cols[c]];
        }
      }
      next[i] = internal::SolveZeroSum(a, false).value;
      change = std::max(change, Abs(next[i] - v[i]));
    }
    v.swap(next);
    deltas.push_back(static_cast<double>(change));
    if (change <= stop) break;
  }
  std::vector<double> values(states);
  for (int i = 0; i < states; ++i) values[i] = static_cast<double>(v[i]);
  return ValueTable(cfg, Player::kX, std::move(values), epsilon,
                    std::move(deltas));
}

}  // namespace

ValueTable ValueIteration(const GameConfig& cfg,
                          const ValueIterationOptions& options) {
  if (!(options.epsilon > 0.0)) ThrowInvalid("epsilon must be positive");
  if (options.arithmetic == Arithmetic::kQuad) {
    return Iterate<__float128>(cfg, options.epsilon);
  }
  return Iterate<long double>(cfg, options.epsilon);
}

MatrixGame StageGame(const ValueTable& vt, GameState s) {
  const OrientedGraph& g = vt.graph();
  MatrixGame game;
  for (VertexId u : g.moves(s.x)) {
    std::vector<double> row;
    for (VertexId v : g.moves(s.y)) {
      GameState t{u, v};
      row.push_back((1.0 - vt.delta()) * RoundPayoff(g, t) +
                    vt.delta() * vt.value(t));
    }
    game.payoffs.push_back(std::move(row));
  }
  return game;
}

std::pair<MixedMove, MixedMove> OptimalStageStrategies(const ValueTable& vt,
                                                       GameState s) {
  if (vt.perspective() != Player::kX) {
    ThrowInvalid("stage strategies need a game value table");
  }
  const OrientedGraph& g = vt.graph();
  MatrixSolution sol = SolveMatrixGame(StageGame(vt, s));
  std::pair<MixedMove, MixedMove> out;
  const auto& rows = g.moves(s.x);
  const auto& cols = g.moves(s.y);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (sol.row_strategy[i] > 0.0) out.first[rows[i]] = sol.row_strategy[i];
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (sol.col_strategy[j] > 0.0) out.second[cols[j]] = sol.col_strategy[j];
  }
  return out;
}

std::pair<MarkovStrategy, MarkovStrategy> OptimalProfile(const ValueTable& vt) {
  const OrientedGraph& g = vt.graph();
  MarkovStrategy sx(g, Player::kX);
  MarkovStrategy sy(g, Player::kY);
  for (int i = 0; i < vt.config().num_states(); ++i) {
    GameState s = StateAt(g, i);
    auto [mx, my] = OptimalStageStrategies(vt, s);
    sx.set(s, std::move(mx));
    sy.set(s, std::move(my));
  }
  return {std::move(sx), std::move(sy)};
}

std::vector<VertexId> SafeMoveSet(const OrientedGraph& g, GameState s,
                                  Player player) {
  if (!IsStronglyConnected(g)) ThrowPrecondition("graph not strongly connected");
  auto girth = Girth(g);
  if (girth && *girth < 6) ThrowPrecondition("graph girth below 6");
  if (g.adjacent(s.x, s.y)) ThrowPrecondition("players are adjacent");
  VertexId own = Own(s, player);
  VertexId other = Own(s, Opponent(player));
  std::vector<VertexId> ball = Ball(g, other, 1);
  std::vector<VertexId> out;
  for (VertexId m : g.moves(own)) {
    bool threatened = std::any_of(ball.begin(), ball.end(), [&](VertexId w) {
      return g.has_arc(w, m);
    });
    if (!threatened) out.push_back(m);
  }
  return out;
}

bool IsDecisiveEdge(const ValueTable& vt, VertexId u, VertexId v) {
  if (!vt.graph().has_arc(u, v)) {
    ThrowInvalid("not an edge: " + ArcString(vt.graph(), u, v));
  }
  double value = vt.payoff({u, v});
  if (vt.perspective() == Player::kY) value = -value;
  return value > kSignThreshold;
}

bool IsEdgeDecisive(const ValueTable& vt) {
  for (auto [u, v] : vt.graph().arcs()) {
    if (!IsDecisiveEdge(vt, u, v)) return false;
  }
  return true;
}

GammaThreshold Gamma(int a) {
  if (a < 4) ThrowInvalid("gamma needs a >= 4");
  auto f = [a](long double x) {
    return std::pow(x, static_cast<long double>(a - 2)) + x - 1.0L;
  };
  long double lo = 0.0L, hi = 1.0L;
  for (int i = 0; i < 200 && hi - lo > 1e-18L; ++i) {
    long double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return {a, static_cast<double>((lo + hi) / 2)};
}

ValueTable BestResponseValue(const GameConfig& cfg,
                             const MarkovStrategy& opponent, Player responder,
                             double epsilon) {
  if (opponent.player() != Opponent(responder)) {
    ThrowInvalid("opponent strategy belongs to the responder");
  }
  const OrientedGraph& g = cfg.graph;
  opponent.Validate(g);
  const int n = g.num_vertices();
  const int states = n * n;
  using Real = long double;
  const Real delta = cfg.delta;
  const Real stop = epsilon * (1.0L - delta) / delta;
  std::vector<Real> w(states, 0.0L), next(states);
  std::vector<double> deltas;
  while (true) {
    Real change = 0.0L;
    for (int i = 0; i < states; ++i) {
      GameState s = StateAt(g, i);
      Real best = -2.0L;
      for (VertexId a : g.moves(Own(s, responder))) {
        Real total = 0.0L;
        for (const auto& [b, p] : opponent.at(s)) {
          GameState t = responder == Player::kX ? GameState{a, b}
                                                : GameState{b, a};
          total += p * ((1.0L - delta) * RoundPayoffFor(g, t, responder) +
                        delta * w[StateIndex(g, t)]);
        }
        best = std::max(best, total);
      }
      next[i] = best;
      change = std::max(change, std::abs(best - w[i]));
    }
    w.swap(next);
    deltas.push_back(static_cast<double>(change));
    if (change <= stop) break;
  }
  return ValueTable(cfg, responder, {w.begin(), w.end()}, epsilon,
                    std::move(deltas));
}

void ValidatePath(const OrientedGraph& g, const PurePath& path) {
  if (path.states.empty()) ThrowInvalid("empty path");
  if (path.loop_start < 0 || path.loop_start >= path.size()) {
    ThrowInvalid("loop start outside the path");
  }
  const int n = g.num_vertices();
  for (const GameState& s : path.states) {
    if (s.x < 0 || s.y < 0 || s.x >= n || s.y >= n) {
      ThrowInvalid("path state outside the graph");
    }
  }
  for (int i = 0; i < path.size(); ++i) {
    GameState a = path.states[i];
    GameState b = path.states[path.next(i)];
    auto legal = [&](VertexId from, VertexId to) {
      return from == to || g.adjacent(from, to);
    };
    if (!legal(a.x, b.x) || !legal(a.y, b.y)) {
      ThrowInvalid("path step " + std::to_string(i) + " is not a legal move");
    }
  }
}

std::vector<double> PathContinuations(const GameConfig& cfg,
                                      const PurePath& path) {
  ValidatePath(cfg.graph, path);
  const int len = path.size();
  const long double delta = cfg.delta;
  auto reward = [&](int i) {
    return (1.0L - delta) * RoundPayoff(cfg.graph, path.states[i]);
  };
  std::vector<long double> c(len);
  // On the loop, C(i) sums one lap of rewards and then repeats.
  const int cycle = len - path.loop_start;
  long double lap_discount = std::pow(delta, static_cast<long double>(cycle));
  for (int i = path.loop_start; i < len; ++i) {
    long double total = 0.0L, weight = 1.0L;
    int j = i;
    for (int k = 0; k < cycle; ++k) {
      j = path.next(j);
      total += weight * reward(j);
      weight *= delta;
    }
    c[i] = total / (1.0L - lap_discount);
  }
  for (int i = path.loop_start - 1; i >= 0; --i) {
    c[i] = reward(i + 1) + delta * c[i + 1];
  }
  return {c.begin(), c.end()};
}

DeviationReport CheckProfileEquilibrium(const ValueTable& vt,
                                        const PurePath& path) {
  if (vt.perspective() != Player::kX) {
    ThrowInvalid("deviation checks need a game value table");
  }
  const OrientedGraph& g = vt.graph();
  const double delta = vt.delta();
  std::vector<double> c = PathContinuations(vt.config(), path);
  DeviationReport report;
  report.worst_gain = -2.0;
  auto worth = [&](GameState t) {
    return (1.0 - delta) * RoundPayoff(g, t) + delta * vt.value(t);
  };
  auto consider = [&](double gain, int i, Player p, VertexId move) {
    if (gain > report.worst_gain) {
      report.worst_gain = gain;
      report.worst_index = i;
      report.worst_player = p;
      report.worst_move = move;
    }
  };
  for (int i = 0; i < path.size(); ++i) {
    GameState s = path.states[i];
    GameState t = path.states[path.next(i)];
    for (VertexId a : g.moves(s.x)) {
      if (a != t.x) consider(worth({a, t.y}) - c[i], i, Player::kX, a);
    }
    for (VertexId b : g.moves(s.y)) {
      if (b != t.y) consider(c[i] - worth({t.x, b}), i, Player::kY, b);
    }
  }
  if (report.worst_index == -1) report.worst_gain = 0.0;
  report.equilibrium = report.worst_gain <= kSignThreshold;
  return report;
}

}  // namespace pursuit
