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

#include "pursuit/pure.h"

#include <algorithm>
#include <map>

namespace pursuit {

std::vector<GameState> PureEqStructure::losing_states() const {
  std::vector<GameState> out;
  for (int i = 0; i < static_cast<int>(f_inf_.size()); ++i) {
    if (f_inf_[i]) out.push_back(StateAt(graph_, i));
  }
  return out;
}

PureEqStructure ComputePureStructure(const OrientedGraph& g) {
  const int n = g.num_vertices();
  const int states = n * n;
  PureEqStructure ps(g);
  ps.labels_.resize(states);
  ps.rounds_.assign(states, std::nullopt);
  std::vector<bool> f(states, false);
  for (int i = 0; i < states; ++i) {
    GameState s = StateAt(g, i);
    ps.labels_[i] = g.moves(s.x);
    if (g.has_arc(s.y, s.x)) {
      f[i] = true;
      ps.rounds_[i] = 0;
    }
  }
  auto count = [](const std::vector<bool>& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), true));
  };
  ps.chain_sizes_.push_back(count(f));
  for (int t = 0;; ++t) {
    std::vector<bool> next = f;
    for (int i = 0; i < states; ++i) {
      if (next[i]) continue;
      GameState s = StateAt(g, i);
      auto& label = ps.labels_[i];
      std::erase_if(label, [&](VertexId u2) {
        for (VertexId v2 : g.moves(s.y)) {
          if (f[u2 * n + v2]) return true;
        }
        return false;
      });
      if (label.empty()) {
        next[i] = true;
        ps.rounds_[i] = t + 1;
      }
    }
    ps.chain_sizes_.push_back(count(next));
    bool changed = next != f;
    f.swap(next);
    if (!changed) break;
  }
  ps.f_inf_.assign(states, false);
  for (int i = 0; i < states; ++i) {
    if (!f[i]) continue;
    // Dominated starting states are never swept; their moves are all losing.
    ps.labels_[i].clear();
    ps.f_inf_[i] = true;
    ps.f_inf_[StateIndex(g, Mirror(StateAt(g, i)))] = true;
  }
  return ps;
}

std::vector<GameState> PureEquilibriumMoves(const PureEqStructure& ps,
                                            GameState s) {
  if (ps.losing(s)) {
    const OrientedGraph& g = ps.graph();
    ThrowPrecondition("state (" + g.name(s.x) + ", " + g.name(s.y) +
                      ") is losing for one of the players");
  }
  std::vector<GameState> out;
  for (VertexId u : ps.labels(s)) {
    for (VertexId v : ps.labels(Mirror(s))) {
      if (!ps.losing({u, v})) out.push_back({u, v});
    }
  }
  return out;
}

PurePath ExtractPurePath(const PureEqStructure& ps, GameState s0) {
  PurePath path;
  std::map<GameState, int> seen;
  GameState s = s0;
  while (!seen.count(s)) {
    seen[s] = path.size();
    path.states.push_back(s);
    auto moves = PureEquilibriumMoves(ps, s);
    if (moves.empty()) ThrowInternal("surviving state without a pure move");
    s = moves.front();
  }
  path.loop_start = seen[s];
  return path;
}

bool VerifyPurePayoffZero(const OrientedGraph& g, const PurePath& path) {
  ValidatePath(g, path);
  for (int i = 1; i < path.size(); ++i) {
    if (RoundPayoff(g, path.states[i]) != 0) return false;
  }
  // The loop also revisits its first state after round 0.
  return path.loop_start > 0 ||
         RoundPayoff(g, path.states[path.loop_start]) == 0;
}

}  // namespace pursuit
