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

#ifndef PURSUIT_TESTS_ORACLES_H_
#define PURSUIT_TESTS_ORACLES_H_

#include <map>
#include <numeric>
#include <tuple>

#include "pursuit/game.h"
#include "pursuit/graph.h"

namespace pursuit::testing {

// The second player at v wins from (u, v) within `depth` moves if the first
// player is already dominated, or every first-player move has an answer that
// wins within depth - 1.
class GameTreeOracle {
 public:
  explicit GameTreeOracle(const OrientedGraph& g) : g_(g) {}

  bool Wins(GameState s, int depth) {
    auto key = std::make_tuple(s.x, s.y, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool win = g_.has_arc(s.y, s.x);
    if (!win && depth > 0) {
      win = true;
      for (VertexId u : g_.moves(s.x)) {
        bool answered = false;
        for (VertexId v : g_.moves(s.y)) {
          answered = answered || Wins({u, v}, depth - 1);
        }
        win = win && answered;
      }
    }
    return memo_[key] = win;
  }

 private:
  const OrientedGraph& g_;
  std::map<std::tuple<int, int, int>, bool> memo_;
};

// Cauchy-Frobenius count of k-cycle orientations under the dihedral group.
// Rotations fix 2^gcd(j, k) words; a reflection fixes none when it maps some
// edge to itself (the edge would have to flip), else 2^(k/2).
inline int BurnsideOrbitCount(int k) {
  long total = 0;
  for (int j = 0; j < k; ++j) total += 1L << std::gcd(j, k);
  if (k % 2 == 0) total += static_cast<long>(k / 2) << (k / 2);
  return static_cast<int>(total / (2 * k));
}

}  // namespace pursuit::testing

#endif  // PURSUIT_TESTS_ORACLES_H_
