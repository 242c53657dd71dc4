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

#ifndef PURSUIT_TESTS_TEST_UTIL_H_
#define PURSUIT_TESTS_TEST_UTIL_H_

#include <string>
#include <utility>
#include <vector>

#include "pursuit/graph.h"

namespace pursuit::testing {

inline OrientedGraph Make(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  return OrientedGraph::Create({}, edges);
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 on vertices "v0".."v{n-1}".
inline OrientedGraph DirectedCycle(int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back("v" + std::to_string(i),
                       "v" + std::to_string((i + 1) % n));
  }
  return Make(edges);
}

inline std::string V(int i) { return "v" + std::to_string(i); }

// T -> M -> B.
inline OrientedGraph Path3() { return Make({{"T", "M"}, {"M", "B"}}); }

}  // namespace pursuit::testing

#endif  // PURSUIT_TESTS_TEST_UTIL_H_
