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

#include "pursuit/enumerate.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace pursuit {

namespace {

std::vector<std::pair<int, int>> Pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::uint64_t Encode(int n, const std::vector<int>& perm,
                     const OrientedGraph& g) {
  // Vertex a of g becomes perm[a].
  std::vector<int> inverse(n);
  for (int a = 0; a < n; ++a) inverse[perm[a]] = a;
  std::uint64_t code = 0;
  for (auto [i, j] : Pairs(n)) {
    int o = g.orientation(inverse[i], inverse[j]);
    code = code * 3 + (o == 0 ? 0 : (o > 0 ? 1 : 2));
  }
  return code;
}

}  // namespace

std::uint64_t OrientationCode(const OrientedGraph& g) {
  std::vector<int> id(g.num_vertices());
  std::iota(id.begin(), id.end(), 0);
  return Encode(g.num_vertices(), id, g);
}

std::uint64_t CanonicalCode(const OrientedGraph& g) {
  const int n = g.num_vertices();
  if (n > 8) ThrowInvalid("canonical codes support at most 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = Encode(n, perm, g);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, Encode(n, perm, g));
  }
  return best;
}

OrientedGraph GraphFromCode(int n, std::uint64_t code) {
  auto pairs = Pairs(n);
  std::vector<Arc> arcs;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    int digit = code % 3;
    code /= 3;
    if (digit == 1) arcs.emplace_back(it->first, it->second);
    if (digit == 2) arcs.emplace_back(it->second, it->first);
  }
  std::sort(arcs.begin(), arcs.end());
  return OrientedGraph::FromArcs(n, arcs);
}

std::vector<OrientedGraph> ConnectedOrientedGraphs(int n) {
  if (n < 1 || n > 6) ThrowInvalid("enumeration supports 1 <= n <= 6");
  auto pairs = Pairs(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::set<std::uint64_t> seen;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::pair<int, int>> edges;
    std::uint64_t c = code;
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      if (c % 3) edges.push_back(*it);
      c /= 3;
    }
    if (!IsConnectedUndirected(n, edges)) continue;
    seen.insert(CanonicalCode(GraphFromCode(n, code)));
  }
  std::vector<OrientedGraph> out;
  for (std::uint64_t code : seen) out.push_back(GraphFromCode(n, code));
  return out;
}

}  // namespace pursuit
