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

#include "pursuit/cycles.h"

#include <algorithm>
#include <deque>
#include <set>

namespace pursuit {

void ValidateCycle(const OrientedGraph& g, const UndirectedCycle& c) {
  const int k = c.length();
  if (k < 3) ThrowInvalid("a cycle needs at least 3 vertices");
  std::set<VertexId> seen;
  for (VertexId v : c.vertices) {
    if (v < 0 || v >= g.num_vertices()) ThrowInvalid("unknown cycle vertex");
    if (!seen.insert(v).second) {
      ThrowInvalid("cycle repeats vertex " + g.name(v));
    }
  }
  for (int i = 0; i < k; ++i) {
    VertexId a = c.vertices[i];
    VertexId b = c.vertices[(i + 1) % k];
    if (!g.adjacent(a, b)) {
      ThrowInvalid("not a cycle: " + g.name(a) + " and " + g.name(b) +
                   " are not adjacent");
    }
  }
}

bool IsWellDirected(const OrientedGraph& g, const UndirectedCycle& c) {
  const int k = c.length();
  int forward = 0;
  for (int i = 0; i < k; ++i) {
    if (g.has_arc(c.vertices[i], c.vertices[(i + 1) % k])) ++forward;
  }
  return forward == 0 || forward == k;
}

std::string CycleOrientationClass::Label() const {
  std::string out = "C" + std::to_string(length) + "_{";
  if (runs.size() == 1) {
    out += std::to_string(length) + ",0";
  } else {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(runs[i]);
    }
  }
  return out + "}";
}

CycleOrientationClass ClassifyWord(int k, unsigned word) {
  if (k < 3 || k > 30) ThrowInvalid("cycle length out of range");
  const unsigned mask = (1u << k) - 1;
  word &= mask;
  auto bit = [&](unsigned w, int i) { return (w >> i) & 1u; };
  unsigned best = mask + 1;
  for (int r = 0; r < k; ++r) {
    unsigned rotated = 0;
    unsigned reflected = 0;
    for (int i = 0; i < k; ++i) {
      unsigned b = bit(word, (i + r) % k);
      rotated |= b << i;
      // Reflection i -> -i maps edge i to edge k-1-i and flips its direction.
      reflected |= (1u - b) << (k - 1 - i);
    }
    best = std::min({best, rotated, reflected});
  }

  CycleOrientationClass out;
  out.length = k;
  out.canonical_word = best;
  int start = -1;
  for (int i = 0; i < k; ++i) {
    if (bit(best, i) != bit(best, (i + k - 1) % k)) {
      start = i;
      break;
    }
  }
  if (start == -1) {
    out.runs = {k};
  } else {
    int len = 0;
    for (int j = 0; j < k; ++j) {
      int i = (start + j) % k;
      if (j > 0 && bit(best, i) != bit(best, (i + k - 1) % k)) {
        out.runs.push_back(len);
        len = 0;
      }
      ++len;
    }
    out.runs.push_back(len);
    auto longest = std::max_element(out.runs.begin(), out.runs.end());
    std::rotate(out.runs.begin(), longest, out.runs.end());
  }
  out.unbalanced = (k == 4 || k == 5) && out.runs.size() == 2;
  return out;
}

CycleOrientationClass ClassifyCycleOrientation(const OrientedGraph& g,
                                               const UndirectedCycle& c) {
  ValidateCycle(g, c);
  const int k = c.length();
  unsigned word = 0;
  for (int i = 0; i < k; ++i) {
    if (g.has_arc(c.vertices[i], c.vertices[(i + 1) % k])) word |= 1u << i;
  }
  return ClassifyWord(k, word);
}

namespace {

// Simple paths from `start` over vertices greater than `start`, closing back
// at `start`. `directed` restricts steps to arcs.
class CycleSearch {
 public:
  CycleSearch(const OrientedGraph& g, int min_length, int max_length,
              bool directed, std::size_t limit)
      : g_(g),
        min_length_(min_length),
        max_length_(max_length),
        directed_(directed),
        limit_(limit),
        on_path_(g.num_vertices(), false) {}

  std::vector<UndirectedCycle> Run() {
    for (VertexId s = 0; s < g_.num_vertices() && out_.size() < limit_; ++s) {
      start_ = s;
      path_ = {s};
      on_path_[s] = true;
      Extend();
      on_path_[s] = false;
    }
    return std::move(out_);
  }

 private:
  bool Step(VertexId a, VertexId b) const {
    return directed_ ? g_.has_arc(a, b) : g_.adjacent(a, b);
  }

  void Extend() {
    if (out_.size() >= limit_) return;
    VertexId last = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= min_length_ && Step(last, start_) &&
        (directed_ || path_[1] < last)) {
      out_.push_back({path_});
    }
    if (len >= max_length_) return;
    for (VertexId w : g_.neighbors(last)) {
      if (w <= start_ || on_path_[w] || !Step(last, w)) continue;
      on_path_[w] = true;
      path_.push_back(w);
      Extend();
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const OrientedGraph& g_;
  int min_length_;
  int max_length_;
  bool directed_;
  std::size_t limit_;
  VertexId start_ = 0;
  std::vector<VertexId> path_;
  std::vector<bool> on_path_;
  std::vector<UndirectedCycle> out_;
};

}  // namespace

std::vector<UndirectedCycle> CyclesOfLength(const OrientedGraph& g, int k) {
  auto all = CycleSearch(g, k, k, false, static_cast<std::size_t>(-1)).Run();
  return all;
}

std::vector<ClassifiedCycle> FindUnbalancedSmallCycles(const OrientedGraph& g) {
  std::vector<ClassifiedCycle> out;
  for (int k : {4, 5}) {
    for (auto& c : CyclesOfLength(g, k)) {
      CycleOrientationClass cls = ClassifyCycleOrientation(g, c);
      if (cls.unbalanced) out.push_back({std::move(c), cls});
    }
  }
  return out;
}

int OrientationOrbitCount(int k) {
  if (k < 3 || k > 20) ThrowInvalid("orbit count supports 3 <= k <= 20");
  std::set<unsigned> classes;
  for (unsigned w = 0; w < (1u << k); ++w) {
    classes.insert(ClassifyWord(k, w).canonical_word);
  }
  return static_cast<int>(classes.size());
}

std::optional<UndirectedCycle> FindDirectedCycle(const OrientedGraph& g) {
  const int n = g.num_vertices();
  std::optional<UndirectedCycle> best;
  for (VertexId s = 0; s < n; ++s) {
    std::vector<VertexId> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue{s};
    seen[s] = true;
    VertexId closing = -1;
    while (!queue.empty() && closing == -1) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : g.children(u)) {
        if (w == s) {
          closing = u;
          break;
        }
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing == -1) continue;
    std::vector<VertexId> cycle;
    for (VertexId v = closing; v != -1; v = parent[v]) cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());
    if (!best || cycle.size() < best->vertices.size()) {
      best = UndirectedCycle{std::move(cycle)};
    }
  }
  return best;
}

std::vector<UndirectedCycle> DirectedCycles(const OrientedGraph& g,
                                            int max_length,
                                            std::size_t limit) {
  return CycleSearch(g, 3, max_length, true, limit).Run();
}

std::vector<UndirectedCycle> UndirectedCycles(const OrientedGraph& g,
                                              int max_length,
                                              std::size_t limit) {
  return CycleSearch(g, 3, max_length, false, limit).Run();
}

std::vector<std::vector<VertexId>> ShortestPaths(const OrientedGraph& g,
                                                 VertexId x, VertexId y,
                                                 std::size_t limit) {
  std::vector<int> to_y = Distances(g, y);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path{x};
  auto walk = [&](auto&& self, VertexId u) -> void {
    if (out.size() >= limit) return;
    if (u == y) {
      out.push_back(path);
      return;
    }
    for (VertexId w : g.neighbors(u)) {
      if (to_y[w] != to_y[u] - 1) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  walk(walk, x);
  return out;
}

}  // namespace pursuit
