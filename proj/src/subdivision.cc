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

#include "pursuit/subdivision.h"

#include <set>
#include <utility>

#include "pursuit/block_cut_tree.h"

namespace pursuit {
namespace {

using Pattern = std::vector<std::pair<int, int>>;

Pattern Complete(int a) {
  Pattern p;
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) p.push_back({i, j});
  }
  return p;
}

Pattern Bipartite(int a, int b) {
  Pattern p;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) p.push_back({i, a + j});
  }
  return p;
}

// Routes every pattern edge between fixed branch vertices, inside one block.
class Router {
 public:
  Router(const OrientedGraph& g, const std::vector<bool>& in_block)
      : g_(g), in_block_(in_block), used_(g.num_vertices(), false) {}

  bool Route(const std::vector<VertexId>& branch, const Pattern& pattern,
             std::vector<std::vector<VertexId>>* paths) {
    branch_ = branch;
    pattern_ = &pattern;
    std::fill(used_.begin(), used_.end(), false);
    for (VertexId b : branch) used_[b] = true;
    paths_.clear();
    if (!Next(0)) return false;
    *paths = paths_;
    return true;
  }

 private:
  bool Next(std::size_t e) {
    if (e == pattern_->size()) return true;
    auto [s, t] = (*pattern_)[e];
    current_ = {branch_[s]};
    return Walk(branch_[s], branch_[t], e);
  }

  bool Walk(VertexId u, VertexId target, std::size_t e) {
    for (VertexId w : g_.neighbors(u)) {
      if (!in_block_[w]) continue;
      if (w == target) {
        current_.push_back(w);
        paths_.push_back(current_);
        std::vector<VertexId> saved = current_;
        if (Next(e + 1)) return true;
        current_ = std::move(saved);
        paths_.pop_back();
        current_.pop_back();
        continue;
      }
      if (used_[w]) continue;
      used_[w] = true;
      current_.push_back(w);
      if (Walk(w, target, e)) return true;
      current_.pop_back();
      used_[w] = false;
    }
    return false;
  }

  const OrientedGraph& g_;
  const std::vector<bool>& in_block_;
  std::vector<bool> used_;
  std::vector<VertexId> branch_;
  const Pattern* pattern_ = nullptr;
  std::vector<VertexId> current_;
  std::vector<std::vector<VertexId>> paths_;
};

// Calls visit(chosen) for every k-subset of `pool`, in lexicographic order,
// until it returns true.
template <typename Visit>
bool Subsets(const std::vector<VertexId>& pool, int k,
             std::vector<VertexId>& chosen, std::size_t from, Visit&& visit) {
  if (static_cast<int>(chosen.size()) == k) return visit(chosen);
  for (std::size_t i = from; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    if (Subsets(pool, k, chosen, i + 1, visit)) return true;
    chosen.pop_back();
  }
  return false;
}

// Searches every block for a subdivision of K_a (b == 0) or K_{a,b}.
std::optional<Subdivision> Search(const OrientedGraph& g, int a, int b) {
  const bool bipartite = b > 0;
  const int h = a + b;
  const Pattern pattern = bipartite ? Bipartite(a, b) : Complete(a);
  for (const auto& block : BiconnectedComponents(g).components) {
    if (static_cast<int>(block.size()) < h) continue;
    if (static_cast<int>(block.size()) > kSubdivisionMaxVertices) {
      ThrowInvalid("subdivision search is limited to blocks of " +
                   std::to_string(kSubdivisionMaxVertices) + " vertices");
    }
    std::vector<bool> in_block(g.num_vertices(), false);
    for (VertexId v : block) in_block[v] = true;
    auto degree = [&](VertexId v) {
      int d = 0;
      for (VertexId w : g.neighbors(v)) d += in_block[w];
      return d;
    };
    // Branch vertices of degree-3 pattern vertices need block degree 3.
    std::vector<VertexId> strong, any;
    for (VertexId v : block) {
      any.push_back(v);
      if (degree(v) >= 3) strong.push_back(v);
    }
    Router router(g, in_block);
    Subdivision found;
    auto attempt = [&](const std::vector<VertexId>& branch) {
      if (!router.Route(branch, pattern, &found.paths)) return false;
      found.branch = branch;
      return true;
    };
    std::vector<VertexId> first;
    bool ok;
    if (!bipartite) {
      ok = Subsets(strong, a, first, 0, attempt);
    } else if (a == 2 && b == 3) {
      ok = Subsets(strong, 2, first, 0, [&](const std::vector<VertexId>& side) {
        std::vector<VertexId> rest;
        for (VertexId v : any) {
          if (v != side[0] && v != side[1]) rest.push_back(v);
        }
        std::vector<VertexId> second;
        return Subsets(rest, 3, second, 0, [&](const std::vector<VertexId>& t) {
          std::vector<VertexId> branch = side;
          branch.insert(branch.end(), t.begin(), t.end());
          return attempt(branch);
        });
      });
    } else {
      // K_{3,3}: split each 6-set of strong vertices, smallest on side one.
      ok = Subsets(strong, 6, first, 0, [&](const std::vector<VertexId>& six) {
        for (int mask = 0; mask < 64; ++mask) {
          if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;
          std::vector<VertexId> branch;
          for (int i = 0; i < 6; ++i) {
            if (mask >> i & 1) branch.push_back(six[i]);
          }
          for (int i = 0; i < 6; ++i) {
            if (!(mask >> i & 1)) branch.push_back(six[i]);
          }
          if (attempt(branch)) return true;
        }
        return false;
      });
    }
    if (ok) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Subdivision> FindK33Subdivision(const OrientedGraph& g) {
  return Search(g, 3, 3);
}

std::optional<Subdivision> FindK4Subdivision(const OrientedGraph& g) {
  return Search(g, 4, 0);
}

std::optional<Subdivision> FindK23Subdivision(const OrientedGraph& g) {
  return Search(g, 2, 3);
}

bool IsSubdivisionOf(const OrientedGraph& g, const Subdivision& s, int a,
                     int b) {
  const Pattern pattern = b > 0 ? Bipartite(a, b) : Complete(a);
  const int h = a + b;
  if (static_cast<int>(s.branch.size()) != h ||
      s.paths.size() != pattern.size()) {
    return false;
  }
  std::set<VertexId> seen(s.branch.begin(), s.branch.end());
  if (static_cast<int>(seen.size()) != h) return false;
  for (std::size_t e = 0; e < pattern.size(); ++e) {
    const auto& p = s.paths[e];
    if (p.size() < 2 || p.front() != s.branch[pattern[e].first] ||
        p.back() != s.branch[pattern[e].second]) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.num_vertices() || !g.adjacent(p[i], p[i + 1])) {
        return false;
      }
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (!seen.insert(p[i]).second) return false;
    }
  }
  return true;
}

}  // namespace pursuit
