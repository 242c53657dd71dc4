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

#include "pursuit/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pursuit {

void ThrowInvalid(const std::string& what) {
  throw Error(Error::Kind::kInvalidArgument, what);
}
void ThrowPrecondition(const std::string& what) {
  throw Error(Error::Kind::kPrecondition, what);
}
void ThrowInternal(const std::string& what) {
  throw Error(Error::Kind::kInternal, what);
}

OrientedGraph OrientedGraph::Create(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  for (const auto& [u, v] : edges) {
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  if (vertices.empty()) ThrowInvalid("graph has no vertices");
  for (const auto& name : vertices) {
    if (name.empty()) ThrowInvalid("empty vertex name");
  }
  auto lookup = [&](const std::string& name) {
    return static_cast<VertexId>(
        std::lower_bound(vertices.begin(), vertices.end(), name) -
        vertices.begin());
  };
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& [u, v] : edges) arcs.emplace_back(lookup(u), lookup(v));
  return Build(std::move(vertices), arcs);
}

OrientedGraph OrientedGraph::FromArcs(int n, std::span<const Arc> arcs,
                                      std::vector<std::string> names) {
  if (n <= 0) ThrowInvalid("graph has no vertices");
  if (names.empty()) {
    const int width = static_cast<int>(std::to_string(n - 1).size());
    for (int i = 0; i < n; ++i) {
      std::string s = std::to_string(i);
      names.push_back(std::string(width - s.size(), '0') + s);
    }
  }
  if (static_cast<int>(names.size()) != n) {
    ThrowInvalid("name count does not match vertex count");
  }
  if (!std::is_sorted(names.begin(), names.end()) ||
      std::adjacent_find(names.begin(), names.end()) != names.end()) {
    ThrowInvalid("vertex names must be sorted and unique");
  }
  for (const auto& [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      ThrowInvalid("arc endpoint out of range");
    }
  }
  return Build(std::move(names), arcs);
}

OrientedGraph OrientedGraph::Build(std::vector<std::string> names,
                                   std::span<const Arc> arcs) {
  OrientedGraph g;
  const std::size_t n = names.size();
  g.names_ = std::move(names);
  g.orientation_.assign(n * n, 0);
  g.neighbors_.assign(n, {});
  for (const auto& [u, v] : arcs) {
    if (u == v) ThrowInvalid("self-loop at " + g.names_[u]);
    if (g.orientation(u, v) > 0) {
      ThrowInvalid("duplicate arc " + g.names_[u] + " -> " + g.names_[v]);
    }
    if (g.orientation(u, v) < 0) {
      ThrowInvalid("anti-parallel arcs between " + g.names_[u] + " and " +
                   g.names_[v]);
    }
    g.orientation_[u * n + v] = 1;
    g.orientation_[v * n + u] = -1;
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    ++g.num_edges_;
  }
  g.moves_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto& nb = g.neighbors_[u];
    std::sort(nb.begin(), nb.end());
    auto& mv = g.moves_[u];
    mv = nb;
    mv.insert(std::lower_bound(mv.begin(), mv.end(), static_cast<int>(u)),
              static_cast<int>(u));
  }
  std::vector<int> dist = Distances(g, 0);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    ThrowInvalid("undirected view of the graph is not connected");
  }
  return g;
}

VertexId OrientedGraph::index(std::string_view name) const {
  auto found = find(name);
  if (!found) ThrowInvalid("unknown vertex '" + std::string(name) + "'");
  return *found;
}

std::optional<VertexId> OrientedGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

std::vector<VertexId> OrientedGraph::parents(VertexId u) const {
  std::vector<VertexId> out;
  for (VertexId w : neighbors_[u]) {
    if (has_arc(w, u)) out.push_back(w);
  }
  return out;
}

std::vector<VertexId> OrientedGraph::children(VertexId u) const {
  std::vector<VertexId> out;
  for (VertexId w : neighbors_[u]) {
    if (has_arc(u, w)) out.push_back(w);
  }
  return out;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors_[u]) {
      if (has_arc(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool OrientedGraph::operator==(const OrientedGraph& other) const {
  return names_ == other.names_ && orientation_ == other.orientation_;
}

std::vector<int> Distances(const OrientedGraph& g, VertexId source,
                           const std::vector<bool>* removed) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  if (removed && (*removed)[source]) return dist;
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      if (removed && (*removed)[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<int> DistancesWithin(const OrientedGraph& g, VertexId source,
                                 const std::vector<bool>& allowed) {
  std::vector<bool> removed(allowed.size());
  for (std::size_t i = 0; i < allowed.size(); ++i) removed[i] = !allowed[i];
  return Distances(g, source, &removed);
}

std::optional<int> Girth(const OrientedGraph& g) {
  // BFS from every vertex; a non-tree edge (u, w) closes a cycle of length
  // at most dist[u] + dist[w] + 1, and the minimum over all roots is exact.
  int best = 0;
  const int n = g.num_vertices();
  for (VertexId s = 0; s < n; ++s) {
    std::vector<int> dist(n, kUnreachable);
    std::vector<VertexId> parent(n, -1);
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  return best;
}

std::vector<VertexId> Ball(const OrientedGraph& g, VertexId u, int r) {
  if (u < 0 || u >= g.num_vertices()) ThrowInvalid("unknown vertex index");
  if (r < 0) ThrowInvalid("negative radius");
  std::vector<int> dist = Distances(g, u);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] != kUnreachable && dist[v] <= r) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<bool> Reach(const OrientedGraph& g, bool forward) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      bool follows = forward ? g.has_arc(u, w) : g.has_arc(w, u);
      if (follows && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool IsStronglyConnected(const OrientedGraph& g) {
  auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  return all(Reach(g, true)) && all(Reach(g, false));
}

bool IsTree(const OrientedGraph& g) {
  return g.num_edges() == g.num_vertices() - 1;
}

bool IsConnectedUndirected(int n, std::span<const std::pair<int, int>> edges) {
  if (n <= 0) return false;
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      root[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::string ArcString(const OrientedGraph& g, VertexId u, VertexId v) {
  return g.name(u) + " -> " + g.name(v);
}

}  // namespace pursuit
