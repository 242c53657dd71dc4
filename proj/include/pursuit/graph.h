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

#ifndef PURSUIT_GRAPH_H_
#define PURSUIT_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pursuit {

// Dense vertex index. Indices follow the sorted order of vertex names, so
// every iteration over vertices is deterministic.
using VertexId = int;

using Arc = std::pair<VertexId, VertexId>;

class Error : public std::runtime_error {
 public:
  enum class Kind {
    kInvalidArgument,
    kPrecondition,
    kInternal,
  };

  Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] void ThrowInvalid(const std::string& what);
[[noreturn]] void ThrowPrecondition(const std::string& what);
[[noreturn]] void ThrowInternal(const std::string& what);

// A connected oriented graph. An arc u -> v means that u dominates v; the
// players move along the undirected view.
class OrientedGraph {
 public:
  // Validates names (non-empty, unique), rejects loops, duplicate and
  // anti-parallel arcs, and requires the undirected view to be connected.
  static OrientedGraph Create(
      std::vector<std::string> vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);

  // Builds a graph over vertices "0".."n-1" renamed with `names` if given.
  // Names must already be sorted when supplied, so that index i keeps name i.
  static OrientedGraph FromArcs(int n, std::span<const Arc> arcs,
                                std::vector<std::string> names = {});

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return num_edges_; }

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  // Throws kInvalidArgument for unknown names.
  VertexId index(std::string_view name) const;
  std::optional<VertexId> find(std::string_view name) const;

  // +1 if u -> v, -1 if v -> u, 0 otherwise.
  int orientation(VertexId u, VertexId v) const {
    return orientation_[static_cast<std::size_t>(u) * names_.size() + v];
  }
  bool has_arc(VertexId u, VertexId v) const { return orientation(u, v) > 0; }
  bool adjacent(VertexId u, VertexId v) const {
    return orientation(u, v) != 0;
  }

  // Sorted undirected neighbours, excluding u.
  const std::vector<VertexId>& neighbors(VertexId u) const {
    return neighbors_[u];
  }
  // Sorted closed neighbourhood: the legal moves from u.
  const std::vector<VertexId>& moves(VertexId u) const { return moves_[u]; }

  std::vector<VertexId> parents(VertexId u) const;
  std::vector<VertexId> children(VertexId u) const;

  // All arcs, sorted.
  std::vector<Arc> arcs() const;

  bool operator==(const OrientedGraph& other) const;

 private:
  OrientedGraph() = default;
  static OrientedGraph Build(std::vector<std::string> names,
                             std::span<const Arc> arcs);

  std::vector<std::string> names_;
  std::vector<std::int8_t> orientation_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::vector<VertexId>> moves_;
  int num_edges_ = 0;
};

// Unit-free infinity marker for distances.
inline constexpr int kUnreachable = -1;

// Undirected BFS distances from `source` (kUnreachable when blocked).
// Vertices flagged in `removed` are skipped entirely.
std::vector<int> Distances(const OrientedGraph& g, VertexId source,
                           const std::vector<bool>* removed = nullptr);

// Length of a shortest undirected cycle; nullopt for trees.
std::optional<int> Girth(const OrientedGraph& g);

// Vertices within undirected distance r of u, sorted.
std::vector<VertexId> Ball(const OrientedGraph& g, VertexId u, int r);

bool IsStronglyConnected(const OrientedGraph& g);
bool IsTree(const OrientedGraph& g);
bool IsConnectedUndirected(int n, std::span<const std::pair<int, int>> edges);

// Induced subgraph distances: BFS restricted to `allowed` vertices.
std::vector<int> DistancesWithin(const OrientedGraph& g, VertexId source,
                                 const std::vector<bool>& allowed);

std::string ArcString(const OrientedGraph& g, VertexId u, VertexId v);

}  // namespace pursuit

#endif  // PURSUIT_GRAPH_H_
