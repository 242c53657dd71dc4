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

#include "pursuit/planar.h"

#include <algorithm>
#include <deque>
#include <set>

#include "pursuit/block_cut_tree.h"
#include "pursuit/solver.h"
#include "pursuit/subdivision.h"

namespace pursuit {
namespace {

bool Crossing(const std::vector<int>& pos, std::pair<VertexId, VertexId> c,
              std::pair<VertexId, VertexId> d) {
  int a = pos[c.first], b = pos[c.second];
  int x = pos[d.first], y = pos[d.second];
  if (a > b) std::swap(a, b);
  if (x > y) std::swap(x, y);
  return (a < x && x < b && b < y) || (x < a && a < y && y < b);
}

// Hamiltonian cycles of the block in search order; the first one whose
// chords do not cross wins.
class OuterCycleSearch {
 public:
  OuterCycleSearch(const OrientedGraph& g, const std::vector<VertexId>& block)
      : g_(g), block_(block), in_block_(g.num_vertices(), false),
        on_path_(g.num_vertices(), false) {
    for (VertexId v : block) in_block_[v] = true;
    for (VertexId v : block) {
      for (VertexId w : g.neighbors(v)) {
        if (in_block_[w] && v < w) edges_.push_back({v, w});
      }
    }
  }

  std::optional<OuterplanarEmbedding::Component> Run() {
    const int k = static_cast<int>(block_.size());
    if (static_cast<int>(edges_.size()) > 2 * k - 3) return std::nullopt;
    path_ = {block_.front()};
    on_path_[block_.front()] = true;
    Extend();
    return found_;
  }

 private:
  void Extend() {
    if (found_) return;
    VertexId last = path_.back();
    if (path_.size() == block_.size()) {
      if (g_.adjacent(last, path_.front()) && path_[1] < last) Accept();
      return;
    }
    for (VertexId w : g_.neighbors(last)) {
      if (!in_block_[w] || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      Extend();
      path_.pop_back();
      on_path_[w] = false;
      if (found_) return;
    }
  }

  void Accept() {
    const int k = static_cast<int>(path_.size());
    std::vector<int> pos(g_.num_vertices(), -1);
    for (int i = 0; i < k; ++i) pos[path_[i]] = i;
    std::vector<std::pair<VertexId, VertexId>> chords;
    for (auto [a, b] : edges_) {
      int d = std::abs(pos[a] - pos[b]);
      if (d != 1 && d != k - 1) chords.push_back({a, b});
    }
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        if (Crossing(pos, chords[i], chords[j])) return;
      }
    }
    found_ = OuterplanarEmbedding::Component{path_, std::move(chords)};
  }

  const OrientedGraph& g_;
  const std::vector<VertexId>& block_;
  std::vector<bool> in_block_;
  std::vector<bool> on_path_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexId> path_;
  std::optional<OuterplanarEmbedding::Component> found_;
};

std::string BranchList(const OrientedGraph& g, const Subdivision& s) {
  std::string out;
  for (VertexId v : s.branch) out += " " + g.name(v);
  return out;
}

std::vector<std::vector<VertexId>> NontrivialBlocks(const OrientedGraph& g) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& c : BiconnectedComponents(g).components) {
    if (c.size() > 2) out.push_back(c);
  }
  return out;
}

}  // namespace

OuterplanarResult IsOuterplanar(const OrientedGraph& g) {
  if (g.num_vertices() > kOuterplanarMaxVertices) {
    ThrowInvalid("outerplanarity is limited to " +
                 std::to_string(kOuterplanarMaxVertices) + " vertices");
  }
  OuterplanarResult out;
  OuterplanarEmbedding embedding;
  bool embedded = true;
  for (const auto& block : NontrivialBlocks(g)) {
    auto c = OuterCycleSearch(g, block).Run();
    if (!c) {
      embedded = false;
      break;
    }
    embedding.components.push_back(std::move(*c));
  }

  out.minor_checked = true;
  for (const auto& block : NontrivialBlocks(g)) {
    if (static_cast<int>(block.size()) > kSubdivisionMaxVertices) {
      out.minor_checked = false;
    }
  }
  bool obstructed = false;
  if (out.minor_checked) {
    if (auto k4 = FindK4Subdivision(g)) {
      out.obstruction = "K4:" + BranchList(g, *k4);
      obstructed = true;
    } else if (auto k23 = FindK23Subdivision(g)) {
      out.obstruction = "K2,3:" + BranchList(g, *k23);
      obstructed = true;
    }
    if (obstructed == embedded) {
      ThrowInternal("outerplanarity checks disagree");
    }
  }
  out.outerplanar = embedded;
  if (embedded) out.embedding = std::move(embedding);
  return out;
}

std::vector<std::vector<VertexId>> ComponentFaces(
    const OuterplanarEmbedding::Component& c) {
  std::vector<std::vector<VertexId>> faces;
  std::vector<std::vector<VertexId>> pending{c.outer};
  while (!pending.empty()) {
    std::vector<VertexId> poly = std::move(pending.back());
    pending.pop_back();
    const int k = static_cast<int>(poly.size());
    bool split = false;
    for (auto [a, b] : c.chords) {
      auto ia = std::find(poly.begin(), poly.end(), a) - poly.begin();
      auto ib = std::find(poly.begin(), poly.end(), b) - poly.begin();
      if (ia == k || ib == k) continue;
      auto d = std::abs(ia - ib);
      if (d == 1 || d == k - 1) continue;
      if (ia > ib) std::swap(ia, ib);
      pending.emplace_back(poly.begin() + ia, poly.begin() + ib + 1);
      std::vector<VertexId> other(poly.begin() + ib, poly.end());
      other.insert(other.end(), poly.begin(), poly.begin() + ia + 1);
      pending.push_back(std::move(other));
      split = true;
      break;
    }
    if (!split) faces.push_back(std::move(poly));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

void ValidateEmbedding(const OrientedGraph& g, const OuterplanarEmbedding& e) {
  auto blocks = NontrivialBlocks(g);
  if (blocks.size() != e.components.size()) {
    ThrowInvalid("embedding does not cover every block");
  }
  for (const auto& c : e.components) {
    std::vector<VertexId> sorted = c.outer;
    std::sort(sorted.begin(), sorted.end());
    if (std::find(blocks.begin(), blocks.end(), sorted) == blocks.end()) {
      ThrowInvalid("outer cycle is not a block");
    }
    ValidateCycle(g, UndirectedCycle{c.outer});
    const int k = static_cast<int>(c.outer.size());
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < k; ++i) pos[c.outer[i]] = i;
    int inner = 0;
    for (VertexId v : c.outer) {
      for (VertexId w : g.neighbors(v)) inner += v < w && pos[w] >= 0;
    }
    if (inner != k + static_cast<int>(c.chords.size())) {
      ThrowInvalid("chord list does not match the block's edges");
    }
    for (std::size_t i = 0; i < c.chords.size(); ++i) {
      auto [a, b] = c.chords[i];
      if (pos[a] < 0 || pos[b] < 0 || !g.adjacent(a, b)) {
        ThrowInvalid("chord is not a block edge");
      }
      for (std::size_t j = i + 1; j < c.chords.size(); ++j) {
        if (Crossing(pos, c.chords[i], c.chords[j])) {
          ThrowInvalid("chords cross");
        }
      }
    }
  }
}

FaceSearch WellDirectedFace(const OrientedGraph& g,
                            const OuterplanarEmbedding& e,
                            const std::optional<UndirectedCycle>& start) {
  if (!IsStronglyConnected(g)) {
    ThrowPrecondition("graph is not strongly connected");
  }
  ValidateEmbedding(g, e);
  std::optional<UndirectedCycle> first = start ? start : FindDirectedCycle(g);
  if (!first) ThrowPrecondition("graph has no cycle");
  ValidateCycle(g, *first);
  const int len = first->length();
  for (int i = 0; i < len; ++i) {
    if (!g.has_arc(first->vertices[i], first->vertices[(i + 1) % len])) {
      ThrowInvalid("starting cycle is not directed");
    }
  }
  FaceSearch out;
  std::vector<VertexId> cycle = first->vertices;

  const OuterplanarEmbedding::Component* home = nullptr;
  for (const auto& c : e.components) {
    if (std::find(c.outer.begin(), c.outer.end(), cycle.front()) !=
            c.outer.end() &&
        std::find(c.outer.begin(), c.outer.end(), cycle.back()) !=
            c.outer.end()) {
      home = &c;
    }
  }
  if (!home) ThrowInternal("cycle outside every component");

  auto enclosed_edges = [&](const std::vector<bool>& on) {
    std::vector<Arc> arcs;
    for (auto [u, v] : g.arcs()) {
      if (on[u] && on[v]) arcs.push_back({u, v});
    }
    return arcs;
  };
  const int n = g.num_vertices();
  for (;;) {
    std::vector<bool> on(n, false);
    for (VertexId v : cycle) on[v] = true;
    std::vector<Arc> inside = enclosed_edges(on);
    const int k = static_cast<int>(cycle.size());
    std::set<Arc> own;
    for (int i = 0; i < k; ++i) own.insert({cycle[i], cycle[(i + 1) % k]});
    std::optional<Arc> chord;
    for (Arc a : inside) {
      if (!own.count(a)) {
        chord = a;
        break;
      }
    }
    if (!chord) break;
    // u -> v closes a shorter directed cycle with a shortest way back.
    auto [u, v] = *chord;
    std::vector<VertexId> from(n, -1);
    std::deque<VertexId> queue{v};
    from[v] = v;
    while (!queue.empty() && from[u] == -1) {
      VertexId a = queue.front();
      queue.pop_front();
      for (auto [p, q] : inside) {
        if (p == a && from[q] == -1) {
          from[q] = a;
          queue.push_back(q);
        }
      }
    }
    if (from[u] == -1) ThrowInternal("enclosed subgraph not strongly connected");
    std::vector<VertexId> back;
    for (VertexId w = u; w != v; w = from[w]) back.push_back(w);
    back.push_back(v);
    std::reverse(back.begin(), back.end());  // v ... u
    std::vector<VertexId> next{u};
    next.insert(next.end(), back.begin(), back.end() - 1);
    std::vector<bool> next_on(n, false);
    for (VertexId w : next) next_on[w] = true;
    if (enclosed_edges(next_on).size() >= inside.size()) {
      ThrowInternal("face descent did not shrink");
    }
    cycle = std::move(next);
    ++out.shrink_steps;
  }

  std::vector<VertexId> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  bool is_face = false;
  for (auto face : ComponentFaces(*home)) {
    std::sort(face.begin(), face.end());
    is_face |= face == sorted;
  }
  if (!is_face) ThrowInternal("descent ended on a non-face cycle");
  out.face = UndirectedCycle{cycle};
  return out;
}

EquilibriumReport OuterplanarEquilibria(const GameConfig& cfg) {
  const OrientedGraph& g = cfg.graph;
  if (!IsStronglyConnected(g)) {
    ThrowPrecondition("graph is not strongly connected");
  }
  std::optional<int> girth = Girth(g);
  if (girth && *girth < 4) {
    ThrowPrecondition("girth " + std::to_string(*girth) + " is below 4");
  }
  OuterplanarResult op = IsOuterplanar(g);
  if (!op.outerplanar) {
    ThrowPrecondition("graph is not outerplanar: " + op.obstruction);
  }
  FaceSearch face = WellDirectedFace(g, *op.embedding);
  ValueTable vt = ValueIteration(cfg);
  EquilibriumReport out;
  out.method = "structural";
  out.edge_decisive = IsEdgeDecisive(vt);
  auto fill = [&](EquilibriumWitness& w, std::vector<VertexId> walk,
                  PurePath path) {
    DeviationReport rep = CheckProfileEquilibrium(vt, path);
    w.found = rep.equilibrium;
    w.walk = std::move(walk);
    w.path = std::move(path);
    w.worst_gain = rep.worst_gain;
  };
  std::vector<VertexId> up(face.face.vertices.rbegin(),
                           face.face.vertices.rend());
  fill(out.walking_together, up, WalkingTogetherPath(up));
  fill(out.chase, face.face.vertices, ChasePath(face.face.vertices, 2));
  return out;
}

}  // namespace pursuit
