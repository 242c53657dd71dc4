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

#include "pursuit/block_cut_tree.h"

#include <algorithm>
#include <deque>
#include <map>

namespace pursuit {

namespace {

// Hopcroft-Tarjan with an explicit edge stack, iterative to keep the call
// depth independent of the graph size.
class BiconnectedSearch {
 public:
  explicit BiconnectedSearch(const OrientedGraph& g)
      : g_(g),
        n_(g.num_vertices()),
        discovery_(n_, -1),
        low_(n_, 0),
        is_cut_(n_, false) {}

  BiconnectedDecomposition Run() {
    if (n_ == 1) {
      BiconnectedDecomposition out;
      out.components.push_back({0});
      out.is_cut.assign(1, false);
      return out;
    }
    Visit(0);
    BiconnectedDecomposition out;
    for (auto& c : components_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::sort(components_.begin(), components_.end());
    out.components = std::move(components_);
    for (VertexId v = 0; v < n_; ++v) {
      if (is_cut_[v]) out.cut_vertices.push_back(v);
    }
    out.is_cut = is_cut_;
    return out;
  }

 private:
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
    int children;
  };

  void Visit(VertexId root) {
    std::vector<Frame> stack;
    discovery_[root] = low_[root] = timer_++;
    stack.push_back({root, -1, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g_.neighbors(f.v);
      if (f.next < nb.size()) {
        VertexId w = nb[f.next++];
        if (w == f.parent) continue;
        if (discovery_[w] == -1) {
          edges_.emplace_back(f.v, w);
          discovery_[w] = low_[w] = timer_++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (discovery_[w] < discovery_[f.v]) {
          edges_.emplace_back(f.v, w);
          low_[f.v] = std::min(low_[f.v], discovery_[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut_[done.v] = true;
        break;
      }
      Frame& up = stack.back();
      low_[up.v] = std::min(low_[up.v], low_[done.v]);
      if (low_[done.v] >= discovery_[up.v]) {
        if (up.parent != -1) is_cut_[up.v] = true;
        std::vector<VertexId> component;
        while (true) {
          auto [a, b] = edges_.back();
          edges_.pop_back();
          component.push_back(a);
          component.push_back(b);
          if (a == up.v && b == done.v) break;
        }
        components_.push_back(std::move(component));
      }
    }
  }

  const OrientedGraph& g_;
  int n_;
  int timer_ = 0;
  std::vector<int> discovery_;
  std::vector<int> low_;
  std::vector<bool> is_cut_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> components_;
};

}  // namespace

BiconnectedDecomposition BiconnectedComponents(const OrientedGraph& g) {
  return BiconnectedSearch(g).Run();
}

std::set<std::pair<std::vector<VertexId>, VertexId>>
BlockCutTree::CanonicalLinks() const {
  std::set<std::pair<std::vector<VertexId>, VertexId>> out;
  for (const auto& [b, c] : links) out.emplace(blocks[b], c);
  return out;
}

std::set<std::vector<VertexId>> BlockCutTree::CanonicalBlocks() const {
  return {blocks.begin(), blocks.end()};
}

BlockCutTree StandardBlockCutTree(const OrientedGraph& g) {
  BiconnectedDecomposition dec = BiconnectedComponents(g);
  BlockCutTree tree;
  tree.blocks = dec.components;
  tree.cut_vertices = dec.cut_vertices;
  for (int b = 0; b < static_cast<int>(tree.blocks.size()); ++b) {
    for (VertexId v : tree.blocks[b]) {
      if (dec.is_cut[v]) tree.links.emplace_back(b, v);
    }
  }
  return tree;
}

ThinnedBlockCutTree ThinnedBlockCutTree::Build(const OrientedGraph& g) {
  const int n = g.num_vertices();
  BiconnectedDecomposition dec = BiconnectedComponents(g);
  ThinnedBlockCutTree tree;
  tree.vertex_node_.assign(n, -1);
  tree.hosts_.assign(n, {});

  auto add_node = [&](Node node) {
    tree.nodes_.push_back(std::move(node));
    tree.adjacency_.emplace_back();
    return static_cast<int>(tree.nodes_.size()) - 1;
  };
  auto vertex_node = [&](VertexId v) {
    if (tree.vertex_node_[v] == -1) {
      tree.vertex_node_[v] = add_node({NodeKind::kVertex, {}, v});
      tree.hosts_[v].push_back(tree.vertex_node_[v]);
    }
    return tree.vertex_node_[v];
  };
  auto link = [&](int a, int b) {
    tree.adjacency_[a].push_back(b);
    tree.adjacency_[b].push_back(a);
  };

  for (VertexId c : dec.cut_vertices) vertex_node(c);
  for (const auto& block : dec.components) {
    if (block.size() > 2) {
      int id = add_node({NodeKind::kBlock, block, -1});
      for (VertexId v : block) {
        tree.hosts_[v].push_back(id);
        if (dec.is_cut[v]) link(id, tree.vertex_node_[v]);
      }
      continue;
    }
    if (block.size() == 1) {
      vertex_node(block[0]);
      continue;
    }
    // Both endpoints of a bridge end up as vertex nodes: cut vertices already
    // have one, the others are leaves of the block-cut tree.
    link(vertex_node(block[0]), vertex_node(block[1]));
  }
  for (auto& adj : tree.adjacency_) std::sort(adj.begin(), adj.end());
  return tree;
}

std::vector<std::pair<int, int>> ThinnedBlockCutTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

int ThinnedBlockCutTree::home(VertexId v) const {
  if (vertex_node_[v] != -1) return vertex_node_[v];
  return hosts_[v].front();
}

int ThinnedBlockCutTree::block_count() const {
  return static_cast<int>(std::count_if(
      nodes_.begin(), nodes_.end(),
      [](const Node& node) { return node.kind == NodeKind::kBlock; }));
}

std::vector<int> ThinnedBlockCutTree::RootedParents(int root) const {
  std::vector<int> parent(size(), -2);
  std::deque<int> queue{root};
  parent[root] = -1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b : adjacency_[a]) {
      if (parent[b] != -2) continue;
      parent[b] = a;
      queue.push_back(b);
    }
  }
  return parent;
}

BlockCutTree ThinnedBlockCutTree::Expand(const OrientedGraph& g) const {
  BiconnectedDecomposition dec = BiconnectedComponents(g);
  BlockCutTree out;
  out.cut_vertices = dec.cut_vertices;
  auto add_block = [&](std::vector<VertexId> block) {
    std::sort(block.begin(), block.end());
    out.blocks.push_back(block);
    int id = static_cast<int>(out.blocks.size()) - 1;
    for (VertexId v : block) {
      if (dec.is_cut[v]) out.links.emplace_back(id, v);
    }
  };
  for (int a = 0; a < size(); ++a) {
    const Node& node = nodes_[a];
    if (node.kind == NodeKind::kBlock) {
      add_block(node.block);
      continue;
    }
    if (adjacency_[a].empty()) add_block({node.vertex});
    for (int b : adjacency_[a]) {
      if (b > a && nodes_[b].kind == NodeKind::kVertex) {
        add_block({node.vertex, nodes_[b].vertex});
      }
    }
  }
  return out;
}

std::vector<VertexId> XYCutVertices(const OrientedGraph& g, VertexId x,
                                    VertexId y) {
  if (x == y) ThrowInvalid("x and y must differ");
  BiconnectedDecomposition dec = BiconnectedComponents(g);
  std::vector<int> from_x = Distances(g, x);
  std::vector<VertexId> out;
  std::vector<bool> removed(g.num_vertices(), false);
  for (VertexId c : dec.cut_vertices) {
    if (c == x || c == y) continue;
    removed[c] = true;
    if (Distances(g, x, &removed)[y] == kUnreachable) out.push_back(c);
    removed[c] = false;
  }
  std::stable_sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
    return from_x[a] < from_x[b];
  });
  return out;
}

}  // namespace pursuit
