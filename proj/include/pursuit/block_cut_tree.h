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

#ifndef PURSUIT_BLOCK_CUT_TREE_H_
#define PURSUIT_BLOCK_CUT_TREE_H_

#include <set>
#include <utility>
#include <vector>

#include "pursuit/graph.h"

namespace pursuit {

// Maximal biconnected components of the undirected view. Each component is a
// sorted vertex list; components are sorted lexicographically. A graph with a
// single vertex has one component holding that vertex.
struct BiconnectedDecomposition {
  std::vector<std::vector<VertexId>> components;
  std::vector<VertexId> cut_vertices;  // sorted
  std::vector<bool> is_cut;            // indexed by vertex
};

BiconnectedDecomposition BiconnectedComponents(const OrientedGraph& g);

// Standard block-cut tree: one node per block and one per cut vertex, with an
// edge between each cut vertex and the blocks containing it.
struct BlockCutTree {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<VertexId> cut_vertices;
  // (block index, cut vertex) memberships.
  std::vector<std::pair<int, VertexId>> links;

  int node_count() const {
    return static_cast<int>(blocks.size() + cut_vertices.size());
  }
  // Order-independent description used to compare trees.
  std::set<std::pair<std::vector<VertexId>, VertexId>> CanonicalLinks() const;
  std::set<std::vector<VertexId>> CanonicalBlocks() const;
};

BlockCutTree StandardBlockCutTree(const OrientedGraph& g);

// Block-cut tree after the size-two reductions: a two-vertex block between
// two cut vertices becomes a direct edge between them, and any other
// two-vertex block becomes a node labelled by its non-cut vertex. Remaining
// block nodes are the nontrivial biconnected components (more than two
// vertices).
class ThinnedBlockCutTree {
 public:
  enum class NodeKind { kBlock, kVertex };

  struct Node {
    NodeKind kind;
    std::vector<VertexId> block;  // sorted; kBlock only
    VertexId vertex = -1;         // kVertex only
  };

  static ThinnedBlockCutTree Build(const OrientedGraph& g);

  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  std::vector<std::pair<int, int>> edges() const;

  // Node labelled by v, if v is a cut vertex or a leaf of the block-cut tree.
  int vertex_node(VertexId v) const { return vertex_node_[v]; }
  // Every node hosting v: its vertex node and/or the blocks containing it.
  const std::vector<int>& hosts(VertexId v) const { return hosts_[v]; }
  // Node to walk towards when looking for v: its vertex node when present,
  // otherwise the unique block containing it.
  int home(VertexId v) const;

  int block_count() const;

  // Parent pointers of the tree rooted at `root` (root's parent is -1).
  std::vector<int> RootedParents(int root) const;

  // Re-inserts the removed two-vertex blocks, recovering the standard tree.
  BlockCutTree Expand(const OrientedGraph& g) const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> vertex_node_;
  std::vector<std::vector<int>> hosts_;
};

// Cut vertices whose removal separates x from y, ordered by distance from x.
// Throws kInvalidArgument when x == y.
std::vector<VertexId> XYCutVertices(const OrientedGraph& g, VertexId x,
                                    VertexId y);

}  // namespace pursuit

#endif  // PURSUIT_BLOCK_CUT_TREE_H_
