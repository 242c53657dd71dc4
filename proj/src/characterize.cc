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

#include "pursuit/characterize.h"

#include <algorithm>
#include <deque>
#include <set>

#include "pursuit/block_cut_tree.h"

namespace pursuit {

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kXWins:
      return "XWins";
    case Verdict::kYWins:
      return "YWins";
    case Verdict::kDraw:
      return "Draw";
  }
  return "?";
}

namespace {

void CheckVertex(const OrientedGraph& g, VertexId v) {
  if (v < 0 || v >= g.num_vertices()) ThrowInvalid("unknown vertex");
}

std::string VertexList(const OrientedGraph& g,
                       const std::vector<VertexId>& vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += " ";
    out += g.name(v);
  }
  return out;
}

// Shortest path from a to b, taking the smallest index at every step.
std::vector<VertexId> GreedyPath(const OrientedGraph& g, VertexId a,
                                 VertexId b) {
  std::vector<int> to_b = Distances(g, b);
  if (to_b[a] == kUnreachable) ThrowPrecondition("vertices are disconnected");
  std::vector<VertexId> path{a};
  while (path.back() != b) {
    for (VertexId w : g.neighbors(path.back())) {
      if (to_b[w] == to_b[path.back()] - 1) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

// Indices of the middle of a loser -> winner path of length d >= 2: the
// vertex m (m1) the winner aims for and its neighbour towards the loser.
struct Middle {
  int m;
  int l;
};

Middle MiddleOf(int d) {
  if (d % 2 == 0) return {d / 2, d / 2 - 1};
  return {(d - 1) / 2, (d - 3) / 2};
}

void Finish(WinnerVerdict& out, bool winner_is_y) {
  out.verdict = winner_is_y ? Verdict::kYWins : Verdict::kXWins;
  if (!winner_is_y) std::reverse(out.path.begin(), out.path.end());
}

// Branch of the tree hanging from `top` through its neighbour `first`; false
// as soon as an edge points back towards `top`.
bool DownwardBranch(const OrientedGraph& g, VertexId top, VertexId first,
                    std::vector<VertexId>* branch) {
  if (!g.has_arc(top, first)) return false;
  std::vector<std::pair<VertexId, VertexId>> stack{{first, top}};
  while (!stack.empty()) {
    auto [u, from] = stack.back();
    stack.pop_back();
    branch->push_back(u);
    for (VertexId w : g.neighbors(u)) {
      if (w == from) continue;
      if (!g.has_arc(u, w)) return false;
      stack.push_back({w, u});
    }
  }
  std::sort(branch->begin(), branch->end());
  return true;
}

// Winner at path.back() beats the loser at path.front() in a tree.
bool TreeWins(const OrientedGraph& g, const std::vector<VertexId>& path,
              WinnerVerdict* out) {
  const int d = static_cast<int>(path.size()) - 1;
  Middle mid = MiddleOf(d);
  VertexId m = path[mid.m];
  VertexId r = path[mid.m + 1];
  VertexId l = path[mid.l];
  if (!g.has_arc(r, m)) return false;
  std::vector<VertexId> branch;
  if (!DownwardBranch(g, m, l, &branch)) return false;
  out->path = path;
  out->middle = d % 2 == 0 ? std::vector<VertexId>{m}
                           : std::vector<VertexId>{m, r};
  out->l = l;
  out->r = r;
  out->subtree = std::move(branch);
  return true;
}

// Distance 0 and 1 verdicts shared by every characterisation.
bool ShortRange(const OrientedGraph& g, VertexId x, VertexId y,
                WinnerVerdict* out) {
  if (x == y) {
    out->path = {x};
    out->reason = "players share a vertex";
    return true;
  }
  if (g.adjacent(x, y)) {
    out->path = {x, y};
    out->verdict = g.has_arc(y, x) ? Verdict::kYWins : Verdict::kXWins;
    out->reason = "adjacent players: the parent wins";
    return true;
  }
  return false;
}

}  // namespace

void RequireTree(const OrientedGraph& g) {
  if (!IsTree(g)) {
    ThrowPrecondition("graph is not a tree: it has a cycle of length " +
                      std::to_string(Girth(g).value_or(0)));
  }
}

void RequireStronglyConnectedGirth6(const OrientedGraph& g) {
  if (!IsStronglyConnected(g)) {
    ThrowPrecondition("graph is not strongly connected");
  }
  std::optional<int> girth = Girth(g);
  if (girth && *girth < 6) {
    ThrowPrecondition("girth " + std::to_string(*girth) + " is below 6");
  }
}

void RequireNoSmallUnbalanced(const OrientedGraph& g, int min_girth) {
  std::optional<int> girth = Girth(g);
  if (girth && *girth < min_girth) {
    auto cycles = CyclesOfLength(g, *girth);
    ThrowPrecondition("girth " + std::to_string(*girth) + " is below " +
                      std::to_string(min_girth) + ": cycle " +
                      VertexList(g, cycles.front().vertices));
  }
  auto bad = FindUnbalancedSmallCycles(g);
  if (!bad.empty()) {
    ThrowPrecondition("unbalanced cycle " + bad.front().orientation.Label() + ": " +
                      VertexList(g, bad.front().cycle.vertices));
  }
}

bool SatisfiesNoSmallUnbalanced(const OrientedGraph& g, int min_girth) {
  std::optional<int> girth = Girth(g);
  if (girth && *girth < min_girth) return false;
  return FindUnbalancedSmallCycles(g).empty();
}

WinnerVerdict TreeWinner(const OrientedGraph& g, VertexId x, VertexId y) {
  RequireTree(g);
  CheckVertex(g, x);
  CheckVertex(g, y);
  WinnerVerdict out;
  if (ShortRange(g, x, y, &out)) return out;
  std::vector<VertexId> path = GreedyPath(g, x, y);
  bool y_wins = TreeWins(g, path, &out);
  WinnerVerdict other;
  std::vector<VertexId> back(path.rbegin(), path.rend());
  bool x_wins = TreeWins(g, back, &other);
  if (y_wins && x_wins) ThrowInternal("both players win on a tree");
  if (x_wins) out = std::move(other);
  if (!y_wins && !x_wins) {
    out.path = path;
    out.reason = "neither middle is guarded by a downward branch";
    return out;
  }
  Finish(out, y_wins);
  out.reason = "winner reaches the middle before the loser's branch ends";
  return out;
}

WinnerVerdict Char6Classify(const OrientedGraph& g, VertexId x, VertexId y,
                            double delta) {
  RequireStronglyConnectedGirth6(g);
  CheckVertex(g, x);
  CheckVertex(g, y);
  if (!(delta > 0.0 && delta < 1.0)) ThrowInvalid("delta must be in (0, 1)");
  WinnerVerdict out;
  if (!ShortRange(g, x, y, &out)) {
    out.path = GreedyPath(g, x, y);
    out.reason = "non-adjacent players";
    return out;
  }
  if (x != y) {
    out.bracket = {-4.0 * (1.0 - delta) / (4.0 - delta), -(1.0 - delta)};
  }
  return out;
}

namespace {

// Winner at path.back() beats the loser at path.front(), under the girth-4
// hypotheses. Requires a path of length at least 2.
bool Char4Wins(const OrientedGraph& g, const ThinnedBlockCutTree& tree,
               const std::vector<VertexId>& path, WinnerVerdict* out) {
  const VertexId loser = path.front();
  const VertexId winner = path.back();
  const int d = static_cast<int>(path.size()) - 1;
  Middle mid = MiddleOf(d);
  const VertexId m = path[mid.m];
  std::vector<VertexId> cuts = XYCutVertices(g, loser, winner);
  if (std::find(cuts.begin(), cuts.end(), m) == cuts.end()) return false;

  std::vector<int> to_winner = Distances(g, winner);
  VertexId r = -1;
  if (g.has_arc(path[mid.m + 1], m)) {
    r = path[mid.m + 1];
  } else {
    for (VertexId w : g.neighbors(m)) {
      if (to_winner[w] == to_winner[m] - 1 && g.has_arc(w, m)) {
        r = w;
        break;
      }
    }
  }
  if (r == -1) return false;

  const int root = tree.vertex_node(m);
  if (root < 0) ThrowInternal("cut vertex without a tree node");
  std::vector<int> parent = tree.RootedParents(root);
  int top = tree.home(loser);
  while (parent[top] != root) top = parent[top];
  std::vector<VertexId> branch;
  for (int q = 0; q < tree.size(); ++q) {
    int a = q;
    while (a != -1 && a != top) a = parent[a];
    if (a != top) continue;
    const auto& node = tree.node(q);
    if (node.kind != ThinnedBlockCutTree::NodeKind::kVertex) return false;
    const auto& up = tree.node(parent[q]);
    if (up.kind != ThinnedBlockCutTree::NodeKind::kVertex ||
        !g.has_arc(up.vertex, node.vertex)) {
      return false;
    }
    branch.push_back(node.vertex);
  }
  std::sort(branch.begin(), branch.end());
  out->path = path;
  out->middle = d % 2 == 0 ? std::vector<VertexId>{m}
                           : std::vector<VertexId>{m, r};
  out->l = tree.node(top).vertex;
  out->r = r;
  out->subtree = std::move(branch);
  return true;
}

Verdict Char4Along(const OrientedGraph& g, const ThinnedBlockCutTree& tree,
                   const std::vector<VertexId>& path, WinnerVerdict* out) {
  bool y_wins = Char4Wins(g, tree, path, out);
  WinnerVerdict other;
  std::vector<VertexId> back(path.rbegin(), path.rend());
  bool x_wins = Char4Wins(g, tree, back, &other);
  if (y_wins && x_wins) ThrowInternal("both players satisfy the win test");
  if (x_wins) *out = std::move(other);
  if (!y_wins && !x_wins) {
    out->path = path;
    out->reason = "no guarded middle cut vertex";
    return Verdict::kDraw;
  }
  Finish(*out, y_wins);
  out->reason = "loser's branch past the middle cut vertex is an out-tree";
  return out->verdict;
}

}  // namespace

WinnerVerdict Char4Winner(const OrientedGraph& g, VertexId x, VertexId y) {
  RequireNoSmallUnbalanced(g);
  CheckVertex(g, x);
  CheckVertex(g, y);
  WinnerVerdict out;
  if (ShortRange(g, x, y, &out)) return out;
  ThinnedBlockCutTree tree = ThinnedBlockCutTree::Build(g);
  Char4Along(g, tree, GreedyPath(g, x, y), &out);
  return out;
}

Verdict Char4WinnerAlongPath(const OrientedGraph& g,
                             const std::vector<VertexId>& path) {
  RequireNoSmallUnbalanced(g);
  if (path.empty()) ThrowInvalid("empty path");
  for (VertexId v : path) CheckVertex(g, v);
  WinnerVerdict out;
  if (ShortRange(g, path.front(), path.back(), &out)) return out.verdict;
  std::vector<int> to_y = Distances(g, path.back());
  if (to_y[path.front()] + 1 != static_cast<int>(path.size())) {
    ThrowInvalid("not a shortest path");
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.adjacent(path[i - 1], path[i])) ThrowInvalid("not a path");
  }
  ThinnedBlockCutTree tree = ThinnedBlockCutTree::Build(g);
  return Char4Along(g, tree, path, &out);
}

StaticVerdict StaticEquilibriumExists(const OrientedGraph& g) {
  RequireNoSmallUnbalanced(g);
  const int n = g.num_vertices();
  StaticVerdict out;
  auto found = [&](int item, GameState s, std::string reason) {
    out.exists = true;
    out.violated = item;
    out.witness = s;
    out.reason = std::move(reason);
    return out;
  };

  BiconnectedDecomposition bcc = BiconnectedComponents(g);
  std::vector<std::vector<VertexId>> blocks;
  for (const auto& c : bcc.components) {
    if (c.size() > 2) blocks.push_back(c);
  }
  std::vector<std::vector<int>> dist(n);
  for (VertexId v = 0; v < n; ++v) dist[v] = Distances(g, v);

  if (blocks.empty()) {
    for (VertexId v = 0; v < n; ++v) {
      if (g.parents(v).empty()) {
        return found(1, {v, v}, "tree: both players stay at a source");
      }
    }
    ThrowInternal("acyclic graph without a source");
  }
  if (blocks.size() > 1) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        for (VertexId a : blocks[i]) {
          for (VertexId b : blocks[j]) {
            if (dist[a][b] >= 3) {
              return found(1, {a, b},
                           "two nontrivial blocks: players stay far apart");
            }
          }
        }
      }
    }
    ThrowInternal("no distant pair across blocks");
  }

  const std::vector<VertexId>& block = blocks.front();
  ThinnedBlockCutTree tree = ThinnedBlockCutTree::Build(g);
  int root = -1;
  for (int q = 0; q < tree.size(); ++q) {
    if (tree.node(q).kind == ThinnedBlockCutTree::NodeKind::kBlock) root = q;
  }
  std::vector<int> parent = tree.RootedParents(root);
  for (int q = 0; q < tree.size(); ++q) {
    if (q == root) continue;
    const auto& up = tree.node(parent[q]);
    if (up.kind != ThinnedBlockCutTree::NodeKind::kVertex) continue;
    VertexId a = tree.node(q).vertex;
    if (g.has_arc(up.vertex, a)) continue;
    VertexId far = block.front();
    for (VertexId w : block) {
      if (dist[a][w] > dist[a][far]) far = w;
    }
    return found(2, {a, far},
                 "upward edge " + ArcString(g, a, up.vertex) +
                     ": its origin and a far block vertex");
  }

  for (VertexId a : block) {
    for (VertexId b : block) {
      if (a < b && dist[a][b] >= 3) {
        return found(3, {a, b}, "block has diameter at least 3");
      }
    }
  }
  for (VertexId a : block) {
    for (VertexId b : block) {
      if (a >= b || dist[a][b] != 2) continue;
      bool guarded = false;
      for (VertexId w : g.neighbors(a)) {
        if (g.adjacent(w, b) && (g.has_arc(w, a) || g.has_arc(w, b))) {
          guarded = true;
        }
      }
      if (!guarded) {
        return found(4, {a, b},
                     "distance-2 pair without a parenting common neighbour");
      }
    }
  }
  for (VertexId v : block) {
    if (g.parents(v).empty()) {
      return found(5, {v, v}, "block vertex without a parent");
    }
  }
  out.reason = "one out-rooted block of diameter 2 with guarded pairs";
  return out;
}

PurePath WalkingTogetherPath(const std::vector<VertexId>& walk) {
  if (walk.size() < 2) ThrowInvalid("walk needs at least 2 vertices");
  PurePath p;
  for (VertexId v : walk) p.states.push_back({v, v});
  return p;
}

PurePath ChasePath(const std::vector<VertexId>& walk, int k) {
  const int len = static_cast<int>(walk.size());
  if (k < 1 || len < k + 2) ThrowInvalid("chase needs a walk of length >= k+2");
  PurePath p;
  for (int t = 0; t < len; ++t) p.states.push_back({walk[t], walk[(t + k) % len]});
  return p;
}

namespace {

std::vector<VertexId> Reversed(std::vector<VertexId> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

CycleVerdict CycleEquilibriaExist(const OrientedGraph& g) {
  RequireNoSmallUnbalanced(g);
  CycleVerdict out;
  std::optional<UndirectedCycle> cycle = FindDirectedCycle(g);
  if (!cycle) return out;
  out.exists = true;
  out.cycle = *cycle;
  out.walking_together = WalkingTogetherPath(Reversed(cycle->vertices));
  out.chase = ChasePath(cycle->vertices, 2);
  return out;
}

Girth5Verdict Girth5Classification(const OrientedGraph& g) {
  RequireNoSmallUnbalanced(g, 5);
  Girth5Verdict out;
  out.static_verdict = StaticEquilibriumExists(g);
  if (out.static_verdict.exists) return out;

  std::vector<VertexId> block;
  for (const auto& c : BiconnectedComponents(g).components) {
    if (c.size() > 2) block = c;
  }
  std::set<VertexId> in_block(block.begin(), block.end());
  int inner_arcs = 0;
  for (auto [u, v] : g.arcs()) inner_arcs += in_block.count(u) && in_block.count(v);
  if (block.size() != 5 || inner_arcs != 5) {
    ThrowInternal("no static equilibrium but the block is not a 5-cycle");
  }
  std::vector<VertexId> cycle{block.front()};
  while (static_cast<int>(cycle.size()) < 5) {
    VertexId next = -1;
    for (VertexId w : g.children(cycle.back())) {
      if (in_block.count(w)) next = w;
    }
    if (next == -1) ThrowInternal("5-cycle core is not directed");
    cycle.push_back(next);
  }
  if (!g.has_arc(cycle.back(), cycle.front())) {
    ThrowInternal("5-cycle core is not directed");
  }
  out.kind = Girth5Class::kFiveCycleCore;
  out.core = UndirectedCycle{cycle};
  out.walking_together = WalkingTogetherPath(Reversed(cycle));
  out.chase = ChasePath(cycle, 2);
  return out;
}

namespace {

bool Try(const ValueTable& vt, const std::vector<VertexId>& walk,
         const PurePath& path, EquilibriumWitness* slot) {
  DeviationReport rep = CheckProfileEquilibrium(vt, path);
  if (!rep.equilibrium) return false;
  slot->found = true;
  slot->walk = walk;
  slot->path = path;
  slot->worst_gain = rep.worst_gain;
  return true;
}

// Shortest cycle through the "safe step" digraph of walking together: from
// (c, c) to (c', c') when no single deviation gains against continuation 0.
std::optional<std::vector<VertexId>> SafeWalkCycle(const ValueTable& vt) {
  const OrientedGraph& g = vt.graph();
  const int n = g.num_vertices();
  std::vector<std::vector<VertexId>> safe(n);
  for (VertexId c = 0; c < n; ++c) {
    for (VertexId next : g.neighbors(c)) {
      bool ok = true;
      for (VertexId a : g.moves(c)) {
        if (a == next) continue;
        if (vt.payoff({a, next}) > kSignThreshold ||
            -vt.payoff({next, a}) > kSignThreshold) {
          ok = false;
        }
      }
      if (ok) safe[c].push_back(next);
    }
  }
  std::optional<std::vector<VertexId>> best;
  for (VertexId s = 0; s < n; ++s) {
    std::vector<VertexId> from(n, -1);
    std::deque<VertexId> queue{s};
    std::vector<bool> seen(n, false);
    seen[s] = true;
    VertexId closing = -1;
    while (!queue.empty() && closing == -1) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : safe[u]) {
        if (w == s) {
          closing = u;
          break;
        }
        if (!seen[w]) {
          seen[w] = true;
          from[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing == -1) continue;
    std::vector<VertexId> walk;
    for (VertexId v = closing; v != -1; v = from[v]) walk.push_back(v);
    std::reverse(walk.begin(), walk.end());
    if (!best || walk.size() < best->size()) best = std::move(walk);
  }
  return best;
}

}  // namespace

EquilibriumReport DetectEquilibria(const ValueTable& vt,
                                   const DetectOptions& options) {
  if (vt.perspective() != Player::kX) {
    ThrowInvalid("equilibrium detection needs a game value table");
  }
  const OrientedGraph& g = vt.graph();
  const int n = g.num_vertices();
  EquilibriumReport out;
  out.chase_k = options.chase_k;
  out.edge_decisive = IsEdgeDecisive(vt);

  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      PurePath stay;
      stay.states = {{x, y}};
      DeviationReport rep = CheckProfileEquilibrium(vt, stay);
      if (!rep.equilibrium) continue;
      ++out.static_pairs;
      if (!out.static_eq.found) {
        out.static_eq = {true, {x, y}, stay, rep.worst_gain};
      }
    }
  }

  std::vector<UndirectedCycle> directed =
      DirectedCycles(g, options.max_cycle_length, options.cycle_limit);
  for (const auto& c : directed) {
    if (Try(vt, Reversed(c.vertices), WalkingTogetherPath(Reversed(c.vertices)),
            &out.walking_together)) {
      break;
    }
  }
  if (!out.walking_together.found) {
    if (auto walk = SafeWalkCycle(vt)) {
      Try(vt, *walk, WalkingTogetherPath(*walk), &out.walking_together);
    }
  }

  const int k = options.chase_k;
  for (const auto& c : directed) {
    if (c.length() >= k + 2 &&
        Try(vt, c.vertices, ChasePath(c.vertices, k), &out.chase)) {
      break;
    }
  }
  if (!out.chase.found && (!out.edge_decisive || options.all_cycles)) {
    for (const auto& c :
         UndirectedCycles(g, options.max_cycle_length, options.cycle_limit)) {
      if (c.length() < k + 2) continue;
      if (Try(vt, c.vertices, ChasePath(c.vertices, k), &out.chase)) break;
      std::vector<VertexId> back = Reversed(c.vertices);
      if (Try(vt, back, ChasePath(back, k), &out.chase)) break;
    }
  }
  return out;
}

}  // namespace pursuit
