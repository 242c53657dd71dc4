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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pursuit/planar.h"
#include "pursuit/subdivision.h"
#include "test_util.h"

namespace pursuit {
namespace {

using testing::DirectedCycle;
using testing::Make;
using testing::V;

OrientedGraph CompleteBipartite(int a, int b) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      edges.push_back({"a" + std::to_string(i), "b" + std::to_string(j)});
    }
  }
  return Make(edges);
}

OrientedGraph Complete(int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({V(i), V(j)});
  }
  return Make(edges);
}

OrientedGraph Petersen() {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({"o" + std::to_string(i), "o" + std::to_string((i + 1) % 5)});
    edges.push_back({"i" + std::to_string(i), "i" + std::to_string((i + 2) % 5)});
    edges.push_back({"o" + std::to_string(i), "i" + std::to_string(i)});
  }
  return Make(edges);
}

TEST_CASE("K3,3 subdivisions") {
  OrientedGraph k33 = CompleteBipartite(3, 3);
  auto w = FindK33Subdivision(k33);
  REQUIRE(w);
  CHECK(IsSubdivisionOf(k33, *w, 3, 3));
  OrientedGraph pet = Petersen();
  auto wp = FindK33Subdivision(pet);
  REQUIRE(wp);
  CHECK(IsSubdivisionOf(pet, *wp, 3, 3));
  CHECK_FALSE(FindK33Subdivision(Make({{"a", "b"}, {"b", "c"}, {"b", "d"}})));
  CHECK_FALSE(FindK33Subdivision(DirectedCycle(4)));
  CHECK_FALSE(FindK33Subdivision(Complete(5)));
  // Subdividing every edge keeps the subdivision.
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : k33.arcs()) {
    std::string mid = "m" + k33.name(u) + k33.name(v);
    edges.push_back({k33.name(u), mid});
    edges.push_back({mid, k33.name(v)});
  }
  OrientedGraph sub = Make(edges);
  auto ws = FindK33Subdivision(sub);
  REQUIRE(ws);
  CHECK(IsSubdivisionOf(sub, *ws, 3, 3));
}

TEST_CASE("outerplanarity") {
  OuterplanarResult c4 = IsOuterplanar(DirectedCycle(4));
  CHECK(c4.outerplanar);
  CHECK(c4.minor_checked);
  CHECK_FALSE(IsOuterplanar(Complete(4)).outerplanar);
  CHECK(IsOuterplanar(Complete(4)).obstruction.rfind("K4", 0) == 0);
  OuterplanarResult k23 = IsOuterplanar(CompleteBipartite(2, 3));
  CHECK_FALSE(k23.outerplanar);
  CHECK(k23.obstruction.rfind("K2,3", 0) == 0);
  CHECK(IsOuterplanar(Make({{"a", "b"}, {"b", "c"}})).outerplanar);
  // Fan: outerplanar with chords.
  OrientedGraph fan = Make({{"h", "a"}, {"h", "b"}, {"h", "c"}, {"h", "d"},
                            {"a", "b"}, {"b", "c"}, {"c", "d"}});
  OuterplanarResult f = IsOuterplanar(fan);
  REQUIRE(f.outerplanar);
  ValidateEmbedding(fan, *f.embedding);
  CHECK(f.embedding->components.front().chords.size() == 2);
  CHECK(ComponentFaces(f.embedding->components.front()).size() == 3);
}

TEST_CASE("outerplanar checks agree on every graph with at most 6 vertices") {
  int outer = 0, total = 0;
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> chosen;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1) chosen.push_back(pairs[e]);
      }
      if (!IsConnectedUndirected(n, chosen)) continue;
      OrientedGraph g = OrientedGraph::FromArcs(n, chosen);
      OuterplanarResult r = IsOuterplanar(g);  // throws on disagreement
      CHECK(r.minor_checked);
      if (r.outerplanar) {
        ++outer;
        ValidateEmbedding(g, *r.embedding);
        CHECK(g.num_edges() <= 2 * n - 3);
      }
      ++total;
    }
  }
  CHECK(outer > 0);
  CHECK(outer < total);
}

bool IsFaceOf(const OuterplanarEmbedding& e, std::vector<VertexId> cycle) {
  std::sort(cycle.begin(), cycle.end());
  for (const auto& c : e.components) {
    for (auto f : ComponentFaces(c)) {
      std::sort(f.begin(), f.end());
      if (f == cycle) return true;
    }
  }
  return false;
}

OrientedGraph TwoSquares() {
  return Make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"},
               {"b", "e"}, {"e", "f"}, {"f", "a"}});
}

OrientedGraph PentagonWithSquare() {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({V(i), V((i + 1) % 5)});
  edges.push_back({"v1", "w1"});
  edges.push_back({"w1", "w2"});
  edges.push_back({"w2", "v0"});
  return Make(edges);
}

TEST_CASE("well-directed faces") {
  OrientedGraph c5 = DirectedCycle(5);
  FaceSearch f5 = WellDirectedFace(c5, *IsOuterplanar(c5).embedding);
  CHECK(f5.face.length() == 5);
  CHECK(f5.shrink_steps == 0);

  for (const OrientedGraph& g : {TwoSquares(), PentagonWithSquare()}) {
    OuterplanarResult r = IsOuterplanar(g);
    REQUIRE(r.outerplanar);
    FaceSearch f = WellDirectedFace(g, *r.embedding);
    CHECK(IsWellDirected(g, f.face));
    CHECK(IsFaceOf(*r.embedding, f.face.vertices));
    CHECK(f.shrink_steps <= g.num_edges());
    for (int i = 0; i < f.face.length(); ++i) {
      CHECK(g.has_arc(f.face.vertices[i],
                      f.face.vertices[(i + 1) % f.face.length()]));
    }
  }
  CHECK(WellDirectedFace(TwoSquares(), *IsOuterplanar(TwoSquares()).embedding)
            .face.length() == 4);
  // Chord inside the starting cycle forces a shrink step.
  OrientedGraph chorded = Make({{"a", "b"}, {"b", "c"}, {"c", "d"},
                                {"d", "e"}, {"e", "f"}, {"f", "a"},
                                {"a", "d"}});
  OuterplanarResult rc = IsOuterplanar(chorded);
  FaceSearch fc = WellDirectedFace(chorded, *rc.embedding);
  CHECK(IsWellDirected(chorded, fc.face));
  CHECK(IsFaceOf(*rc.embedding, fc.face.vertices));
  std::vector<VertexId> hexagon;
  for (const char* v : {"a", "b", "c", "d", "e", "f"}) {
    hexagon.push_back(chorded.index(v));
  }
  FaceSearch from_outer =
      WellDirectedFace(chorded, *rc.embedding, UndirectedCycle{hexagon});
  CHECK(from_outer.shrink_steps == 1);
  CHECK(from_outer.face.length() == 4);
  CHECK(IsFaceOf(*rc.embedding, from_outer.face.vertices));
  CHECK_THROWS_AS(WellDirectedFace(testing::Path3(),
                                   *IsOuterplanar(testing::Path3()).embedding),
                  Error);
}

TEST_CASE("outerplanar equilibria") {
  struct Case {
    OrientedGraph g;
    double delta;
  };
  std::vector<Case> cases = {{DirectedCycle(4), 0.5},
                             {PentagonWithSquare(), 0.5},
                             {DirectedCycle(6), 0.3},
                             {TwoSquares(), 0.3},
                             {TwoSquares(), 0.5}};
  for (const Case& c : cases) {
    EquilibriumReport r = OuterplanarEquilibria(GameConfig::Create(c.g, c.delta));
    CHECK(r.walking_together.found);
    CHECK(r.chase.found);
    CHECK(r.walking_together.worst_gain <= 1e-6);
    CHECK(r.chase.worst_gain <= 1e-6);
  }
  CHECK_THROWS_AS(OuterplanarEquilibria(GameConfig::Create(Complete(4), 0.5)),
                  Error);
}

}  // namespace
}  // namespace pursuit
