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

#include <filesystem>
#include <string>

#include "pursuit/graph_io.h"

namespace pursuit {
namespace {

std::string ErrorOf(const std::string& text) {
  try {
    ParseGraphDocument(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("fixtures round-trip through the text format") {
  int count = 0;
  for (const auto& e :
       std::filesystem::directory_iterator(PURSUIT_FIXTURE_DIR)) {
    if (e.path().extension() != ".graph") continue;
    ++count;
    GraphDocument doc = LoadGraphFile(e.path().string());
    CHECK(doc.name == e.path().stem().string());
    GraphDocument again =
        ParseGraphDocument(SerializeGraph(doc.graph, doc.metadata), doc.name);
    CHECK(again.graph == doc.graph);
    CHECK(again.metadata == doc.metadata);
  }
  CHECK(count >= 10);
}

TEST_CASE("isolated vertex lines and comments") {
  GraphDocument doc = ParseGraphDocument("# one arc\n#@ girth: inf\na\na -> b\n");
  CHECK(doc.graph.num_vertices() == 2);
  CHECK(doc.graph.has_arc(doc.graph.index("a"), doc.graph.index("b")));
  CHECK(doc.metadata.at("girth") == "inf");
  CHECK(ParseGraph("solo\n").num_vertices() == 1);
}

TEST_CASE("parse errors name their lines") {
  CHECK(ErrorOf("a -> b\nb -> b\n").find("line 2") != std::string::npos);
  std::string dup = ErrorOf("a -> b\nb -> c\na -> b\n");
  CHECK(dup.find("line 3") != std::string::npos);
  CHECK(dup.find("first on line 1") != std::string::npos);
  CHECK(ErrorOf("a -> b\nb -> a\n").find("anti-parallel") != std::string::npos);
  CHECK(ErrorOf("a -> b\nbad name\n").find("line 2") != std::string::npos);
  CHECK(!ErrorOf("a -> b\nc -> d\n").empty());
  CHECK(ErrorOf("a -> b\nb -> c\n").empty());
}

}  // namespace
}  // namespace pursuit
