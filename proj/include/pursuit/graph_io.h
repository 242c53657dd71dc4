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

#ifndef PURSUIT_GRAPH_IO_H_
#define PURSUIT_GRAPH_IO_H_

#include <map>
#include <string>
#include <string_view>

#include "pursuit/graph.h"

namespace pursuit {

// Text format: one "u -> v" arc or one bare vertex name per line, '#'
// starts a comment, and "#@ key: value" lines carry metadata.
struct GraphDocument {
  std::string name;
  OrientedGraph graph;
  std::map<std::string, std::string> metadata;
};

// Throws kInvalidArgument listing every offending line.
GraphDocument ParseGraphDocument(std::string_view text,
                                 std::string name = "graph");
OrientedGraph ParseGraph(std::string_view text);

std::string SerializeGraph(const OrientedGraph& g,
                           const std::map<std::string, std::string>& metadata =
                               {});

// Document name is the file stem.
GraphDocument LoadGraphFile(const std::string& path);

}  // namespace pursuit

#endif  // PURSUIT_GRAPH_IO_H_
