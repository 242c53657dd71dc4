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

#include "pursuit/graph_io.h"

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace pursuit {
namespace {

std::string Trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

const std::regex& Identifier() {
  static const std::regex re("[A-Za-z0-9_]+");
  return re;
}

}  // namespace

GraphDocument ParseGraphDocument(std::string_view text, std::string name) {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> errors;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::pair<std::string, std::string>, int> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto fail = [&](const std::string& what) {
      errors.push_back("line " + std::to_string(line_no) + ": " + what);
    };
    if (raw.rfind("#@", 0) == 0) {
      std::string body = Trim(std::string_view(raw).substr(2));
      auto colon = body.find(':');
      if (colon == std::string::npos) {
        fail("metadata needs 'key: value'");
        continue;
      }
      metadata[Trim(body.substr(0, colon))] = Trim(body.substr(colon + 1));
      continue;
    }
    std::string line = Trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      if (!std::regex_match(line, Identifier())) {
        fail("invalid vertex name '" + line + "'");
      } else {
        vertices.push_back(line);
      }
      continue;
    }
    std::string u = Trim(line.substr(0, arrow));
    std::string v = Trim(line.substr(arrow + 2));
    if (!std::regex_match(u, Identifier()) ||
        !std::regex_match(v, Identifier())) {
      fail("expected 'u -> v' with names in [A-Za-z0-9_]+");
      continue;
    }
    if (u == v) {
      fail("loop at " + u);
      continue;
    }
    if (auto it = seen.find({u, v}); it != seen.end()) {
      fail("duplicate arc " + u + " -> " + v + " (first on line " +
           std::to_string(it->second) + ")");
      continue;
    }
    if (auto it = seen.find({v, u}); it != seen.end()) {
      fail("anti-parallel arc " + u + " -> " + v + " (reverse on line " +
           std::to_string(it->second) + ")");
      continue;
    }
    seen[{u, v}] = line_no;
    edges.push_back({u, v});
  }
  if (errors.empty() && vertices.empty() && edges.empty()) {
    errors.push_back("graph has no vertices");
  }
  if (!errors.empty()) {
    std::string msg = name + ":";
    for (const auto& e : errors) msg += "\n  " + e;
    ThrowInvalid(msg);
  }
  try {
    OrientedGraph g = OrientedGraph::Create(std::move(vertices), edges);
    return {std::move(name), std::move(g), std::move(metadata)};
  } catch (const Error& e) {
    ThrowInvalid(name + ": " + e.what());
  }
}

OrientedGraph ParseGraph(std::string_view text) {
  return ParseGraphDocument(text).graph;
}

std::string SerializeGraph(const OrientedGraph& g,
                           const std::map<std::string, std::string>& metadata) {
  std::string out;
  for (const auto& [k, v] : metadata) out += "#@ " + k + ": " + v + "\n";
  if (g.num_edges() == 0) {
    for (const auto& name : g.names()) out += name + "\n";
  }
  for (auto [u, v] : g.arcs()) out += g.name(u) + " -> " + g.name(v) + "\n";
  return out;
}

GraphDocument LoadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowInvalid("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseGraphDocument(buf.str(),
                            std::filesystem::path(path).stem().string());
}

}  // namespace pursuit
