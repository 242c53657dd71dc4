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

// Command-line front end. Every command prints one JSON document on stdout.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pursuit/block_cut_tree.h"
#include "pursuit/characterize.h"
#include "pursuit/cycles.h"
#include "pursuit/graph_io.h"
#include "pursuit/planar.h"
#include "pursuit/pure.h"
#include "pursuit/solver.h"
#include "pursuit/subdivision.h"
#include "pursuit/verify.h"

namespace pursuit {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

double Round9(double v) { return std::round(v * 1e9) / 1e9; }

json Header(const std::string& command) {
  return json{{"schema", "pursuit/" + command}, {"version", kSchemaVersion}};
}

json Names(const OrientedGraph& g, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

json StateJson(const OrientedGraph& g, GameState s) {
  return json{{"x", g.name(s.x)}, {"y", g.name(s.y)}};
}

json PathJson(const OrientedGraph& g, const PurePath& p) {
  json states = json::array();
  for (GameState s : p.states) states.push_back(StateJson(g, s));
  return json{{"states", states}, {"loop_start", p.loop_start}};
}

VertexId Lookup(const OrientedGraph& g, const std::string& name) {
  auto v = g.find(name);
  if (!v) ThrowInvalid("unknown vertex '" + name + "'");
  return *v;
}

bool ParseBool(const std::string& s) {
  if (s == "true" || s == "yes") return true;
  if (s == "false" || s == "no") return false;
  ThrowInvalid("metadata expects true/false, got '" + s + "'");
}

int Analyze(const std::string& file) {
  GraphDocument doc = LoadGraphFile(file);
  const OrientedGraph& g = doc.graph;
  json out = Header("analyze");
  out["graph"] = doc.name;
  out["vertices"] = g.num_vertices();
  out["edges"] = g.num_edges();
  std::optional<int> girth = Girth(g);
  out["girth"] = girth ? json(*girth) : json("inf");
  const bool strong = IsStronglyConnected(g);
  out["strongly_connected"] = strong;
  out["tree"] = IsTree(g);

  BiconnectedDecomposition bcc = BiconnectedComponents(g);
  out["cut_vertices"] = Names(g, bcc.cut_vertices);
  json comps = json::array();
  for (const auto& c : bcc.components) comps.push_back(Names(g, c));
  out["biconnected_components"] = comps;

  ThinnedBlockCutTree tree = ThinnedBlockCutTree::Build(g);
  json nodes = json::array();
  for (const auto& node : tree.nodes()) {
    if (node.kind == ThinnedBlockCutTree::NodeKind::kBlock) {
      nodes.push_back({{"kind", "block"}, {"vertices", Names(g, node.block)}});
    } else {
      nodes.push_back({{"kind", "vertex"}, {"vertex", g.name(node.vertex)}});
    }
  }
  json tree_edges = json::array();
  for (auto [a, b] : tree.edges()) tree_edges.push_back({a, b});
  out["thinned_bc_tree"] = {{"nodes", nodes}, {"edges", tree_edges}};

  std::set<std::string> classes;
  json unbalanced = json::array();
  for (const auto& c : FindUnbalancedSmallCycles(g)) {
    classes.insert(c.orientation.Label());
    unbalanced.push_back({{"class", c.orientation.Label()},
                          {"cycle", Names(g, c.cycle.vertices)}});
  }
  out["unbalanced_small_cycles"] = unbalanced;
  if (auto c = FindDirectedCycle(g)) {
    out["directed_cycle"] = Names(g, c->vertices);
  } else {
    out["directed_cycle"] = nullptr;
  }

  std::optional<bool> outerplanar;
  if (g.num_vertices() <= kOuterplanarMaxVertices) {
    OuterplanarResult op = IsOuterplanar(g);
    outerplanar = op.outerplanar;
    json o{{"value", op.outerplanar}, {"minor_checked", op.minor_checked}};
    if (!op.obstruction.empty()) o["obstruction"] = op.obstruction;
    if (op.embedding) {
      json cs = json::array();
      for (const auto& c : op.embedding->components) {
        json chords = json::array();
        for (auto [a, b] : c.chords) chords.push_back({g.name(a), g.name(b)});
        cs.push_back({{"outer", Names(g, c.outer)}, {"chords", chords}});
      }
      o["components"] = cs;
    }
    out["outerplanar"] = o;
  } else {
    out["outerplanar"] = nullptr;
  }
  std::optional<bool> k33;
  try {
    auto w = FindK33Subdivision(g);
    k33 = w.has_value();
    out["k33_subdivision"] = w ? json{{"found", true},
                                      {"sides", {Names(g, {w->branch[0], w->branch[1], w->branch[2]}),
                                                 Names(g, {w->branch[3], w->branch[4], w->branch[5]})}}}
                               : json{{"found", false}};
  } catch (const Error&) {
    out["k33_subdivision"] = nullptr;
  }

  // Metadata assertions.
  json checks = json::object();
  bool all_pass = true;
  auto check = [&](const std::string& key, bool pass) {
    checks[key] = pass;
    all_pass &= pass;
  };
  for (const auto& [key, value] : doc.metadata) {
    if (key == "girth") {
      check(key, value == (girth ? std::to_string(*girth) : "inf"));
    } else if (key == "strongly_connected") {
      check(key, ParseBool(value) == strong);
    } else if (key == "tree") {
      check(key, ParseBool(value) == IsTree(g));
    } else if (key == "unbalanced") {
      std::set<std::string> want;
      if (value != "none") {
        std::stringstream ss(value);
        for (std::string item; ss >> item;) want.insert(item);
      }
      check(key, want == classes);
    } else if (key == "outerplanar") {
      check(key, outerplanar && ParseBool(value) == *outerplanar);
    } else if (key == "k33") {
      check(key, k33 && ParseBool(value) == *k33);
    }
  }
  out["metadata"] = doc.metadata;
  out["metadata_checks"] = checks;
  std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : kExitMismatch;
}

int Solve(const std::string& file, double delta, double epsilon,
          const std::string& format) {
  GraphDocument doc = LoadGraphFile(file);
  const OrientedGraph& g = doc.graph;
  ValueTable vt = ValueIteration(GameConfig::Create(g, delta),
                                 {.epsilon = epsilon});
  const int n = g.num_vertices();
  if (format == "csv") {
    std::printf("x,y,value,payoff\n");
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        std::printf("%s,%s,%.9f,%.9f\n", g.name(x).c_str(), g.name(y).c_str(),
                    vt.value(x, y), vt.payoff({x, y}));
      }
    }
    return 0;
  }
  json out = Header("solve");
  out["graph"] = doc.name;
  out["delta"] = delta;
  out["epsilon"] = epsilon;
  out["sweeps"] = vt.sweeps();
  out["vertices"] = g.names();
  json values = json::array(), payoffs = json::array();
  for (VertexId x = 0; x < n; ++x) {
    json row = json::array(), prow = json::array();
    for (VertexId y = 0; y < n; ++y) {
      row.push_back(Round9(vt.value(x, y)));
      prow.push_back(Round9(vt.payoff({x, y})));
    }
    values.push_back(row);
    payoffs.push_back(prow);
  }
  out["values"] = values;
  out["payoffs"] = payoffs;
  std::cout << out.dump(2) << "\n";
  return 0;
}

json VerdictJson(const OrientedGraph& g, const WinnerVerdict& w) {
  json out{{"verdict", VerdictName(w.verdict)},
           {"path", Names(g, w.path)},
           {"reason", w.reason}};
  if (!w.middle.empty()) out["middle"] = Names(g, w.middle);
  if (w.l >= 0) out["l"] = g.name(w.l);
  if (w.r >= 0) out["r"] = g.name(w.r);
  if (!w.subtree.empty()) out["subtree"] = Names(g, w.subtree);
  if (w.bracket) {
    out["loser_payoff_bracket"] = {Round9(w.bracket->first),
                                   Round9(w.bracket->second)};
  }
  return out;
}

int Characterize(const std::string& file, const std::string& xs,
                 const std::string& ys, double delta) {
  GraphDocument doc = LoadGraphFile(file);
  const OrientedGraph& g = doc.graph;
  VertexId x = Lookup(g, xs), y = Lookup(g, ys);
  json out = Header("characterize");
  out["graph"] = doc.name;
  out["x"] = xs;
  out["y"] = ys;
  out["delta"] = delta;
  json theorems = json::object();
  auto attempt = [&](const std::string& name, auto&& fn) {
    try {
      theorems[name] = VerdictJson(g, fn());
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::kPrecondition) throw;
      theorems[name] = {{"applicable", false}, {"reason", e.what()}};
    }
  };
  attempt("tree", [&] { return TreeWinner(g, x, y); });
  attempt("char6", [&] { return Char6Classify(g, x, y, delta); });
  attempt("char4", [&] { return Char4Winner(g, x, y); });
  out["theorems"] = theorems;
  ValueTable vt = ValueIteration(GameConfig::Create(g, delta));
  out["solver"] = {{"value", Round9(vt.value(x, y))},
                   {"payoff", Round9(vt.payoff({x, y}))},
                   {"verdict", VerdictName(SolvedVerdict(vt, x, y))}};
  bool agree = true;
  for (const auto& [name, t] : theorems.items()) {
    if (t.contains("verdict") &&
        t["verdict"] != out["solver"]["verdict"]) {
      agree = false;
    }
  }
  out["agree"] = agree;
  std::cout << out.dump(2) << "\n";
  return agree ? 0 : kExitMismatch;
}

int Pure(const std::string& file) {
  GraphDocument doc = LoadGraphFile(file);
  const OrientedGraph& g = doc.graph;
  PureEqStructure ps = ComputePureStructure(g);
  json out = Header("pure");
  out["graph"] = doc.name;
  out["sweeps"] = ps.sweeps();
  out["chain_sizes"] = ps.chain_sizes();
  json losing = json::array();
  for (GameState s : ps.losing_states()) {
    json item = StateJson(g, s);
    if (auto r = ps.round(s)) item["round"] = *r;
    losing.push_back(item);
  }
  out["f_inf"] = losing;
  json labels = json::array();
  const int n = g.num_vertices();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (ps.losing({u, v})) continue;
      json item = StateJson(g, {u, v});
      item["labels"] = Names(g, ps.labels({u, v}));
      PurePath path = ExtractPurePath(ps, {u, v});
      item["path"] = PathJson(g, path);
      item["payoff_zero_after_start"] = VerifyPurePayoffZero(g, path);
      labels.push_back(item);
    }
  }
  out["states"] = labels;
  std::cout << out.dump(2) << "\n";
  return 0;
}

json WitnessJson(const OrientedGraph& g, const EquilibriumWitness& w) {
  json out{{"found", w.found}};
  if (w.found) {
    out["walk"] = Names(g, w.walk);
    out["path"] = PathJson(g, w.path);
    out["worst_gain"] = Round9(w.worst_gain);
  }
  return out;
}

int Equilibria(const std::string& file, double delta, int k) {
  GraphDocument doc = LoadGraphFile(file);
  const OrientedGraph& g = doc.graph;
  ValueTable vt = ValueIteration(GameConfig::Create(g, delta));
  EquilibriumReport rep = DetectEquilibria(vt, {.chase_k = k});
  json out = Header("equilibria");
  out["graph"] = doc.name;
  out["delta"] = delta;
  out["method"] = rep.method;
  out["edge_decisive"] = rep.edge_decisive;
  out["static"] = WitnessJson(g, rep.static_eq);
  out["static"]["sustainable_pairs"] = rep.static_pairs;
  out["walking_together"] = WitnessJson(g, rep.walking_together);
  out["chase"] = WitnessJson(g, rep.chase);
  out["chase"]["k"] = rep.chase_k;
  if (SatisfiesNoSmallUnbalanced(g)) {
    StaticVerdict s = StaticEquilibriumExists(g);
    json st{{"exists", s.exists}, {"violated_item", s.violated},
            {"reason", s.reason}};
    if (s.witness) st["witness"] = StateJson(g, *s.witness);
    out["structural_static"] = st;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int GammaCommand(int a) {
  GammaThreshold t = Gamma(a);
  json out = Header("gamma");
  out["a"] = a;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", t.gamma);
  out["gamma"] = t.gamma;
  out["gamma_12"] = buf;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int Verify(int exhaustive_n, int samples, std::vector<double> deltas,
           int threads, bool list_all) {
  VerifyOptions options;
  options.exhaustive_n = exhaustive_n;
  options.samples = samples;
  if (!deltas.empty()) options.deltas = deltas;
  options.threads = threads;
  VerifySummary s = RunVerification(options);
  json out = Header("verify");
  out["graphs"] = s.graphs;
  out["records"] = s.records.size();
  out["mismatches"] = s.mismatches;
  std::map<std::string, int> per_predicate;
  for (const auto& r : s.records) per_predicate[r.predicate] += r.pairs;
  out["pairs_by_predicate"] = per_predicate;
  json rows = json::array();
  for (const auto& r : s.records) {
    if (!list_all && r.match()) continue;
    rows.push_back({{"graph", r.graph},
                    {"delta", r.delta},
                    {"predicate", r.predicate},
                    {"pairs", r.pairs},
                    {"match", r.match()},
                    {"structural", r.structural},
                    {"solver", r.solver},
                    {"detail", r.detail},
                    {"min_value", Round9(r.min_value)},
                    {"max_value", Round9(r.max_value)},
                    {"seconds", r.seconds}});
  }
  out["records_shown"] = rows;
  std::cout << out.dump(2) << "\n";
  return s.mismatches == 0 ? 0 : kExitMismatch;
}

}  // namespace
}  // namespace pursuit

int main(int argc, char** argv) {
  using namespace pursuit;
  CLI::App app{"Discounted pursuit games on oriented graphs"};
  app.require_subcommand(1);

  std::string file, xs, ys, format = "json";
  double delta = 0.5, epsilon = kDefaultEpsilon;
  int a = 5, k = 2, exhaustive_n = 5, samples = 200, threads = 0;
  std::vector<double> deltas;
  bool list_all = false;

  auto* analyze = app.add_subcommand("analyze", "Structural report");
  analyze->add_option("file", file, "Graph file")->required();

  auto* solve = app.add_subcommand("solve", "Value table");
  solve->add_option("file", file, "Graph file")->required();
  solve->add_option("--delta", delta, "Discount factor")->required();
  solve->add_option("--epsilon", epsilon, "Stopping tolerance");
  solve->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* characterize = app.add_subcommand("characterize", "Theorem verdicts");
  characterize->add_option("file", file, "Graph file")->required();
  characterize->add_option("--x", xs, "Vertex of player x")->required();
  characterize->add_option("--y", ys, "Vertex of player y")->required();
  characterize->add_option("--delta", delta, "Discount factor")->required();

  auto* pure = app.add_subcommand("pure", "Pure equilibrium structure");
  pure->add_option("file", file, "Graph file")->required();

  auto* equilibria = app.add_subcommand("equilibria", "Equilibrium report");
  equilibria->add_option("file", file, "Graph file")->required();
  equilibria->add_option("--delta", delta, "Discount factor")->required();
  equilibria->add_option("--k", k, "Chase distance")->check(CLI::Range(1, 16));

  auto* gamma = app.add_subcommand("gamma", "Edge-decisiveness threshold");
  gamma->add_option("--a", a, "Girth bound")->required();

  auto* verify = app.add_subcommand("verify", "Oracle-equivalence sweep");
  verify->add_option("--exhaustive-n", exhaustive_n)->check(CLI::Range(0, 5));
  verify->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--delta", deltas, "Discount factors (repeatable)");
  verify->add_option("--threads", threads)->check(CLI::NonNegativeNumber);
  verify->add_flag("--all", list_all, "List matching records too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return Analyze(file);
    if (*solve) return Solve(file, delta, epsilon, format);
    if (*characterize) return Characterize(file, xs, ys, delta);
    if (*pure) return Pure(file);
    if (*equilibria) return Equilibria(file, delta, k);
    if (*gamma) return GammaCommand(a);
    if (*verify) return Verify(exhaustive_n, samples, deltas, threads, list_all);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case Error::Kind::kInvalidArgument:
        return 1;
      case Error::Kind::kPrecondition:
        return 2;
      case Error::Kind::kInternal:
        return 3;
    }
  }
  return 1;
}
