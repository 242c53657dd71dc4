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

#include "pursuit/verify.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "pursuit/enumerate.h"

namespace pursuit {

Verdict SolvedVerdict(const ValueTable& vt, VertexId x, VertexId y) {
  double v = vt.graph().adjacent(x, y) ? vt.payoff({x, y}) : vt.value(x, y);
  if (vt.perspective() == Player::kY) v = -v;
  if (std::abs(v) < kSignThreshold) return Verdict::kDraw;
  return v > 0 ? Verdict::kXWins : Verdict::kYWins;
}

namespace {

bool Char6Applies(const OrientedGraph& g) {
  std::optional<int> girth = Girth(g);
  return IsStronglyConnected(g) && (!girth || *girth >= 6);
}

}  // namespace

std::vector<VerificationRecord> VerifyGraph(const OrientedGraph& g,
                                            const std::string& name,
                                            double delta) {
  using Predicate = std::function<WinnerVerdict(VertexId, VertexId)>;
  std::vector<std::pair<std::string, Predicate>> predicates;
  if (IsTree(g)) {
    predicates.push_back({"tree_winner", [&](VertexId x, VertexId y) {
                            return TreeWinner(g, x, y);
                          }});
  }
  if (Char6Applies(g)) {
    predicates.push_back({"char6_classify", [&](VertexId x, VertexId y) {
                            return Char6Classify(g, x, y, delta);
                          }});
  }
  if (SatisfiesNoSmallUnbalanced(g)) {
    predicates.push_back({"char4_winner", [&](VertexId x, VertexId y) {
                            return Char4Winner(g, x, y);
                          }});
  }
  std::vector<VerificationRecord> out;
  if (predicates.empty()) return out;

  auto start = std::chrono::steady_clock::now();
  ValueTable vt = ValueIteration(
      GameConfig::Create(g, delta),
      {.epsilon = kDefaultEpsilon, .arithmetic = Arithmetic::kExtended});
  double solve_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const auto& values = vt.values();
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const int n = g.num_vertices();
  for (const auto& [pname, predicate] : predicates) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationRecord rec;
    rec.graph = name;
    rec.delta = delta;
    rec.predicate = pname;
    rec.min_value = *lo;
    rec.max_value = *hi;
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        Verdict structural = predicate(x, y).verdict;
        Verdict solved = SolvedVerdict(vt, x, y);
        ++rec.pairs;
        if (structural == solved) continue;
        if (rec.mismatches++ == 0) {
          rec.structural = VerdictName(structural);
          rec.solver = VerdictName(solved);
          rec.detail = "x=" + g.name(x) + " y=" + g.name(y);
        }
      }
    }
    rec.seconds = solve_seconds +
                  std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<OrientedGraph> SampleGraphs(const VerifyOptions& options) {
  if (options.sample_min_n < 2 || options.sample_max_n < options.sample_min_n) {
    ThrowInvalid("bad sample size range");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<OrientedGraph> out;
  std::set<std::uint64_t> seen;
  int attempts = 0;
  while (static_cast<int>(out.size()) < options.samples) {
    if (++attempts > 1000 * std::max(options.samples, 1)) {
      ThrowInternal("sampler could not find enough qualifying graphs");
    }
    const int n = std::uniform_int_distribution<int>(
        options.sample_min_n, options.sample_max_n)(rng);
    std::vector<Arc> arcs;
    std::set<std::pair<int, int>> used;
    auto add = [&](int a, int b) {
      if (a == b || used.count({std::min(a, b), std::max(a, b)})) return;
      used.insert({std::min(a, b), std::max(a, b)});
      if (rng() & 1) std::swap(a, b);
      arcs.push_back({a, b});
    };
    for (int v = 1; v < n; ++v) {
      add(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    }
    const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int e = 0; e < extra; ++e) {
      std::uniform_int_distribution<int> pick(0, n - 1);
      add(pick(rng), pick(rng));
    }
    OrientedGraph g = OrientedGraph::FromArcs(n, arcs);
    if (!SatisfiesNoSmallUnbalanced(g) && !Char6Applies(g)) continue;
    if (!seen.insert(CanonicalCode(g) * 16 + n).second) continue;
    out.push_back(std::move(g));
  }
  for (int k = 6; k <= options.sample_max_n; ++k) {
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i) arcs.push_back({i, (i + 1) % k});
    out.push_back(OrientedGraph::FromArcs(k, arcs));
  }
  return out;
}

VerifySummary RunVerification(const VerifyOptions& options) {
  if (options.exhaustive_n < 0 || options.exhaustive_n > 5) {
    ThrowInvalid("exhaustive tier supports n <= 5");
  }
  for (double d : options.deltas) {
    if (!(d > 0.0 && d < 1.0)) ThrowInvalid("delta must be in (0, 1)");
  }
  std::vector<std::pair<std::string, OrientedGraph>> graphs;
  for (int n = 1; n <= options.exhaustive_n; ++n) {
    for (OrientedGraph& g : ConnectedOrientedGraphs(n)) {
      std::string name =
          "n" + std::to_string(n) + "_" + std::to_string(OrientationCode(g));
      graphs.emplace_back(std::move(name), std::move(g));
    }
  }
  if (options.samples > 0) {
    int i = 0;
    for (OrientedGraph& g : SampleGraphs(options)) {
      graphs.emplace_back("sample" + std::to_string(i++) + "_n" +
                              std::to_string(g.num_vertices()),
                          std::move(g));
    }
  }

  struct Job {
    int graph;
    double delta;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
    for (double d : options.deltas) jobs.push_back({i, d});
  }
  std::vector<std::vector<VerificationRecord>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const auto& [name, g] = graphs[jobs[j].graph];
      results[j] = VerifyGraph(g, name, jobs[j].delta);
    }
  };
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifySummary summary;
  summary.graphs = static_cast<int>(graphs.size());
  for (auto& r : results) {
    for (auto& rec : r) summary.records.push_back(std::move(rec));
  }
  std::sort(summary.records.begin(), summary.records.end(),
            [](const VerificationRecord& a, const VerificationRecord& b) {
              return std::tie(a.graph, a.delta, a.predicate) <
                     std::tie(b.graph, b.delta, b.predicate);
            });
  for (const auto& rec : summary.records) summary.mismatches += rec.mismatches;
  return summary;
}

}  // namespace pursuit
