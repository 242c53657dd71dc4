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

#ifndef PURSUIT_VERIFY_H_
#define PURSUIT_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pursuit/characterize.h"
#include "pursuit/graph.h"
#include "pursuit/solver.h"

namespace pursuit {

// Sign of the solved game from x's side: adjacent pairs by the payoff that
// includes the current round, all others by the continuation value.
Verdict SolvedVerdict(const ValueTable& vt, VertexId x, VertexId y);

struct VerificationRecord {
  std::string graph;
  double delta = 0.0;
  std::string predicate;  // "tree_winner", "char6_classify", "char4_winner"
  int pairs = 0;
  int mismatches = 0;
  // First mismatching pair, or empty.
  std::string structural;
  std::string solver;
  std::string detail;
  double min_value = 0.0;
  double max_value = 0.0;
  double seconds = 0.0;

  bool match() const { return mismatches == 0; }
};

struct VerifyOptions {
  int exhaustive_n = 5;
  int samples = 200;
  int sample_min_n = 6;
  int sample_max_n = 8;
  std::vector<double> deltas = {0.3, 0.5};
  std::uint64_t seed = 20260101;
  int threads = 0;  // 0: hardware concurrency
};

struct VerifySummary {
  std::vector<VerificationRecord> records;  // sorted by (graph, delta, predicate)
  int graphs = 0;
  int mismatches = 0;
};

// Random connected graphs meeting at least one characterisation's
// hypotheses, plus the directed cycles of length 6..sample_max_n.
std::vector<OrientedGraph> SampleGraphs(const VerifyOptions& options);

// Compares every applicable structural verdict with the solved game.
std::vector<VerificationRecord> VerifyGraph(const OrientedGraph& g,
                                            const std::string& name,
                                            double delta);

VerifySummary RunVerification(const VerifyOptions& options);

}  // namespace pursuit

#endif  // PURSUIT_VERIFY_H_
