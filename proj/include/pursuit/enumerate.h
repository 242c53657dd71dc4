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

#ifndef PURSUIT_ENUMERATE_H_
#define PURSUIT_ENUMERATE_H_

#include <cstdint>
#include <vector>

#include "pursuit/graph.h"

namespace pursuit {

// Orientation code of g: one base-3 digit per vertex pair (i < j) in
// lexicographic pair order, 0 for no edge, 1 for i -> j, 2 for j -> i.
std::uint64_t OrientationCode(const OrientedGraph& g);

// Smallest orientation code over all vertex relabellings (n <= 8).
std::uint64_t CanonicalCode(const OrientedGraph& g);

OrientedGraph GraphFromCode(int n, std::uint64_t code);

// Every connected oriented graph on n vertices (1 <= n <= 6), one per
// isomorphism class, ordered by canonical code.
std::vector<OrientedGraph> ConnectedOrientedGraphs(int n);

}  // namespace pursuit

#endif  // PURSUIT_ENUMERATE_H_
