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

#include "pursuit/matrix_game.h"

#include <algorithm>
#include <cmath>

#include "pursuit/graph.h"
#include "pursuit/internal/simplex.h"

namespace pursuit {

MatrixSolution SolveMatrixGame(const MatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  if (m == 0 || n == 0) ThrowInvalid("empty matrix game");
  std::vector<std::vector<long double>> a(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(game.payoffs[i].size()) != n) {
      ThrowInvalid("ragged matrix game");
    }
    for (double x : game.payoffs[i]) {
      if (!std::isfinite(x)) ThrowInvalid("non-finite matrix game entry");
      a[i].push_back(x);
    }
  }
  auto solved = internal::SolveZeroSum(a, true);
  MatrixSolution sol;
  sol.value = static_cast<double>(solved.value);
  sol.row_strategy = internal::Normalised(solved.row);
  sol.col_strategy = internal::Normalised(solved.col);
  return sol;
}

double ExpectedPayoff(const MatrixGame& game, const std::vector<double>& p,
                      const std::vector<double>& q) {
  double total = 0.0;
  for (int i = 0; i < game.rows(); ++i) {
    for (int j = 0; j < game.cols(); ++j) {
      total += p[i] * game.payoffs[i][j] * q[j];
    }
  }
  return total;
}

double ExploitabilityGap(const MatrixGame& game, const MatrixSolution& sol) {
  double gap = 0.0;
  for (int i = 0; i < game.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < game.cols(); ++j) {
      row += game.payoffs[i][j] * sol.col_strategy[j];
    }
    gap = std::max(gap, row - sol.value);
  }
  for (int j = 0; j < game.cols(); ++j) {
    double col = 0.0;
    for (int i = 0; i < game.rows(); ++i) {
      col += sol.row_strategy[i] * game.payoffs[i][j];
    }
    gap = std::max(gap, sol.value - col);
  }
  return gap;
}

}  // namespace pursuit
