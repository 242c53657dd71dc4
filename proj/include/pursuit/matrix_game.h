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

#ifndef PURSUIT_MATRIX_GAME_H_
#define PURSUIT_MATRIX_GAME_H_

#include <vector>

namespace pursuit {

// Zero-sum matrix game; the row player maximises payoffs[i][j].
struct MatrixGame {
  std::vector<std::vector<double>> payoffs;

  int rows() const { return static_cast<int>(payoffs.size()); }
  int cols() const { return payoffs.empty() ? 0 : payoffs[0].size(); }
};

struct MatrixSolution {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
};

// Value and one optimal strategy pair, by the simplex method on the shifted
// positive game. Pivoting follows Bland's rule, so the result depends only on
// the matrix. Throws kInvalidArgument for empty, ragged or non-finite input.
MatrixSolution SolveMatrixGame(const MatrixGame& game);

// Expected payoff of row strategy p against column strategy q.
double ExpectedPayoff(const MatrixGame& game, const std::vector<double>& p,
                      const std::vector<double>& q);

// Largest gain of a pure deviation by either player against the solution.
double ExploitabilityGap(const MatrixGame& game, const MatrixSolution& sol);

}  // namespace pursuit

#endif  // PURSUIT_MATRIX_GAME_H_
