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

#ifndef PURSUIT_INTERNAL_SIMPLEX_H_
#define PURSUIT_INTERNAL_SIMPLEX_H_

#include <algorithm>
#include <vector>

#include "pursuit/graph.h"

namespace pursuit::internal {

template <typename Real>
Real PivotTolerance();
template <>
inline long double PivotTolerance<long double>() {
  return 1e-15L;
}
template <>
inline __float128 PivotTolerance<__float128>() {
  return static_cast<__float128>(1e-28L);
}

template <typename Real>
struct ZeroSumSolution {
  Real value = 0;
  std::vector<Real> row;  // unnormalised weights; see Normalised()
  std::vector<Real> col;
};

template <typename Real>
std::vector<double> Normalised(const std::vector<Real>& w) {
  Real total = 0;
  for (Real x : w) total += x > 0 ? x : Real(0);
  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = static_cast<double>((w[i] > 0 ? w[i] : Real(0)) / total);
  }
  return out;
}

// Value of the zero-sum game a (row player maximises). Pure saddle points
// are returned directly; otherwise the shifted game is solved by the
// simplex method with Bland's rule, maximising sum(q) subject to
// A' q <= 1, q >= 0, where A' = a - min(a) + 1. Row weights are the dual
// prices of the constraints.
template <typename Real>
ZeroSumSolution<Real> SolveZeroSum(const std::vector<std::vector<Real>>& a,
                                   bool want_strategies) {
  const int m = a.size();
  const int n = a[0].size();
  ZeroSumSolution<Real> out;

  // Pure saddle point: max_i min_j equals min_j max_i.
  int best_row = 0;
  Real lower = 0;
  for (int i = 0; i < m; ++i) {
    Real row_min = a[i][0];
    for (int j = 1; j < n; ++j) row_min = std::min(row_min, a[i][j]);
    if (i == 0 || row_min > lower) {
      lower = row_min;
      best_row = i;
    }
  }
  int best_col = 0;
  Real upper = 0;
  for (int j = 0; j < n; ++j) {
    Real col_max = a[0][j];
    for (int i = 1; i < m; ++i) col_max = std::max(col_max, a[i][j]);
    if (j == 0 || col_max < upper) {
      upper = col_max;
      best_col = j;
    }
  }
  if (!(lower < upper)) {
    out.value = lower;
    if (want_strategies) {
      out.row.assign(m, Real(0));
      out.col.assign(n, Real(0));
      out.row[best_row] = 1;
      out.col[best_col] = 1;
    }
    return out;
  }

  Real lo = a[0][0];
  for (const auto& row : a) {
    for (Real x : row) lo = std::min(lo, x);
  }
  const Real shift = Real(1) - lo;
  const Real tol = PivotTolerance<Real>();
  const int width = n + m;
  std::vector<std::vector<Real>> t(m, std::vector<Real>(width + 1, Real(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j] + shift;
    t[i][n + i] = 1;
    t[i][width] = 1;
  }
  std::vector<Real> reduced(width + 1, Real(0));
  for (int j = 0; j < n; ++j) reduced[j] = 1;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  const int max_pivots = 50 * (width + 1) * (m + 1);
  for (int pivots = 0;; ++pivots) {
    if (pivots > max_pivots) ThrowInternal("simplex failed to terminate");
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (reduced[j] > tol) {
        enter = j;
        break;
      }
    }
    if (enter == -1) break;
    int leave = -1;
    Real best = 0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= tol) continue;
      Real ratio = t[i][width] / t[i][enter];
      if (leave == -1 || ratio < best - tol ||
          (ratio <= best + tol && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Positive entries keep the program bounded.
    if (leave == -1) ThrowInternal("unbounded matrix game program");
    Real pivot = t[leave][enter];
    for (Real& x : t[leave]) x /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == Real(0)) continue;
      Real f = t[i][enter];
      for (int j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    Real f = reduced[enter];
    for (int j = 0; j <= width; ++j) reduced[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  Real total = 0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) total += t[i][width];
  }
  out.value = Real(1) / total - shift;
  if (want_strategies) {
    out.col.assign(n, Real(0));
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n) out.col[basis[i]] = t[i][width];
    }
    out.row.assign(m, Real(0));
    for (int i = 0; i < m; ++i) {
      out.row[i] = -reduced[n + i] > 0 ? -reduced[n + i] : Real(0);
    }
  }
  return out;
}

}  // namespace pursuit::internal

#endif  // PURSUIT_INTERNAL_SIMPLEX_H_
