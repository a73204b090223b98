// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense kernels: a two-phase tableau simplex with Bland's rule, a pivoted
// Cholesky that returns Gram factors, and the PSD square root.

#pragma once

#include <limits>
#include <vector>

#include "robustcut/gram.hpp"

namespace robustcut {

enum class RowSense { kGreaterEqual, kEqual, kLessEqual };

/// minimize c.x  s.t.  A x (sense) b,  lower <= x <= upper.
struct LpProblem {
  Vector c;
  DenseMatrix A;
  Vector b;
  std::vector<RowSense> sense;
  Vector lower;
  Vector upper;

  /// Problem with `rows` x `cols` zero data, all rows `>=`, x >= 0.
  static LpProblem with_shape(int rows, int cols);

  int rows() const { return static_cast<int>(A.rows()); }
  int cols() const { return static_cast<int>(A.cols()); }
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct LpSolution {
  Vector x;
  double value = 0.0;
  /// One multiplier per constraint row: >= rows give dual >= 0, <= rows
  /// dual <= 0, = rows free.
  Vector dual;
  /// c - A^T dual.
  Vector reduced_costs;
  int iterations = 0;
};

/// Throws InfeasibleError or UnboundedError.
LpSolution simplex_solve(const LpProblem& lp);

/// b.dual plus the bound contributions of the reduced costs; equals the
/// primal value at an optimum.
double lp_dual_objective(const LpProblem& lp, const LpSolution& sol);

/// Rank-revealing Cholesky of an elliptope point: returns U with U^T U = Y.
/// Pivots with value >= -tol but <= tol are treated as zero; anything more
/// negative (or a non-PSD remainder) throws NumericError naming the pivot.
GramFactor cholesky_gram(const DenseMatrix& y, double tol = 1e-8);

/// Symmetric PSD square root S with S S = Q.
DenseMatrix sqrt_psd(const DenseMatrix& q, double tol = 1e-8);

}  // namespace robustcut
