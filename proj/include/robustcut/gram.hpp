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

#pragma once

#include <Eigen/Dense>

namespace robustcut {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Unit vectors u_1..u_N stored as the columns of an r x N matrix U; the
/// relaxed solution Y = U^T U lies on the elliptope.
class GramFactor {
 public:
  GramFactor() = default;
  /// Normalizes every column; throws NumericError on a zero column.
  explicit GramFactor(DenseMatrix columns);

  int rank() const { return static_cast<int>(u_.rows()); }
  int size() const { return static_cast<int>(u_.cols()); }
  const DenseMatrix& matrix() const { return u_; }
  auto column(int i) const { return u_.col(i); }
  double dot(int i, int j) const { return u_.col(i).dot(u_.col(j)); }
  DenseMatrix gram() const { return u_.transpose() * u_; }

  /// Every column is set to the same unit vector e_1 (Y = all ones).
  static GramFactor collapsed(int size, int rank = 1);

 private:
  DenseMatrix u_;
};

}  // namespace robustcut
