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

// Elliptope relaxations and a low-rank block-coordinate ascent solver.
//
// Every relaxed objective used here is linear in Y = U^T U:
//
//     value(Y) = offset + sum_{i<j} coupling(i, j) * Y_ij,
//
// so one solver covers Max-Cut, the reference-vector DiCut relaxation and
// the AllEqual relaxation. The solver keeps U with `rank` rows and updates
// one column at a time to the unit vector maximizing its local term
// (u_i <- g / |g| with g = sum_j coupling(i, j) u_j), which never decreases
// the objective.

#pragma once

#include <cstdint>
#include <vector>

#include "robustcut/gram.hpp"
#include "robustcut/instances.hpp"

namespace robustcut {

struct GramObjective {
  double offset = 0.0;
  /// Symmetric with zero diagonal.
  DenseMatrix coupling;

  int size() const { return static_cast<int>(coupling.rows()); }
  double value(const GramFactor& u) const;
  double value(const DenseMatrix& y) const;
};

/// Relaxed objective of `inst` under the fixed weights `w`.
GramObjective relaxed_objective(const Instance& inst, const WeightAssignment& w);

/// Coefficients c(Y) with relaxed value c.w / 4 for every w (the relaxed
/// counterpart of cut_coefficients). Maxcut: 2 (1 - u_i.u_j); dicut:
/// 1 + u_0.u_t - u_0.u_h - u_t.u_h; allequal: 4 |sum_l s_l u_l|^2 / k^2.
std::vector<double> relaxed_coefficients(const Instance& inst, const GramFactor& u);
std::vector<double> relaxed_coefficients(const Instance& inst, const DenseMatrix& y);

/// Relaxed objective at U for weights w (1/2 sum w_ij (1 - u_i.u_j) for maxcut).
double sdp_objective(const Instance& inst, const GramFactor& u, const WeightAssignment& w);

struct SolveReport {
  double value = 0.0;
  int iterations = 0;
  /// Objective improvement of the last sweep (or last best-response gap).
  double residual = 0.0;
  bool converged = false;
};

struct SdpOptions {
  /// 0 selects ceil(sqrt(2 N)) + 1 for N vectors.
  int rank = 0;
  /// Stop when a sweep improves the objective by less than tol * max(1, |value|).
  double tol = 1e-9;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  /// Random initializations; the best final value is kept.
  int restarts = 3;
};

int default_rank(int vectors);

struct SdpResult {
  GramFactor factor;
  SolveReport report;
};

/// Maximizes a Gram objective over the elliptope. A warm start, when given,
/// is run in addition to restarts - 1 random initializations.
SdpResult maximize_on_elliptope(const GramObjective& objective, const SdpOptions& options,
                                const GramFactor* warm_start = nullptr);

/// Nominal relaxation of `inst` with fixed weights `w`.
SdpResult solve_elliptope_max(const Instance& inst, const WeightAssignment& w,
                              const SdpOptions& options = {});

}  // namespace robustcut
