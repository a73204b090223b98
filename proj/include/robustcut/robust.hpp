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

// Max-min solvers for the robust and distributionally robust relaxations
//
//     max_{Y in elliptope} min_{w in set} F(Y, w),   F(Y, w) = c(Y).w / 4,
//
// and fixed-Y cross-checks through the dual LP and the ellipsoidal closed
// form.
//
// F is linear in Y and in w, so the value equals min_w h(w) with
// h(w) = max_Y F(Y, w), a nominal elliptope solve. The solver alternates:
//
//   1. best response: Y_k = argmax_Y F(Y, w_k) (block-coordinate ascent);
//      h(w_k) is an upper bound on the saddle value;
//   2. restricted master: max over the convex hull of Y_1..Y_k of
//      min_w F(Y, w). For polyhedral and Wasserstein sets this is an LP whose
//      row multipliers give the hull weights; for ellipsoids it is a smooth
//      concave problem on the simplex solved by accelerated projected
//      gradient. The master value is attained at the hull point Ybar, so it
//      is a lower bound, and its minimizing w becomes w_{k+1}.
//
// The loop stops when the best-response gap (upper - lower) drops below
// gap_tol; Ybar is factored with cholesky_gram into the returned factor.

#pragma once

#include <cstdint>
#include <vector>

#include "robustcut/gram.hpp"
#include "robustcut/instances.hpp"
#include "robustcut/sdp.hpp"
#include "robustcut/uncertainty.hpp"

namespace robustcut {

struct SolverConfig {
  /// Relative best-response gap at which the saddle solve stops.
  double gap_tol = 1e-6;
  /// Caps both the outer rounds and the ascent sweeps of each best response.
  int max_iter = 2000;
  /// Factor rank of each best response (0: ceil(sqrt(2N)) + 1).
  int rank = 0;
  int restarts = 3;
  std::uint64_t seed = 0;
  /// Initial step of the ellipsoidal master's projected gradient.
  double step = 1.0;
  /// Relative sweep tolerance of each best response.
  double sdp_tol = 1e-9;

  SdpOptions sdp_options() const;
};

struct SaddleSolution {
  GramFactor factor;
  /// Worst-case weights at `factor` (mean weights for Wasserstein sets).
  WeightAssignment worst;
  /// Worst distribution over the support (Wasserstein sets only).
  std::vector<double> worst_probabilities;
  /// Inner value at `factor`: a certified lower bound on the saddle value.
  double value = 0.0;
  /// Smallest best-response value seen: an upper bound.
  double upper_bound = 0.0;
  SolveReport report;
};

SaddleSolution solve_robust(const Instance& inst, const UncertaintySpec& spec,
                            const SolverConfig& config = {});

/// Finite-support Wasserstein ambiguity. The expectation of F is F at the
/// mean weights, so the game runs over achievable means and the worst
/// distribution is read off the transport LP.
SaddleSolution solve_dro(const Instance& inst, const UncertaintySpec& spec,
                         const SolverConfig& config = {});

/// Inner minimization at a fixed factor.
InnerSolution inner_at(const Instance& inst, const UncertaintySpec& spec, const GramFactor& u);

/// max b.p s.t. A^T p = c(Y) / 4, p >= 0 at the factor's Y.
double dual_reformulated_value(const Instance& inst, const UncertaintySpec& spec,
                               const GramFactor& u);

/// w0.c(Y) / 4 - sqrt(a) / 4 |Q^{1/2} c(Y)| at the factor's Y.
double ellipsoid_reformulated_value(const Instance& inst, const UncertaintySpec& spec,
                                    const GramFactor& u);

}  // namespace robustcut
