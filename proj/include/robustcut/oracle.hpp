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

// Brute-force ground truth and Monte-Carlo estimators used to certify the
// rounding guarantees on small instances.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robustcut/instances.hpp"
#include "robustcut/robust.hpp"
#include "robustcut/uncertainty.hpp"

namespace robustcut {

/// Largest n accepted by the enumeration oracles.
inline constexpr int kMaxEnumerationSize = 24;

struct OracleResult {
  Cut best_cut;
  WeightAssignment worst;
  /// Worst distribution over the support (Wasserstein sets only).
  std::vector<double> worst_probabilities;
  double value = 0.0;
  std::uint64_t enumerated = 0;
};

/// Worker count for the parallel oracles: ROBUSTCUT_THREADS if set, else
/// the hardware concurrency.
int worker_threads();

/// Exact worst case of a fixed cut over the set.
InnerSolution inner_at_cut(const Instance& inst, const UncertaintySpec& spec, const Cut& y);

/// Exact max-min value by enumerating every cut. Max-Cut and AllEqual fix
/// y_1 = +1 (global negation symmetry); DiCut enumerates all 2^n cuts.
OracleResult brute_force_robust(const Instance& inst, const UncertaintySpec& spec);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Sample mean of the rounded objective at fixed weights. Trial t rounds with
/// a direction drawn from Rng(seed, t); sums are taken in trial order so the
/// result does not depend on the thread count.
MonteCarloEstimate mc_expected_cut(const Instance& inst, const GramFactor& u,
                                   const WeightAssignment& w, int trials, std::uint64_t seed);

struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct CertifyOptions {
  /// Random feasible weightings checked besides the solver's worst case.
  int samples = 20;
  /// Rounded cuts whose exact worst case is compared against the optimum.
  int draws = 32;
  std::uint64_t seed = 0;
  /// Ratio constant; 0 picks 0.878 for Max-Cut and 0.796 for DiCut.
  double alpha = 0.0;
  double tol = 1e-9;
  /// Compare E - W_minus against alpha (Val - W_minus), where W_minus sums the
  /// negative entries of each checked weighting. Turned on automatically for
  /// signed specs.
  bool shifted = false;
};

struct SandwichReport {
  double val_rp = 0.0;
  double relaxed_value = 0.0;
  double ratio_constant = 0.0;
  /// Smallest exact expected cut seen over the checked weightings.
  double min_expected = 0.0;
  /// Largest exact worst case among the rounded cuts.
  double max_rounded_worst = 0.0;
  std::vector<InequalityCheck> checks;
  OracleResult oracle;
  bool pass() const;
  std::vector<std::string> failures() const;
};

/// Checks E[C(W)] >= alpha Val for W = the solver's worst case and for
/// sampled feasible W, and Val >= min_W objective(y, W) for the supplied cut
/// and for opts.draws rounded cuts.
SandwichReport certify_sandwich(const Instance& inst, const UncertaintySpec& spec,
                                const SaddleSolution& solution, const Cut& cut,
                                const CertifyOptions& opts = {});

/// Lower bound for instances whose relaxed cut is large: with
/// A_W = sum_e w_e (1 - u_i.u_j) / 2 / sum_e w_e and A~ the smallest A_W over
/// the solver worst case and the sampled weightings, the check
/// E[C(W)] >= h(A~) / A~ Val applies whenever A~ >= 0.84458.
struct LargeCutReport {
  double a_tilde = 0.0;
  bool applicable = false;
  double ratio = 0.0;
  std::vector<InequalityCheck> checks;
  bool pass() const;
};

inline constexpr double kLargeCutThreshold = 0.84458;

LargeCutReport certify_large_cut(const Instance& inst, const UncertaintySpec& spec,
                                 const SaddleSolution& solution, double val_rp,
                                 const CertifyOptions& opts = {});

/// sum_C w_C s_C s_C^T where s_C holds the literal signs of clause C.
DenseMatrix allequal_matrix(const Instance& inst, const WeightAssignment& w);

struct AllEqualPipelineReport {
  Cut z;
  double val_ae = 0.0;
  double relaxed_value = 0.0;
  double bound_factor = 0.0;
  std::vector<InequalityCheck> checks;
  bool pass() const;
};

/// Sign rounding at the solver's worst case followed by biased assignment.
/// Each checked weighting needs mean satisfied weight >= 0.88 k / 2^k Val(AE)
/// minus three standard errors.
AllEqualPipelineReport certify_allequal(const Instance& inst, const UncertaintySpec& spec,
                                        const SaddleSolution& solution, int trials,
                                        const CertifyOptions& opts = {});

}  // namespace robustcut
