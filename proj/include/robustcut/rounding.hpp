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

// Randomized rounding schemes and the closed-form probabilities behind them.

#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "robustcut/gram.hpp"
#include "robustcut/instances.hpp"

namespace robustcut {

class Rng;

enum class RoundScheme { kUniform, kDicutUniform, kAllEqualBiased, kSignPsd };

std::string_view to_string(RoundScheme scheme);
RoundScheme round_scheme_from_string(std::string_view name);

struct RoundConfig {
  std::uint64_t seed = 0;
  int trials = 1;
  RoundScheme scheme = RoundScheme::kUniform;
};

/// Uniform direction on the unit sphere of the given dimension.
Vector uniform_direction(int dimension, Rng& rng);

/// Sign of u_i . r for every column, ties resolved to +1.
Cut hyperplane_round(const GramFactor& u, const Vector& r);
Cut hyperplane_round(const GramFactor& u, Rng& rng);
/// One draw from stream 0 of cfg.seed.
Cut hyperplane_round(const GramFactor& u, const RoundConfig& cfg);

/// Directed rounding: column 0 is the reference vector. Vertex i lands on
/// the +1 side iff u_i falls on the same side of the hyperplane as u_0.
Cut dicut_round(const GramFactor& u, const Vector& r);

/// Rounds a relaxed solution of the given instance kind with direction r.
Cut round_for_instance(const Instance& inst, const GramFactor& u, const Vector& r);

/// Trial t of a rounding run draws its direction from Rng(seed, t).
Cut round_trial(const Instance& inst, const GramFactor& u, std::uint64_t seed, std::uint64_t trial);

/// Exact expectation of the rounded objective over uniform r. Max-Cut and
/// DiCut only; weights may be signed.
double expected_cut_exact(const Instance& inst, const GramFactor& u, const WeightAssignment& w);

/// Probability that the pair (u_i, u_j) is separated: arccos(u_i . u_j) / pi.
double separation_prob(double inner);

/// (arccos(t) / pi) / ((1 - t) / 2). Diverges as t approaches 1.
double alpha_ratio(double t);

/// Probability that u_i, u_j and u_k fall on the same side of a uniform hyperplane.
double dicut_triple_prob(const Vector& ui, const Vector& uj, const Vector& uk);

/// A point of the DiCut ratio search: reference u_0 and the arc endpoints.
struct FeasiblePair {
  Vector u0;
  Vector ui;
  Vector uj;
};

/// Whether the pair satisfies the four triangle constraints of the DiCut relaxation.
bool dicut_pair_feasible(const FeasiblePair& pair, double tol = 1e-12);

/// ¼(1 + u0.ui - u0.uj - ui.uj), the relaxed contribution of the arc i -> j.
double dicut_pair_weight(const FeasiblePair& pair);

/// Deterministic sample of feasible unit triples in R^3.
std::vector<FeasiblePair> feasible_pair_grid(int count, std::uint64_t seed);

/// Estimate of the probability that arc i -> j is cut, with its standard error.
struct ProbabilityEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

using PairProbability =
    std::function<ProbabilityEstimate(const FeasiblePair& pair, int trials, Rng& rng)>;

/// Monte-Carlo estimate for plain hyperplane rounding.
PairProbability uniform_pair_probability();

struct RatioSearchResult {
  double ratio = 0.0;
  double std_error = 0.0;
  /// Index of the minimizing grid point.
  std::size_t argmin = 0;
  /// Grid points with a usable denominator.
  std::size_t evaluated = 0;
};

/// Minimum of P(arc cut) / relaxed contribution over the grid. Pair g uses
/// Rng(cfg.seed, g) for its cfg.trials draws.
RatioSearchResult dicut_biased_ratio_search(const std::vector<FeasiblePair>& grid,
                                            const PairProbability& probability,
                                            const RoundConfig& cfg);

/// Independent biased assignment: x_i = +1 with probability (1 + sqrt(2/k) z_i) / 2.
Cut allequal_round(const Cut& z, int k, Rng& rng);
Cut allequal_round(const Cut& z, int k, const RoundConfig& cfg);

/// Sum_ij A_ij z_i z_j.
double sign_quadratic(const DenseMatrix& a, const Cut& z);

/// Best of cfg.trials hyperplane sign vectors for z^T A z. Keeps drawing until
/// z^T A z >= (2/pi) <A, U^T U>, up to 100 * cfg.trials draws.
Cut sign_round_psd(const DenseMatrix& a, const GramFactor& u, const RoundConfig& cfg);

/// h(t) / t with h(t) = arccos(1 - 2t) / pi.
double large_cut_ratio(double a_tilde);

/// (E - w_minus) >= 0.878 (val - w_minus).
bool negative_weight_bound(double expected_cut, double w_minus, double val_rp);

}  // namespace robustcut
