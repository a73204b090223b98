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

#include "robustcut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "robustcut/errors.hpp"
#include "robustcut/rng.hpp"

namespace robustcut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTol = 1e-8;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

int side(double projection) { return projection >= 0.0 ? 1 : -1; }

void require_unit(const Vector& v, const char* name) {
  if (std::abs(v.norm() - 1.0) > kUnitTol) {
    throw DomainError(std::string(name) + " is not a unit vector (norm " +
                      std::to_string(v.norm()) + ")");
  }
}

}  // namespace

std::string_view to_string(RoundScheme scheme) {
  switch (scheme) {
    case RoundScheme::kUniform:
      return "uniform";
    case RoundScheme::kDicutUniform:
      return "dicut_uniform";
    case RoundScheme::kAllEqualBiased:
      return "allequal_biased";
    case RoundScheme::kSignPsd:
      return "sign_psd";
  }
  return "uniform";
}

RoundScheme round_scheme_from_string(std::string_view name) {
  for (auto s : {RoundScheme::kUniform, RoundScheme::kDicutUniform, RoundScheme::kAllEqualBiased,
                 RoundScheme::kSignPsd}) {
    if (to_string(s) == name) return s;
  }
  throw ParseError("unknown rounding scheme '" + std::string(name) + "'");
}

Vector uniform_direction(int dimension, Rng& rng) {
  const auto r = rng.unit_vector(static_cast<std::size_t>(dimension));
  return Eigen::Map<const Vector>(r.data(), dimension);
}

Cut hyperplane_round(const GramFactor& u, const Vector& r) {
  const Vector proj = u.matrix().transpose() * r;
  std::vector<int> signs(static_cast<std::size_t>(u.size()));
  for (int i = 0; i < u.size(); ++i) signs[i] = side(proj(i));
  return Cut(std::move(signs));
}

Cut hyperplane_round(const GramFactor& u, Rng& rng) {
  return hyperplane_round(u, uniform_direction(u.rank(), rng));
}

Cut hyperplane_round(const GramFactor& u, const RoundConfig& cfg) {
  Rng rng(cfg.seed, 0);
  return hyperplane_round(u, rng);
}

Cut dicut_round(const GramFactor& u, const Vector& r) {
  if (u.size() < 1) throw DimensionError("dicut rounding needs the reference column");
  const Vector proj = u.matrix().transpose() * r;
  const int reference = side(proj(0));
  std::vector<int> signs(static_cast<std::size_t>(u.size() - 1));
  for (int i = 1; i < u.size(); ++i) signs[i - 1] = side(proj(i)) == reference ? 1 : -1;
  return Cut(std::move(signs));
}

Cut round_for_instance(const Instance& inst, const GramFactor& u, const Vector& r) {
  if (u.size() != inst.vector_count()) throw DimensionError("factor size differs from instance");
  return inst.kind() == ProblemKind::kDiCut ? dicut_round(u, r) : hyperplane_round(u, r);
}

Cut round_trial(const Instance& inst, const GramFactor& u, std::uint64_t seed, std::uint64_t trial) {
  Rng rng(seed, trial);
  return round_for_instance(inst, u, uniform_direction(u.rank(), rng));
}

double separation_prob(double inner) { return std::acos(clamp_unit(inner)) / kPi; }

double expected_cut_exact(const Instance& inst, const GramFactor& u, const WeightAssignment& w) {
  if (w.size() != inst.weight_count()) throw DimensionError("weight vector length differs");
  if (u.size() != inst.vector_count()) throw DimensionError("factor size differs from instance");
  double total = 0.0;
  const auto& edges = inst.edges();
  switch (inst.kind()) {
    case ProblemKind::kMaxCut:
      for (std::size_t e = 0; e < edges.size(); ++e) {
        total += w[e] * separation_prob(u.dot(edges[e].tail, edges[e].head));
      }
      return total;
    case ProblemKind::kDiCut:
      // Arc t -> h is cut iff u_0, u_t and -u_h share a side.
      for (std::size_t a = 0; a < edges.size(); ++a) {
        const Vector t = u.column(edges[a].tail + 1);
        const Vector h = -u.column(edges[a].head + 1);
        total += w[a] * dicut_triple_prob(u.column(0), t, h);
      }
      return total;
    case ProblemKind::kAllEqual:
      break;
  }
  throw DomainError("no closed-form expectation for allequal instances");
}

double alpha_ratio(double t) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("alpha_ratio argument outside [-1, 1]");
  if (t == 1.0) return std::numeric_limits<double>::infinity();
  return (std::acos(t) / kPi) / ((1.0 - t) / 2.0);
}

double dicut_triple_prob(const Vector& ui, const Vector& uj, const Vector& uk) {
  require_unit(ui, "u_i");
  require_unit(uj, "u_j");
  require_unit(uk, "u_k");
  const double sum = std::acos(clamp_unit(ui.dot(uj))) + std::acos(clamp_unit(ui.dot(uk))) +
                     std::acos(clamp_unit(uj.dot(uk)));
  return std::max(0.0, 1.0 - sum / (2.0 * kPi));
}

bool dicut_pair_feasible(const FeasiblePair& p, double tol) {
  const double a = p.u0.dot(p.ui);
  const double b = p.u0.dot(p.uj);
  const double c = p.ui.dot(p.uj);
  return a + b + c >= -1.0 - tol && -a - b + c >= -1.0 - tol && -a + b - c >= -1.0 - tol &&
         a - b - c >= -1.0 - tol;
}

double dicut_pair_weight(const FeasiblePair& p) {
  return 0.25 * (1.0 + p.u0.dot(p.ui) - p.u0.dot(p.uj) - p.ui.dot(p.uj));
}

std::vector<FeasiblePair> feasible_pair_grid(int count, std::uint64_t seed) {
  if (count < 1) throw DomainError("grid size must be positive");
  std::vector<FeasiblePair> grid;
  grid.reserve(static_cast<std::size_t>(count));
  Rng rng(seed);
  // The relaxation is rotation invariant, so u_0 is pinned to e_1.
  Vector u0 = Vector::Zero(3);
  u0(0) = 1.0;
  while (static_cast<int>(grid.size()) < count) {
    FeasiblePair p{u0, uniform_direction(3, rng), uniform_direction(3, rng)};
    if (dicut_pair_feasible(p, 0.0)) grid.push_back(std::move(p));
  }
  return grid;
}

PairProbability uniform_pair_probability() {
  return [](const FeasiblePair& p, int trials, Rng& rng) {
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
      const Vector r = uniform_direction(static_cast<int>(p.u0.size()), rng);
      const int s0 = side(p.u0.dot(r));
      if (side(p.ui.dot(r)) == s0 && side(p.uj.dot(r)) != s0) ++hits;
    }
    const double mean = static_cast<double>(hits) / trials;
    return ProbabilityEstimate{mean, std::sqrt(mean * (1.0 - mean) / trials)};
  };
}

RatioSearchResult dicut_biased_ratio_search(const std::vector<FeasiblePair>& grid,
                                            const PairProbability& probability,
                                            const RoundConfig& cfg) {
  if (grid.empty()) throw DomainError("ratio search needs a non-empty grid");
  if (cfg.trials < 1) throw DomainError("trials must be at least 1");
  RatioSearchResult best;
  best.ratio = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double denom = dicut_pair_weight(grid[g]);
    if (denom <= 1e-12) continue;
    Rng rng(cfg.seed, g);
    const auto est = probability(grid[g], cfg.trials, rng);
    ++best.evaluated;
    const double ratio = est.mean / denom;
    if (ratio < best.ratio) {
      best.ratio = ratio;
      best.std_error = est.std_error / denom;
      best.argmin = g;
    }
  }
  if (best.evaluated == 0) throw DomainError("every grid point has a zero denominator");
  return best;
}

Cut allequal_round(const Cut& z, int k, Rng& rng) {
  if (k < 2) throw DomainError("allequal rounding needs arity k >= 2");
  const double bias = std::sqrt(2.0 / k);
  std::vector<int> x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double p = (1.0 + bias * z[i]) / 2.0;
    // Draw even when p is 0 or 1 so streams stay aligned across arities.
    x[i] = rng.uniform() < p ? 1 : -1;
  }
  return Cut(std::move(x));
}

Cut allequal_round(const Cut& z, int k, const RoundConfig& cfg) {
  Rng rng(cfg.seed, 0);
  return allequal_round(z, k, rng);
}

double sign_quadratic(const DenseMatrix& a, const Cut& z) {
  if (a.rows() != static_cast<Eigen::Index>(z.size()) || a.cols() != a.rows()) {
    throw DimensionError("matrix size differs from sign vector");
  }
  Vector v(static_cast<Eigen::Index>(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i) v(static_cast<Eigen::Index>(i)) = z[i];
  return v.dot(a * v);
}

Cut sign_round_psd(const DenseMatrix& a, const GramFactor& u, const RoundConfig& cfg) {
  if (a.rows() != u.size() || a.cols() != u.size()) {
    throw DimensionError("matrix size differs from factor");
  }
  if (cfg.trials < 1) throw DomainError("trials must be at least 1");
  const double target = (2.0 / kPi) * (a.cwiseProduct(u.gram())).sum();
  const double slack = 1e-10 * std::max(1.0, a.cwiseAbs().sum());
  const long budget = 100L * cfg.trials;
  Cut best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (long t = 0; t < budget; ++t) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(t));
    Cut z = hyperplane_round(u, rng);
    const double value = sign_quadratic(a, z);
    if (value > best_value) {
      best_value = value;
      best = std::move(z);
    }
    if (t + 1 >= cfg.trials && best_value >= target - slack) return best;
  }
  throw NumericError("sign rounding missed the 2/pi guarantee after " + std::to_string(budget) +
                     " draws (best " + std::to_string(best_value) + ", target " +
                     std::to_string(target) + "); is A positive semidefinite?");
}

double large_cut_ratio(double a_tilde) {
  if (!(a_tilde > 0.0 && a_tilde <= 1.0)) throw DomainError("large_cut_ratio argument outside (0, 1]");
  return std::acos(clamp_unit(1.0 - 2.0 * a_tilde)) / kPi / a_tilde;
}

bool negative_weight_bound(double expected_cut, double w_minus, double val_rp) {
  if (w_minus > 0.0) throw DomainError("w_minus must be nonpositive");
  const double lhs = expected_cut - w_minus;
  const double rhs = 0.878 * (val_rp - w_minus);
  return lhs >= rhs - 1e-12 * std::max(1.0, std::abs(rhs));
}

}  // namespace robustcut
