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

#include "robustcut/robust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>

#include "robustcut/errors.hpp"
#include "robustcut/numerics.hpp"

namespace robustcut {

SdpOptions SolverConfig::sdp_options() const {
  SdpOptions opts;
  opts.rank = rank;
  opts.tol = sdp_tol;
  opts.max_iter = max_iter;
  opts.seed = seed;
  opts.restarts = restarts;
  return opts;
}

namespace {

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

WeightAssignment to_weights(const Vector& v) { return WeightAssignment(v.data(), v.data() + v.size()); }

// Euclidean projection onto the probability simplex.
Vector project_simplex(const Vector& v) {
  const auto k = v.size();
  std::vector<double> sorted(v.data(), v.data() + k);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).max(0.0).matrix();
}

struct MasterResult {
  Vector hull_weights;
  WeightAssignment weights;
  double value = 0.0;
};

// Restricted master over LP-representable sets (polyhedral, Wasserstein).
// Columns are the coefficient vectors c(Y_k); the multiplier of cut row k
// is the hull weight of Y_k.
MasterResult lp_master(const UncertaintySpec& spec, const std::vector<Vector>& columns) {
  const int k = static_cast<int>(columns.size());
  MasterResult out;
  if (spec.kind() == SetKind::kPolyhedral) {
    const auto& set = std::get<PolyhedralSet>(spec.set);
    const int m = static_cast<int>(set.A.cols());
    const int rows = static_cast<int>(set.A.rows());
    // Variables: w (m, free), t (free).
    LpProblem lp = LpProblem::with_shape(k + rows, m + 1);
    lp.c(m) = 1.0;
    for (int r = 0; r < k; ++r) {
      lp.A.block(r, 0, 1, m) = -0.25 * columns[r].transpose();
      lp.A(r, m) = 1.0;
    }
    lp.A.block(k, 0, rows, m) = set.A;
    lp.b.segment(k, rows) = set.b;
    lp.lower = Vector::Constant(m + 1, -kInfinity);
    const auto sol = simplex_solve(lp);
    out.hull_weights = sol.dual.head(k).cwiseMax(0.0);
    out.weights = to_weights(sol.x.head(m));
    out.value = sol.value;
  } else {
    const auto& set = std::get<WassersteinSet>(spec.set);
    const int s = static_cast<int>(set.support.size());
    const int m = static_cast<int>(set.support.front().size());
    DenseMatrix support(m, s);
    for (int i = 0; i < s; ++i) support.col(i) = to_vector(set.support[i]);
    // Variables: t (free), K(i, j) at 1 + i * s + j.
    LpProblem lp = LpProblem::with_shape(k + s + 1, 1 + s * s);
    lp.c(0) = 1.0;
    lp.lower(0) = -kInfinity;
    for (int r = 0; r < k; ++r) {
      const Vector cost = 0.25 * support.transpose() * columns[r];
      lp.A(r, 0) = 1.0;
      for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) lp.A(r, 1 + i * s + j) = -cost(i);
      }
    }
    for (int j = 0; j < s; ++j) {
      for (int i = 0; i < s; ++i) {
        lp.A(k + j, 1 + i * s + j) = 1.0;
        lp.A(k + s, 1 + i * s + j) = -set.metric(i, j);
      }
      lp.b(k + j) = set.empirical(j);
      lp.sense[k + j] = RowSense::kEqual;
    }
    lp.b(k + s) = -set.radius;
    const auto sol = simplex_solve(lp);
    Vector p = Vector::Zero(s);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) p(i) += sol.x(1 + i * s + j);
    }
    out.hull_weights = sol.dual.head(k).cwiseMax(0.0);
    out.weights = to_weights(support * p);
    out.value = sol.value;
  }
  const double total = out.hull_weights.sum();
  if (total > 0.0) {
    out.hull_weights /= total;
  } else {
    out.hull_weights = Vector::Zero(k);
    out.hull_weights(k - 1) = 1.0;
  }
  return out;
}

// Smooth restricted master for an ellipsoid:
//   max_{lambda in simplex} alpha.lambda - |B lambda|
// with alpha_k = c_k.w0 / 4 and B = sqrt(a) / 4 L^T C, Q = L L^T.
class EllipsoidMaster {
 public:
  EllipsoidMaster(const EllipsoidalSet& set, double step)
      : set_(set), chol_(set.shape.llt().matrixL()), step_(step) {}

  void add_column(const Vector& c) {
    const auto k = alpha_.size();
    alpha_.conservativeResize(k + 1);
    alpha_(k) = 0.25 * set_.center.dot(c);
    const Vector col = 0.25 * std::sqrt(set_.radius) * (chol_.transpose() * c);
    b_.conservativeResize(col.size(), k + 1);
    b_.col(k) = col;
    lambda_.conservativeResize(k + 1);
    lambda_(k) = k == 0 ? 1.0 : 0.0;
  }

  MasterResult solve() {
    const auto k = alpha_.size();
    double lipschitz = 1.0 / std::max(step_, 1e-12);
    Vector x = project_simplex(lambda_);
    Vector y = x;
    double fx = value(x);
    double t = 1.0;
    for (int it = 0; it < 20000; ++it) {
      const Vector g = gradient(y);
      const double fy = value(y);
      Vector next;
      double fnext = 0.0;
      for (int bt = 0; bt < 60; ++bt) {
        next = project_simplex(y + g / lipschitz);
        fnext = value(next);
        const Vector d = next - y;
        if (fnext >= fy + g.dot(d) - 0.5 * lipschitz * d.squaredNorm() - 1e-15) break;
        lipschitz *= 2.0;
      }
      if (fnext < fx) {
        // Momentum overshoot: restart from the last accepted point.
        y = x;
        t = 1.0;
        continue;
      }
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      y = next + ((t - 1.0) / t_next) * (next - x);
      x = next;
      fx = fnext;
      t = t_next;
      lipschitz *= 0.95;
      if (it % 10 == 9 && dual_bound(x) - fx <= 1e-12 * std::max(1.0, std::abs(fx))) break;
    }
    lambda_ = x;
    MasterResult out;
    out.hull_weights = x;
    out.value = fx;
    out.weights = to_weights(minimizer(x));
    (void)k;
    return out;
  }

 private:
  double value(const Vector& lambda) const { return alpha_.dot(lambda) - (b_ * lambda).norm(); }

  Vector gradient(const Vector& lambda) const {
    const Vector bl = b_ * lambda;
    const double norm = bl.norm();
    if (norm <= 0.0) return alpha_;
    return alpha_ - b_.transpose() * bl / norm;
  }

  // z(lambda) on the unit ball; max_k alpha_k + b_k.z bounds the master above.
  Vector ball_point(const Vector& lambda) const {
    const Vector bl = b_ * lambda;
    const double norm = bl.norm();
    return norm > 0.0 ? Vector(-bl / norm) : Vector::Zero(bl.size());
  }

  double dual_bound(const Vector& lambda) const {
    return (alpha_ + b_.transpose() * ball_point(lambda)).maxCoeff();
  }

  Vector minimizer(const Vector& lambda) const {
    return set_.center + std::sqrt(set_.radius) * (chol_ * ball_point(lambda));
  }

  const EllipsoidalSet& set_;
  DenseMatrix chol_;
  double step_;
  Vector alpha_;
  DenseMatrix b_;
  Vector lambda_;
};

WeightAssignment starting_weights(const UncertaintySpec& spec) {
  switch (spec.kind()) {
    case SetKind::kSingleton:
      return std::get<SingletonSet>(spec.set).weights;
    case SetKind::kPolyhedral: {
      std::vector<double> ones(spec.dimension(), 1.0);
      return worst_case_weights(spec, ones).weights;
    }
    case SetKind::kEllipsoidal: {
      const auto& c = std::get<EllipsoidalSet>(spec.set).center;
      return to_weights(c);
    }
    case SetKind::kWasserstein: {
      const auto& set = std::get<WassersteinSet>(spec.set);
      WeightAssignment mean(spec.dimension(), 0.0);
      for (std::size_t i = 0; i < set.support.size(); ++i) {
        for (std::size_t e = 0; e < mean.size(); ++e) {
          mean[e] += set.empirical(static_cast<Eigen::Index>(i)) * set.support[i][e];
        }
      }
      return mean;
    }
  }
  return {};
}

void fill_inner(const Instance& inst, const UncertaintySpec& spec, SaddleSolution& sol) {
  const auto inner = inner_at(inst, spec, sol.factor);
  sol.worst = inner.weights;
  sol.worst_probabilities = inner.probabilities;
  sol.value = inner.value;
  sol.report.value = inner.value;
}

}  // namespace

InnerSolution inner_at(const Instance& inst, const UncertaintySpec& spec, const GramFactor& u) {
  return worst_case_weights(spec, relaxed_coefficients(inst, u));
}

SaddleSolution solve_robust(const Instance& inst, const UncertaintySpec& spec,
                            const SolverConfig& config) {
  require_valid(spec, inst);
  const SdpOptions sdp = config.sdp_options();
  SaddleSolution sol;

  if (spec.kind() == SetKind::kSingleton) {
    auto best = maximize_on_elliptope(relaxed_objective(inst, std::get<SingletonSet>(spec.set).weights), sdp);
    sol.factor = std::move(best.factor);
    sol.report = best.report;
    fill_inner(inst, spec, sol);
    sol.upper_bound = sol.value;
    return sol;
  }

  std::vector<Vector> columns;
  std::vector<GramFactor> factors;
  std::unique_ptr<EllipsoidMaster> smooth;
  if (spec.kind() == SetKind::kEllipsoidal) {
    smooth = std::make_unique<EllipsoidMaster>(std::get<EllipsoidalSet>(spec.set), config.step);
  }

  WeightAssignment weights = starting_weights(spec);
  double upper = std::numeric_limits<double>::infinity();
  double lower = -std::numeric_limits<double>::infinity();
  Vector hull;
  bool responses_converged = true;
  int rounds = 0;
  bool converged = false;
  const GramFactor* warm = nullptr;
  while (rounds < config.max_iter) {
    ++rounds;
    SdpOptions opts = sdp;
    opts.seed = sdp.seed + static_cast<std::uint64_t>(rounds - 1);
    if (warm != nullptr) opts.restarts = std::min(opts.restarts, 2);
    auto response = maximize_on_elliptope(relaxed_objective(inst, weights), opts, warm);
    responses_converged = responses_converged && response.report.converged;
    upper = std::min(upper, response.report.value);
    columns.push_back(to_vector(relaxed_coefficients(inst, response.factor)));
    factors.push_back(std::move(response.factor));
    warm = &factors.back();

    MasterResult master;
    if (smooth) {
      smooth->add_column(columns.back());
      master = smooth->solve();
    } else {
      master = lp_master(spec, columns);
    }
    lower = master.value;
    hull = master.hull_weights;
    weights = master.weights;
    if (upper - lower <= config.gap_tol * std::max(1.0, std::abs(upper))) {
      converged = true;
      break;
    }
  }

  const int size = inst.vector_count();
  DenseMatrix ybar = DenseMatrix::Zero(size, size);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (hull(static_cast<Eigen::Index>(k)) > 0.0) {
      ybar += hull(static_cast<Eigen::Index>(k)) * factors[k].gram();
    }
  }
  ybar = 0.5 * (ybar + ybar.transpose());
  ybar.diagonal().setOnes();
  sol.factor = cholesky_gram(ybar, 1e-8);
  fill_inner(inst, spec, sol);
  sol.upper_bound = upper;
  sol.report.iterations = rounds;
  sol.report.residual = upper - std::min(lower, sol.value);
  sol.report.converged = converged && responses_converged;
  return sol;
}

SaddleSolution solve_dro(const Instance& inst, const UncertaintySpec& spec,
                         const SolverConfig& config) {
  if (spec.kind() != SetKind::kWasserstein) {
    throw DomainError("solve_dro needs a Wasserstein ambiguity set");
  }
  return solve_robust(inst, spec, config);
}

double dual_reformulated_value(const Instance& inst, const UncertaintySpec& spec,
                               const GramFactor& u) {
  if (spec.kind() != SetKind::kPolyhedral) {
    throw DomainError("dual_reformulated_value needs a polyhedral set");
  }
  return dual_polyhedral_value(std::get<PolyhedralSet>(spec.set), relaxed_coefficients(inst, u));
}

double ellipsoid_reformulated_value(const Instance& inst, const UncertaintySpec& spec,
                                    const GramFactor& u) {
  if (spec.kind() != SetKind::kEllipsoidal) {
    throw DomainError("ellipsoid_reformulated_value needs an ellipsoidal set");
  }
  return ellipsoid_closed_form_value(std::get<EllipsoidalSet>(spec.set),
                                     relaxed_coefficients(inst, u));
}

}  // namespace robustcut
