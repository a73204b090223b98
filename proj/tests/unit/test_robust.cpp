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

#include <doctest.h>

#include <cmath>

#include "robustcut/errors.hpp"
#include "robustcut/rng.hpp"
#include "robustcut/robust.hpp"

using namespace robustcut;

namespace {

Instance triangle() { return Instance::maxcut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

// Convex hull of the two scenarios (1, 1, 0) and (0, 1, 1).
UncertaintySpec two_scenarios() {
  DenseMatrix a(6, 3);
  a << 1, 0, 1, -1, 0, -1, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1;
  Vector b(6);
  b << 1, -1, 1, -1, 0, 0;
  return UncertaintySpec::polyhedral(a, b);
}

std::vector<int> signs_of(unsigned mask, int n) {
  std::vector<int> y(n);
  for (int i = 0; i < n; ++i) y[i] = (mask >> i) & 1U ? -1 : 1;
  return y;
}

// Robust optimum over a finite scenario list (the min of a linear function
// over a hull is attained at a scenario).
double scenario_max_min(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::vector<double>>& scenarios) {
  double best = -1.0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const auto y = signs_of(mask, n);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& w : scenarios) {
      double v = 0.0;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (y[edges[e].first] != y[edges[e].second]) v += w[e];
      }
      worst = std::min(worst, v);
    }
    best = std::max(best, worst);
  }
  return best;
}

// DRO optimum for two support points, l1 metric: enumerate cuts and the mass
// moved between the points.
double two_point_dro(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<double>& s1,
                     const std::vector<double>& s2, double radius) {
  double d = 0.0;
  for (std::size_t e = 0; e < s1.size(); ++e) d += std::abs(s1[e] - s2[e]);
  double best = -1.0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const auto y = signs_of(mask, n);
    double v1 = 0.0;
    double v2 = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (y[edges[e].first] != y[edges[e].second]) {
        v1 += s1[e];
        v2 += s2[e];
      }
    }
    // Linear in the moved mass delta, so an endpoint of |delta| <= min(1/2, r/d) is worst.
    const double reach = d > 0.0 ? std::min(0.5, radius / d) : 0.5;
    double worst = std::numeric_limits<double>::infinity();
    for (double delta : {-reach, reach}) worst = std::min(worst, (0.5 + delta) * v1 + (0.5 - delta) * v2);
    best = std::max(best, worst);
  }
  return best;
}

}  // namespace

TEST_CASE("singleton reduces to the nominal solve") {
  const auto inst = triangle();
  const auto sol = solve_robust(inst, UncertaintySpec::singleton(inst.nominal_weights()));
  const auto nominal = solve_elliptope_max(inst, inst.nominal_weights());
  CHECK(std::abs(sol.value - nominal.report.value) < 1e-6);
  CHECK(sol.value == doctest::Approx(2.25));
  CHECK(sol.report.converged);
}

TEST_CASE("two-scenario triangle") {
  const auto inst = triangle();
  const auto sol = solve_robust(inst, two_scenarios());
  const double robust_opt = scenario_max_min(3, {{0, 1}, {1, 2}, {0, 2}}, {{1, 1, 0}, {0, 1, 1}});
  CHECK(robust_opt == 1.0);
  CHECK(sol.value >= robust_opt);
  CHECK(sol.report.converged);
  CHECK(sol.upper_bound - sol.value <= 1e-6 * std::max(1.0, sol.upper_bound) + 1e-9);
  // The worst case lies in the hull.
  CHECK(sol.worst[0] + sol.worst[2] == doctest::Approx(1.0));
  CHECK(sol.worst[1] == doctest::Approx(1.0));
}

TEST_CASE("zero-radius wasserstein equals the nominal solve at the mean") {
  const auto inst = triangle();
  Vector p0(2);
  p0 << 0.5, 0.5;
  const auto spec = UncertaintySpec::wasserstein_l1({{1, 2, 0.5}, {3, 0, 1.5}}, p0, 0.0);
  const auto sol = solve_robust(inst, spec);
  const auto nominal = solve_elliptope_max(inst, {2.0, 1.0, 1.0});
  CHECK(std::abs(sol.value - nominal.report.value) < 1e-6);
  const auto dro = solve_dro(inst, spec);
  CHECK(std::abs(dro.value - nominal.report.value) < 1e-6);
  CHECK(dro.worst_probabilities[0] == doctest::Approx(0.5));
}

TEST_CASE("dro: large radius with the zero point") {
  const auto inst = triangle();
  const auto spec = UncertaintySpec::wasserstein_l1({{1, 1, 1}, {0, 0, 0}}, Vector::Constant(2, 0.5), 10.0);
  const auto sol = solve_dro(inst, spec);
  CHECK(std::abs(sol.value) < 1e-9);
  CHECK(sol.worst_probabilities[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(solve_dro(inst, UncertaintySpec::singleton({1, 1, 1})), DomainError);
}

TEST_CASE("dro: 2-point triangle matches the enumeration oracle") {
  const auto inst = triangle();
  const std::vector<double> s1{1, 1, 0};
  const std::vector<double> s2{2, 2, 0};
  const auto spec = UncertaintySpec::wasserstein_l1({s1, s2}, Vector::Constant(2, 0.5), 0.5);
  const auto sol = solve_dro(inst, spec);
  const double oracle = two_point_dro(3, {{0, 1}, {1, 2}, {0, 2}}, s1, s2, 0.5);
  CHECK(oracle == doctest::Approx(2.5));
  CHECK(std::abs(sol.value - oracle) < 1e-4);
  CHECK(sol.worst_probabilities[0] == doctest::Approx(0.75));
  CHECK(sol.worst_probabilities[1] == doctest::Approx(0.25));
}

TEST_CASE("dual reformulation at fixed factors") {
  const auto inst = triangle();
  Rng rng(2);
  DenseMatrix u(3, 3);
  for (int i = 0; i < 9; ++i) u.data()[i] = rng.normal();
  const GramFactor f(u);
  const auto box = UncertaintySpec::box({0.5, 0.5, 0.5}, {1, 2, 3});
  CHECK(std::abs(dual_reformulated_value(inst, box, f) - inner_at(inst, box, f).value) < 1e-8);
  // Singleton written as equalities.
  DenseMatrix a(6, 3);
  a << DenseMatrix::Identity(3, 3), -DenseMatrix::Identity(3, 3);
  Vector b(6);
  b << 1, 2, 3, -1, -2, -3;
  const auto eq = UncertaintySpec::polyhedral(a, b);
  const auto c = relaxed_coefficients(inst, f);
  CHECK(dual_reformulated_value(inst, eq, f) == doctest::Approx(0.25 * (c[0] * 1 + c[1] * 2 + c[2] * 3)));
  // Simplex set at the collapsed factor: c = 0.
  DenseMatrix s(5, 3);
  s << 1, 1, 1, -1, -1, -1, 1, 0, 0, 0, 1, 0, 0, 0, 1;
  Vector sb(5);
  sb << 1, -1, 0, 0, 0;
  CHECK(std::abs(dual_reformulated_value(inst, UncertaintySpec::polyhedral(s, sb), GramFactor::collapsed(3))) < 1e-12);
}

TEST_CASE("ellipsoid reformulation at fixed factors") {
  // Path 1-2-3 with u_1 ⟂ u_2 ⟂ u_3 gives c = (2, 2).
  const auto path = Instance::maxcut(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  DenseMatrix u(2, 3);
  u << 1, 0, 1, 0, 1, 0;
  const GramFactor f(u);
  Vector w0(2);
  w0 << 3, 3;
  const auto spec = UncertaintySpec::ellipsoidal(w0, 4.0 * DenseMatrix::Identity(2, 2), 1.0);
  const double closed = ellipsoid_reformulated_value(path, spec, f);
  CHECK(closed == doctest::Approx(3.0 - std::sqrt(2.0)));
  CHECK(std::abs(closed - inner_at(path, spec, f).value) < 1e-8);
  // Tiny a approaches the nominal value at w0.
  const auto tiny = UncertaintySpec::ellipsoidal(w0, 4.0 * DenseMatrix::Identity(2, 2), 1e-12);
  CHECK(ellipsoid_reformulated_value(path, tiny, f) == doctest::Approx(0.25 * (2 * 3 + 2 * 3)).epsilon(1e-5));
  CHECK(ellipsoid_reformulated_value(path, spec, GramFactor::collapsed(3)) == 0.0);
}

TEST_CASE("sandwich and consistency on random instances") {
  Rng rng(99);
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 4 + static_cast<int>(rng.below(3));
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.uniform() < 0.6) {
          edges.push_back({i, j, rng.uniform(0.5, 1.5)});
          pairs.push_back({i, j});
        }
      }
    }
    if (edges.empty()) continue;
    const auto inst = Instance::maxcut(n, edges);
    const auto w = inst.nominal_weights();
    // Two scenarios: nominal and a random perturbation; the hull as a polytope.
    std::vector<double> alt(w.size());
    for (std::size_t e = 0; e < w.size(); ++e) alt[e] = w[e] * rng.uniform(0.3, 1.7);
    const int m = static_cast<int>(w.size());
    // w = t w_nom + (1 - t) alt, t in [0, 1], written with an extra coordinate eliminated:
    // use the box hull instead, whose vertices are all scenario combinations.
    std::vector<double> lo(m);
    std::vector<double> hi(m);
    for (int e = 0; e < m; ++e) {
      lo[e] = std::min(w[e], alt[e]);
      hi[e] = std::max(w[e], alt[e]);
    }
    const auto box = UncertaintySpec::box(lo, hi);
    const auto sol = solve_robust(inst, box);
    CHECK(sol.value >= scenario_max_min(n, pairs, {lo}) - 1e-9);
    CHECK(std::abs(sol.value - inner_at(inst, box, sol.factor).value) < 1e-6);
    CHECK(std::abs(sol.value - dual_reformulated_value(inst, box, sol.factor)) < 1e-6);
    // Wider box: value cannot increase.
    std::vector<double> lo2(lo);
    for (auto& x : lo2) x *= 0.8;
    const auto wider = solve_robust(inst, UncertaintySpec::box(lo2, hi));
    CHECK(wider.value <= sol.value + 2e-6 * std::max(1.0, sol.value));

    const auto dro_spec = UncertaintySpec::wasserstein_l1({w, alt}, Vector::Constant(2, 0.5), 0.3);
    const auto dro = solve_dro(inst, dro_spec);
    const double dro_opt = two_point_dro(n, pairs, w, alt, 0.3);
    CHECK(dro.value >= dro_opt - 1e-6);
    CHECK(dro.report.converged);
  }
}

TEST_CASE("ellipsoidal saddle: gap closes and value bounds the scenario optimum") {
  Rng rng(5);
  for (int rep = 0; rep < 8; ++rep) {
    const int n = 5 + static_cast<int>(rng.below(3));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.uniform() < 0.5) edges.push_back({i, j, rng.uniform(0.5, 1.5)});
      }
    }
    if (edges.empty()) continue;
    const auto inst = Instance::maxcut(n, edges);
    const auto w = inst.nominal_weights();
    const int m = static_cast<int>(w.size());
    Vector center = Vector::Map(w.data(), m);
    DenseMatrix q = DenseMatrix::Zero(m, m);
    for (int e = 0; e < m; ++e) q(e, e) = 0.09 * w[e] * w[e];
    const auto spec = UncertaintySpec::ellipsoidal(center, q, 1.0);
    const auto sol = solve_robust(inst, spec);
    CHECK(sol.report.converged);
    CHECK(sol.upper_bound - sol.value <= 1e-6 * std::max(1.0, sol.upper_bound) + 1e-8);
    CHECK(std::abs(sol.value - ellipsoid_reformulated_value(inst, spec, sol.factor)) < 1e-8);
    const Vector d = Vector::Map(sol.worst.data(), m) - center;
    CHECK(d.dot(q.inverse() * d) == doctest::Approx(1.0));
  }
}

TEST_CASE("dicut and allequal saddles") {
  const auto d = Instance::dicut(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}, {0, 2, 0.5}});
  const auto dbox = UncertaintySpec::box({0.5, 0.5, 0.5, 0.5, 0.2}, {1.5, 1.5, 1.5, 1.5, 1.0});
  const auto ds = solve_robust(d, dbox);
  CHECK(ds.report.converged);
  CHECK(ds.factor.size() == 5);
  // Best directed cut at the lower corner: 1 -> 2 and 3 -> 4 (y = +,-,+,-): 0.5 + 0.5.
  CHECK(ds.value >= 1.0 - 1e-9);
  const auto a = Instance::allequal(4, {{{{0, false}, {1, false}, {2, true}}, 1.0},
                                        {{{1, false}, {2, false}, {3, false}}, 1.0},
                                        {{{0, true}, {2, false}, {3, true}}, 1.0}});
  const auto abox = UncertaintySpec::box({0.5, 0.5, 0.5}, {1.0, 1.0, 1.0});
  const auto as = solve_robust(a, abox);
  CHECK(as.report.converged);
  // Clauses one and two conflict on x_2, x_3; at most two hold, worth 1.0 at the lower corner.
  CHECK(as.value >= 1.0 - 1e-9);
}

TEST_CASE("iteration cap reports non-convergence") {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, 1.0});
  const auto c5 = Instance::maxcut(5, edges);
  SolverConfig cfg;
  cfg.max_iter = 1;
  const auto sol = solve_robust(c5, UncertaintySpec::singleton(c5.nominal_weights()), cfg);
  CHECK_FALSE(sol.report.converged);
}
