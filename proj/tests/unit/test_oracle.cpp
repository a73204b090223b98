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
#include <numbers>

#include "oracles.hpp"
#include "robustcut/errors.hpp"
#include "robustcut/oracle.hpp"
#include "robustcut/rng.hpp"
#include "robustcut/rounding.hpp"

using namespace robustcut;

namespace {

Instance triangle() { return Instance::maxcut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

UncertaintySpec two_scenarios() {
  DenseMatrix a(6, 3);
  a << 1, 0, 1, -1, 0, -1, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1;
  Vector b(6);
  b << 1, -1, 1, -1, 0, 0;
  return UncertaintySpec::polyhedral(a, b);
}

}  // namespace

TEST_CASE("brute force on small instances") {
  const auto k3 = triangle();
  const auto single = brute_force_robust(k3, UncertaintySpec::singleton({1, 1, 1}));
  CHECK(single.value == doctest::Approx(2.0));
  CHECK(single.enumerated == 4);
  CHECK(cut_value(k3, single.best_cut, {1, 1, 1}) == doctest::Approx(2.0));
  // Every cut of the triangle misses one edge; the adversary always finds a
  // scenario of weight one.
  CHECK(brute_force_robust(k3, two_scenarios()).value == doctest::Approx(1.0));

  const auto arc = Instance::dicut(2, {{0, 1, 1.0}});
  const auto d = brute_force_robust(arc, UncertaintySpec::singleton({1.0}));
  CHECK(d.value == doctest::Approx(1.0));
  CHECK(d.enumerated == 4);

  std::vector<Edge> big;
  for (int i = 0; i < 25; ++i) big.push_back({i, (i + 1) % 25, 1.0});
  const auto c25 = Instance::maxcut(25, big);
  CHECK_THROWS_AS(brute_force_robust(c25, UncertaintySpec::singleton(c25.nominal_weights())), DomainError);
}

TEST_CASE("brute force agrees with an independent enumeration") {
  Rng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + static_cast<int>(rng.below(6));
    std::vector<Edge> edges;
    std::vector<testref::Arc> ref;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.uniform() < 0.5) {
          const double w = 0.5 + rng.uniform();
          edges.push_back({i, j, w});
          ref.push_back({i, j, w});
        }
      }
    }
    if (edges.empty()) continue;
    const auto g = Instance::maxcut(n, edges);
    CHECK(brute_force_robust(g, UncertaintySpec::singleton(g.nominal_weights())).value ==
          doctest::Approx(testref::brute_max_cut(n, ref)));
    const auto d = Instance::dicut(n, edges);
    CHECK(brute_force_robust(d, UncertaintySpec::singleton(d.nominal_weights())).value ==
          doctest::Approx(testref::brute_max_dicut(n, ref)));
  }
}

TEST_CASE("Wasserstein with zero radius is the empirical mean") {
  const auto k3 = triangle();
  Vector p(2);
  p << 0.5, 0.5;
  const auto spec = UncertaintySpec::wasserstein_l1({{2, 1, 0}, {0, 1, 2}}, p, 0.0);
  // Mean weights (1, 1, 1): the triangle optimum is 2.
  CHECK(brute_force_robust(k3, spec).value == doctest::Approx(2.0));
}

TEST_CASE("Monte-Carlo expected cut") {
  const auto k2 = Instance::maxcut(2, {{0, 1, 1.0}});
  DenseMatrix anti(2, 2);
  anti << 1, -1, 0, 0;
  const auto a = mc_expected_cut(k2, GramFactor(anti), {1.0}, 1000, 1);
  CHECK(a.mean == doctest::Approx(1.0));
  CHECK(a.std_error == doctest::Approx(0.0));
  const auto o = mc_expected_cut(k2, GramFactor(DenseMatrix::Identity(2, 2)), {1.0}, 100000, 2);
  CHECK(std::abs(o.mean - 0.5) <= 3 * o.std_error);
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, 1.0});
  const auto c5 = Instance::maxcut(5, edges);
  DenseMatrix u(2, 5);
  for (int i = 0; i < 5; ++i) {
    u(0, i) = std::cos(4 * std::numbers::pi * i / 5);
    u(1, i) = std::sin(4 * std::numbers::pi * i / 5);
  }
  const auto c = mc_expected_cut(c5, GramFactor(u), c5.nominal_weights(), 100000, 3);
  CHECK(std::abs(c.mean - 4.0) <= 3 * c.std_error);
  CHECK_THROWS_AS(mc_expected_cut(k2, GramFactor(anti), {1.0}, 99, 1), DomainError);
}

TEST_CASE("sandwich certification") {
  const auto k3 = triangle();
  SolverConfig cfg;
  cfg.seed = 5;
  const auto s1 = UncertaintySpec::singleton({1, 1, 1});
  const auto sol1 = solve_robust(k3, s1, cfg);
  const auto r1 = certify_sandwich(k3, s1, sol1, round_trial(k3, sol1.factor, 5, 0));
  CHECK(r1.pass());
  CHECK(r1.val_rp == doctest::Approx(2.0));
  CHECK(r1.relaxed_value == doctest::Approx(2.25).epsilon(1e-6));

  const auto s2 = two_scenarios();
  const auto sol2 = solve_robust(k3, s2, cfg);
  const auto r2 = certify_sandwich(k3, s2, sol2, round_trial(k3, sol2.factor, 5, 0));
  for (const auto& f : r2.failures()) MESSAGE(f);
  CHECK(r2.pass());
  CHECK(r2.val_rp == doctest::Approx(1.0));

  const auto zero = UncertaintySpec::singleton({0, 0, 0});
  const auto sol0 = solve_robust(k3, zero, cfg);
  const auto r0 = certify_sandwich(k3, zero, sol0, Cut::all_plus(3));
  CHECK(r0.pass());
  CHECK(r0.val_rp == doctest::Approx(0.0));

  const auto arc = Instance::dicut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}});
  const auto sa = UncertaintySpec::singleton({1, 1, 1});
  const auto sola = solve_robust(arc, sa, cfg);
  const auto ra = certify_sandwich(arc, sa, sola, round_trial(arc, sola.factor, 5, 0));
  CHECK(ra.pass());
  CHECK(ra.val_rp == doctest::Approx(1.0));
  CHECK(ra.ratio_constant == doctest::Approx(0.796));
}

TEST_CASE("large-cut and allequal pipelines") {
  const auto k2 = Instance::maxcut(2, {{0, 1, 1.0}});
  const auto s = UncertaintySpec::singleton({1.0});
  const auto sol = solve_robust(k2, s);
  const auto lc = certify_large_cut(k2, s, sol, 1.0);
  CHECK(lc.a_tilde == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(lc.applicable);
  CHECK(lc.pass());

  const auto inst = Instance::allequal(3, {{{{0, false}, {1, false}}, 2.0}, {{{1, false}, {2, true}}, 3.0}});
  const auto sa = UncertaintySpec::singleton(inst.nominal_weights());
  const auto sol_ae = solve_robust(inst, sa);
  const auto rep = certify_allequal(inst, sa, sol_ae, 4000);
  CHECK(rep.pass());
  CHECK(rep.val_ae == doctest::Approx(5.0));
  const DenseMatrix a = allequal_matrix(inst, inst.nominal_weights());
  CHECK(a.rows() == 3);
  CHECK((a - a.transpose()).norm() == doctest::Approx(0.0));
}
