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
#include "robustcut/rng.hpp"
#include "robustcut/rounding.hpp"

using namespace robustcut;

namespace {

constexpr double kPi = std::numbers::pi;

GramFactor factor_from(std::initializer_list<std::initializer_list<double>> cols) {
  const int n = static_cast<int>(cols.size());
  const int r = static_cast<int>(cols.begin()->size());
  DenseMatrix u(r, n);
  int j = 0;
  for (const auto& col : cols) {
    int i = 0;
    for (double x : col) u(i++, j) = x;
    ++j;
  }
  return GramFactor(u);
}

Vector unit(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) v(i++) = x;
  return v.normalized();
}

}  // namespace

TEST_CASE("hyperplane rounding basics") {
  const auto same = GramFactor::collapsed(4, 3);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto y = hyperplane_round(same, RoundConfig{s, 1, RoundScheme::kUniform});
    for (std::size_t i = 1; i < y.size(); ++i) CHECK(y[i] == y[0]);
  }
  const auto anti = factor_from({{1, 0}, {-1, 0}});
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto y = hyperplane_round(anti, RoundConfig{s, 1, RoundScheme::kUniform});
    CHECK(y[1] == -y[0]);
  }
  // Determinism.
  const auto f = factor_from({{1, 0, 0}, {0, 1, 0}, {0.6, 0.8, 0}});
  CHECK(hyperplane_round(f, RoundConfig{7, 1, RoundScheme::kUniform}) ==
        hyperplane_round(f, RoundConfig{7, 1, RoundScheme::kUniform}));
  // Ties resolve to +1.
  Vector r(2);
  r << 0, 1;
  CHECK(hyperplane_round(anti, r)[0] == 1);
  CHECK(hyperplane_round(anti, r)[1] == 1);
}

TEST_CASE("orthogonal pair disagrees half the time") {
  const auto f = factor_from({{1, 0}, {0, 1}});
  const int trials = 100000;
  int disagree = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(1, static_cast<std::uint64_t>(t));
    const auto y = hyperplane_round(f, rng);
    disagree += y[0] != y[1];
  }
  const double p = 0.5;
  const double sigma = std::sqrt(p * (1 - p) / trials);
  CHECK(std::abs(static_cast<double>(disagree) / trials - p) <= 3 * sigma);
}

TEST_CASE("expected_cut_exact examples") {
  const auto k2 = Instance::maxcut(2, {{0, 1, 1.0}});
  CHECK(expected_cut_exact(k2, factor_from({{1, 0}, {-1, 0}}), {1.0}) == doctest::Approx(1.0));
  CHECK(expected_cut_exact(k2, factor_from({{1, 0}, {0, 1}}), {1.0}) == doctest::Approx(0.5));
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, 1.0});
  const auto c5 = Instance::maxcut(5, edges);
  DenseMatrix u(2, 5);
  for (int i = 0; i < 5; ++i) {
    u(0, i) = std::cos(4 * kPi * i / 5);
    u(1, i) = std::sin(4 * kPi * i / 5);
  }
  // Each edge spans 4 pi / 5, or 4 / 5 of a half turn.
  CHECK(expected_cut_exact(c5, GramFactor(u), c5.nominal_weights()) == doctest::Approx(5 * 0.8));
  const auto clauses = Instance::allequal(2, {{{{0, false}, {1, false}}, 1.0}});
  CHECK_THROWS_AS(expected_cut_exact(clauses, GramFactor::collapsed(2), {1.0}), DomainError);
}

TEST_CASE("alpha_ratio values") {
  CHECK(alpha_ratio(-1.0) == doctest::Approx(1.0));
  CHECK(alpha_ratio(0.0) == doctest::Approx(1.0));
  CHECK(std::isinf(alpha_ratio(1.0)));
  CHECK_THROWS_AS(alpha_ratio(1.5), DomainError);
  CHECK_THROWS_AS(alpha_ratio(std::nan("")), DomainError);
  double argmin = 0.0;
  const double min = testref::golden_min([](double t) { return alpha_ratio(t); }, -1.0, 0.0, &argmin);
  CHECK(min == doctest::Approx(0.87856).epsilon(1e-5));
  CHECK(argmin == doctest::Approx(-0.689).epsilon(1e-3));
  CHECK(min > 0.878);
}

TEST_CASE("pointwise alpha inequality on a grid") {
  for (int i = 0; i <= 20000; ++i) {
    const double t = -1.0 + 2.0 * i / 20000.0;
    CHECK(std::acos(t) / kPi >= 0.878 * (1.0 - t) / 2.0);
  }
}

TEST_CASE("triple probability examples") {
  const Vector e1 = unit({1, 0, 0});
  const Vector e2 = unit({0, 1, 0});
  const Vector e3 = unit({0, 0, 1});
  CHECK(dicut_triple_prob(e1, e1, e1) == doctest::Approx(1.0));
  CHECK(dicut_triple_prob(e1, e2, e3) == doctest::Approx(0.25));
  CHECK(dicut_triple_prob(e1, -e1, e2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(dicut_triple_prob(2.0 * e1, e2, e3), DomainError);
}

TEST_CASE("triple probability: lower bound and Monte-Carlo agreement") {
  Rng rng(12);
  for (int rep = 0; rep < 2000; ++rep) {
    const Vector a = uniform_direction(3, rng);
    const Vector b = uniform_direction(3, rng);
    const Vector c = uniform_direction(3, rng);
    CHECK(dicut_triple_prob(a, b, c) >= 0.796 / 4.0 * (1 + a.dot(b) + a.dot(c) + b.dot(c)) - 1e-12);
  }
  for (int rep = 0; rep < 5; ++rep) {
    const Vector a = uniform_direction(3, rng);
    const Vector b = uniform_direction(3, rng);
    const Vector c = uniform_direction(3, rng);
    const int trials = 100000;
    int same = 0;
    for (int t = 0; t < trials; ++t) {
      Rng draw(40 + rep, static_cast<std::uint64_t>(t));
      const Vector r = uniform_direction(3, draw);
      const bool sa = a.dot(r) >= 0;
      same += sa == (b.dot(r) >= 0) && sa == (c.dot(r) >= 0);
    }
    const double p = dicut_triple_prob(a, b, c);
    CHECK(std::abs(static_cast<double>(same) / trials - p) <= 3 * std::sqrt(p * (1 - p) / trials) + 1e-12);
  }
}

TEST_CASE("ratio search") {
  const auto grid = feasible_pair_grid(200, 3);
  CHECK(grid.size() == 200);
  for (const auto& p : grid) CHECK(dicut_pair_feasible(p));
  const auto res = dicut_biased_ratio_search(grid, uniform_pair_probability(), RoundConfig{5, 4000, RoundScheme::kDicutUniform});
  CHECK(res.ratio >= 0.796 - 3 * res.std_error);
  // u_i = u_0, u_j = -u_0: the arc is always cut and the weight is 1.
  const Vector e1 = unit({1, 0, 0});
  const std::vector<FeasiblePair> single{{e1, e1, -e1}};
  CHECK(dicut_pair_weight(single[0]) == doctest::Approx(1.0));
  const auto one = dicut_biased_ratio_search(single, uniform_pair_probability(), RoundConfig{1, 1000, RoundScheme::kDicutUniform});
  CHECK(one.ratio == doctest::Approx(dicut_triple_prob(e1, e1, e1)));
  // Zero denominators are skipped.
  const std::vector<FeasiblePair> with_zero{{e1, e1, e1}, {e1, e1, -e1}};
  const auto skip = dicut_biased_ratio_search(with_zero, uniform_pair_probability(), RoundConfig{1, 100, RoundScheme::kDicutUniform});
  CHECK(skip.evaluated == 1);
  CHECK(skip.argmin == 1);
  CHECK_THROWS_AS(dicut_biased_ratio_search({}, uniform_pair_probability(), RoundConfig{}), DomainError);
  CHECK_THROWS_AS(dicut_biased_ratio_search({with_zero[0]}, uniform_pair_probability(), RoundConfig{}), DomainError);
}

TEST_CASE("allequal rounding") {
  const Cut z({1, -1});
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(allequal_round(z, 2, RoundConfig{s, 1, RoundScheme::kAllEqualBiased}) == z);
  CHECK_THROWS_AS(allequal_round(z, 1, RoundConfig{}), DomainError);
  const Cut z8({1, -1, 1});
  const int trials = 100000;
  std::vector<int> plus(3, 0);
  for (int t = 0; t < trials; ++t) {
    Rng rng(3, static_cast<std::uint64_t>(t));
    const auto x = allequal_round(z8, 8, rng);
    for (int i = 0; i < 3; ++i) plus[i] += x[i] == 1;
  }
  for (int i = 0; i < 3; ++i) {
    const double p = (1.0 + std::sqrt(2.0 / 8.0) * z8[i]) / 2.0;
    CHECK(p == doctest::Approx(z8[i] == 1 ? 0.75 : 0.25));
    CHECK(std::abs(static_cast<double>(plus[i]) / trials - p) <= 3 * std::sqrt(p * (1 - p) / trials));
  }
}

TEST_CASE("sign rounding guarantee") {
  const auto f = factor_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto z = sign_round_psd(DenseMatrix::Identity(3, 3), f, RoundConfig{0, 4, RoundScheme::kSignPsd});
  CHECK(sign_quadratic(DenseMatrix::Identity(3, 3), z) == 3.0);
  const DenseMatrix ones = DenseMatrix::Ones(3, 3);
  const auto zc = sign_round_psd(ones, GramFactor::collapsed(3, 2), RoundConfig{0, 4, RoundScheme::kSignPsd});
  CHECK(sign_quadratic(ones, zc) == doctest::Approx(9.0));
  Rng rng(77);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(8));
    DenseMatrix b(n, n);
    for (int i = 0; i < n * n; ++i) b.data()[i] = rng.normal();
    const DenseMatrix a = b * b.transpose();
    DenseMatrix u(n, n);
    for (int i = 0; i < n * n; ++i) u.data()[i] = rng.normal();
    const GramFactor g(u);
    const auto zz = sign_round_psd(a, g, RoundConfig{static_cast<std::uint64_t>(rep), 8, RoundScheme::kSignPsd});
    CHECK(sign_quadratic(a, zz) >= 2.0 / kPi * a.cwiseProduct(g.gram()).sum() - 1e-9);
  }
  // An indefinite matrix can make the target unreachable.
  DenseMatrix bad(2, 2);
  bad << 0, -1, -1, 0;
  CHECK_THROWS_AS(sign_round_psd(-1e3 * DenseMatrix::Identity(2, 2) + bad, factor_from({{1, 0}, {0, 1}}),
                                 RoundConfig{0, 2, RoundScheme::kSignPsd}),
                  NumericError);
}

TEST_CASE("large-cut and negative-weight evaluators") {
  CHECK(large_cut_ratio(1.0) == doctest::Approx(1.0));
  CHECK(large_cut_ratio(0.5) == doctest::Approx(1.0));
  const double alpha = testref::golden_min([](double t) { return alpha_ratio(t); }, -1.0, 0.0);
  CHECK(large_cut_ratio(0.84458) == doctest::Approx(alpha).epsilon(1e-4));
  CHECK(large_cut_ratio(0.84458) == doctest::Approx(0.8786).epsilon(1e-4));
  CHECK_THROWS_AS(large_cut_ratio(0.0), DomainError);
  CHECK_THROWS_AS(large_cut_ratio(1.1), DomainError);
  CHECK(negative_weight_bound(1.5, -1.0, 0.5));
  CHECK(negative_weight_bound(0.0, 0.0, 0.0));
  CHECK_FALSE(negative_weight_bound(0.0, 0.0, 1.0));
  CHECK_THROWS_AS(negative_weight_bound(0.0, 0.5, 0.0), DomainError);
}

TEST_CASE("rounded cut values average to the exact expectation") {
  const auto inst = Instance::maxcut(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 0.5}, {0, 3, 1.5}, {0, 2, 1.0}});
  Rng rng(4);
  DenseMatrix u(3, 4);
  for (int i = 0; i < 12; ++i) u.data()[i] = rng.normal();
  const GramFactor f(u);
  const int trials = 50000;
  double sum = 0.0;
  double sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double v = cut_value(inst, round_trial(inst, f, 9, t), inst.nominal_weights());
    sum += v;
    sq += v * v;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - expected_cut_exact(inst, f, inst.nominal_weights())) <= 3 * se);
}

TEST_CASE("directed rounding expectation") {
  const auto d = Instance::dicut(3, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 0, 0.5}});
  Rng rng(6);
  DenseMatrix u(3, 4);
  for (int i = 0; i < 12; ++i) u.data()[i] = rng.normal();
  const GramFactor f(u);
  const int trials = 50000;
  double sum = 0.0;
  double sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double v = dicut_value(d, round_trial(d, f, 2, t), d.nominal_weights());
    sum += v;
    sq += v * v;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - expected_cut_exact(d, f, d.nominal_weights())) <= 3 * se);
}
