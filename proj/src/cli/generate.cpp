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

#include "cli/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "robustcut/errors.hpp"
#include "robustcut/rng.hpp"

namespace robustcut::cli {

namespace {

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

double random_weight(Rng& rng) { return round3(rng.uniform(0.5, 1.5)); }

void require_size(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw DomainError(std::string(what) + " needs n >= " + std::to_string(minimum) + " (got " +
                      std::to_string(n) + ")");
  }
}

void require_width(double width) {
  if (!(width >= 0.0 && width <= 1.0)) throw DomainError("width must lie in [0, 1]");
}

}  // namespace

Instance make_cycle(int n) {
  require_size(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Instance::maxcut(n, std::move(edges));
}

Instance make_gnp(int n, double p, std::uint64_t seed) {
  require_size(n, 2, "gnp");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool keep = rng.uniform() < p;
      const double w = random_weight(rng);
      if (keep) edges.push_back({i, j, w});
    }
  }
  return Instance::maxcut(n, std::move(edges));
}

Instance make_tournament(int n, std::uint64_t seed) {
  require_size(n, 2, "tournament");
  Rng rng(seed);
  std::vector<Edge> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool forward = rng.uniform() < 0.5;
      const double w = random_weight(rng);
      arcs.push_back(forward ? Edge{i, j, w} : Edge{j, i, w});
    }
  }
  return Instance::dicut(n, std::move(arcs));
}

Instance make_allequal(int n, int k, int m, std::uint64_t seed) {
  if (k < 2) throw DomainError("allequal arity k must be >= 2");
  require_size(n, k, "allequal");
  if (m < 1) throw DomainError("allequal needs at least one clause");
  Rng rng(seed);
  std::vector<Clause> clauses;
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int c = 0; c < m; ++c) {
    std::iota(vars.begin(), vars.end(), 0);
    // Partial Fisher-Yates for k distinct variables.
    Clause clause;
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(vars[i], vars[j]);
      clause.literals.push_back({vars[i], rng.uniform() < 0.5});
    }
    clause.weight = random_weight(rng);
    clauses.push_back(std::move(clause));
  }
  return Instance::allequal(n, std::move(clauses));
}

UncertaintySpec make_singleton_spec(const Instance& inst) {
  return UncertaintySpec::singleton(inst.nominal_weights());
}

UncertaintySpec make_box_spec(const Instance& inst, double width) {
  require_width(width);
  const auto w = inst.nominal_weights();
  WeightAssignment lower(w.size());
  WeightAssignment upper(w.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    lower[e] = (1.0 - width) * w[e];
    upper[e] = (1.0 + width) * w[e];
  }
  return UncertaintySpec::box(lower, upper);
}

UncertaintySpec make_ellipsoid_spec(const Instance& inst, double width) {
  require_width(width);
  if (width <= 0.0) throw DomainError("ellipsoid width must be positive");
  const auto w = inst.nominal_weights();
  Vector center(static_cast<Eigen::Index>(w.size()));
  DenseMatrix shape = DenseMatrix::Zero(center.size(), center.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] <= 0.0) throw DomainError("ellipsoid generator needs positive nominal weights");
    center(static_cast<Eigen::Index>(e)) = w[e];
    shape(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(e)) = (width * w[e]) * (width * w[e]);
  }
  return UncertaintySpec::ellipsoidal(center, shape, 1.0);
}

UncertaintySpec make_wasserstein_spec(const Instance& inst, const SpecParams& params) {
  require_width(params.width);
  if (params.support < 1) throw DomainError("support size must be positive");
  if (!(params.radius >= 0.0)) throw DomainError("radius must be nonnegative");
  const auto w = inst.nominal_weights();
  Rng rng(params.seed);
  std::vector<WeightAssignment> support{w};
  for (int s = 1; s < params.support; ++s) {
    WeightAssignment point(w.size());
    for (std::size_t e = 0; e < w.size(); ++e) {
      point[e] = round3(w[e] * (1.0 + params.width * rng.uniform(-1.0, 1.0)));
    }
    support.push_back(std::move(point));
  }
  const Vector empirical = Vector::Constant(params.support, 1.0 / params.support);
  return UncertaintySpec::wasserstein_l1(std::move(support), empirical, params.radius);
}

}  // namespace robustcut::cli
