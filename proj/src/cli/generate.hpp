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

// Seeded generators for random instances and uncertainty sets.

#pragma once

#include <cstdint>

#include "robustcut/instances.hpp"
#include "robustcut/uncertainty.hpp"

namespace robustcut::cli {

/// Unit-weight cycle 1 - 2 - ... - n - 1.
Instance make_cycle(int n);

/// G(n, p) with weights uniform on [0.5, 1.5] rounded to three decimals.
Instance make_gnp(int n, double p, std::uint64_t seed);

/// Complete graph with one random orientation per pair.
Instance make_tournament(int n, std::uint64_t seed);

/// m clauses of k distinct variables with random negations.
Instance make_allequal(int n, int k, int m, std::uint64_t seed);

struct SpecParams {
  double width = 0.2;
  double radius = 0.1;
  int support = 3;
  std::uint64_t seed = 0;
};

/// The nominal weights as a single point.
UncertaintySpec make_singleton_spec(const Instance& inst);

/// Box between (1 - width) w and (1 + width) w around the nominal weights.
UncertaintySpec make_box_spec(const Instance& inst, double width);

/// Axis-aligned ellipsoid centered at the nominal weights with semi-axes
/// width * w_e (a = 1). Needs positive nominal weights.
UncertaintySpec make_ellipsoid_spec(const Instance& inst, double width);

/// The nominal weights plus support - 1 perturbations of relative size width,
/// uniform empirical distribution and the l1 metric.
UncertaintySpec make_wasserstein_spec(const Instance& inst, const SpecParams& params);

}  // namespace robustcut::cli
