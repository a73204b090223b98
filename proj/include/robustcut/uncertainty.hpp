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

// Uncertainty and ambiguity sets over the instance's weight coordinates and
// the exact inner minimizations
//
//     min_{w in set} c.w / 4
//
// where c comes from cut_coefficients (a rounded cut) or
// relaxed_coefficients (a relaxed solution).

#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "robustcut/instances.hpp"
#include "robustcut/numerics.hpp"

namespace robustcut {

class Rng;

struct SingletonSet {
  WeightAssignment weights;
};

/// {w : A w >= b}. Box sets keep their bounds for serialization.
struct PolyhedralSet {
  DenseMatrix A;
  Vector b;
  Vector box_lower;
  Vector box_upper;

  bool is_box() const { return box_lower.size() > 0; }
  static PolyhedralSet box(const Vector& lower, const Vector& upper);
};

/// {w : (w - center)^T Q^{-1} (w - center) <= a}.
struct EllipsoidalSet {
  Vector center;
  DenseMatrix shape;
  double radius = 1.0;
};

/// Distributions on a finite support within transport distance `radius`
/// of the empirical distribution.
struct WassersteinSet {
  std::vector<WeightAssignment> support;
  Vector empirical;
  double radius = 0.0;
  DenseMatrix metric;
  /// Metric was generated as the l1 distance between support points.
  bool l1_metric = false;

  static DenseMatrix l1_distances(const std::vector<WeightAssignment>& support);
};

enum class SetKind { kSingleton, kPolyhedral, kEllipsoidal, kWasserstein };

struct UncertaintySpec {
  std::variant<SingletonSet, PolyhedralSet, EllipsoidalSet, WassersteinSet> set;
  /// Permits negative weights (signed-weight analysis only).
  bool allow_signed = false;

  SetKind kind() const { return static_cast<SetKind>(set.index()); }
  std::size_t dimension() const;

  static UncertaintySpec singleton(WeightAssignment w);
  static UncertaintySpec box(const WeightAssignment& lower, const WeightAssignment& upper);
  static UncertaintySpec polyhedral(DenseMatrix a, Vector b);
  static UncertaintySpec ellipsoidal(Vector center, DenseMatrix shape, double radius);
  static UncertaintySpec wasserstein(std::vector<WeightAssignment> support, Vector empirical,
                                     double radius, DenseMatrix metric);
  /// Wasserstein set with the l1 metric between support points.
  static UncertaintySpec wasserstein_l1(std::vector<WeightAssignment> support, Vector empirical,
                                        double radius);
};

std::string_view to_string(SetKind kind);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks dimensions, nonemptiness, boundedness and nonnegativity.
ValidationReport validate_set(const UncertaintySpec& spec, const Instance& inst);
ValidationReport validate_set(const UncertaintySpec& spec, std::size_t dimension);

/// Throws DomainError carrying the report summary when validation fails.
void require_valid(const UncertaintySpec& spec, const Instance& inst);

struct InnerSolution {
  WeightAssignment weights;
  double value = 0.0;
  /// Worst distribution over the support (Wasserstein sets only).
  std::vector<double> probabilities;
};

/// Exact minimizer of c.w / 4 over the set. Wasserstein sets return the
/// mean weights of the worst distribution.
InnerSolution worst_case_weights(const UncertaintySpec& spec, std::span<const double> c);

/// Worst distribution of a finite-support Wasserstein ball (transport LP).
InnerSolution worst_case_mean(const WassersteinSet& set, std::span<const double> c);

/// Optimal value of max b.p s.t. A^T p = c / 4, p >= 0.
double dual_polyhedral_value(const PolyhedralSet& set, std::span<const double> c);

/// Closed-form ellipsoidal value c.w0 / 4 - sqrt(a) / 4 |Q^{1/2} c| via the
/// matrix square root; an independent route to the same number as
/// worst_case_weights.
double ellipsoid_closed_form_value(const EllipsoidalSet& set, std::span<const double> c);

/// Random feasible point (and distribution, for Wasserstein sets).
InnerSolution sample_feasible(const UncertaintySpec& spec, Rng& rng);

UncertaintySpec parse_spec(std::string_view text);
UncertaintySpec load_spec(const std::string& path);
std::string spec_to_json(const UncertaintySpec& spec);

}  // namespace robustcut
