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

#include "robustcut/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "robustcut/errors.hpp"
#include "robustcut/rng.hpp"

namespace robustcut {

using nlohmann::json;

namespace {

constexpr double kSetTol = 1e-9;

Vector to_vector(std::span<const double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

WeightAssignment to_weights(const Vector& v) { return WeightAssignment(v.data(), v.data() + v.size()); }

void check_coefficients(std::size_t expected, std::span<const double> c) {
  if (c.size() != expected) {
    throw DimensionError("coefficient vector has " + std::to_string(c.size()) +
                         " entries, set has dimension " + std::to_string(expected));
  }
  for (double x : c) {
    if (!std::isfinite(x)) throw DomainError("coefficient vector has a non-finite entry");
  }
}

// min c.w / 4 over {A w >= b}, w free.
LpProblem polyhedral_lp(const PolyhedralSet& set, const Vector& c) {
  const int m = static_cast<int>(set.A.cols());
  LpProblem lp = LpProblem::with_shape(static_cast<int>(set.A.rows()), m);
  lp.c = 0.25 * c;
  lp.A = set.A;
  lp.b = set.b;
  lp.lower = Vector::Constant(m, -kInfinity);
  return lp;
}

}  // namespace

PolyhedralSet PolyhedralSet::box(const Vector& lower, const Vector& upper) {
  if (lower.size() != upper.size()) throw DimensionError("box: bound sizes differ");
  const int m = static_cast<int>(lower.size());
  PolyhedralSet set;
  set.A = DenseMatrix::Zero(2 * m, m);
  set.b = Vector(2 * m);
  for (int i = 0; i < m; ++i) {
    set.A(i, i) = 1.0;
    set.A(m + i, i) = -1.0;
    set.b(i) = lower(i);
    set.b(m + i) = -upper(i);
  }
  set.box_lower = lower;
  set.box_upper = upper;
  return set;
}

DenseMatrix WassersteinSet::l1_distances(const std::vector<WeightAssignment>& support) {
  const int s = static_cast<int>(support.size());
  DenseMatrix d = DenseMatrix::Zero(s, s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (support[i].size() != support[j].size()) {
        throw DimensionError("wasserstein: support points differ in dimension");
      }
      double dist = 0.0;
      for (std::size_t e = 0; e < support[i].size(); ++e) dist += std::abs(support[i][e] - support[j][e]);
      d(i, j) = dist;
    }
  }
  return d;
}

std::size_t UncertaintySpec::dimension() const {
  struct Visitor {
    std::size_t operator()(const SingletonSet& s) const { return s.weights.size(); }
    std::size_t operator()(const PolyhedralSet& s) const { return static_cast<std::size_t>(s.A.cols()); }
    std::size_t operator()(const EllipsoidalSet& s) const { return static_cast<std::size_t>(s.center.size()); }
    std::size_t operator()(const WassersteinSet& s) const {
      return s.support.empty() ? 0 : s.support.front().size();
    }
  };
  return std::visit(Visitor{}, set);
}

UncertaintySpec UncertaintySpec::singleton(WeightAssignment w) {
  return UncertaintySpec{SingletonSet{std::move(w)}};
}

UncertaintySpec UncertaintySpec::box(const WeightAssignment& lower, const WeightAssignment& upper) {
  return UncertaintySpec{PolyhedralSet::box(to_vector(lower), to_vector(upper))};
}

UncertaintySpec UncertaintySpec::polyhedral(DenseMatrix a, Vector b) {
  if (a.rows() != b.size()) throw DimensionError("polyhedral: A and b row counts differ");
  PolyhedralSet set;
  set.A = std::move(a);
  set.b = std::move(b);
  return UncertaintySpec{std::move(set)};
}

UncertaintySpec UncertaintySpec::ellipsoidal(Vector center, DenseMatrix shape, double radius) {
  return UncertaintySpec{EllipsoidalSet{std::move(center), std::move(shape), radius}};
}

UncertaintySpec UncertaintySpec::wasserstein(std::vector<WeightAssignment> support,
                                             Vector empirical, double radius, DenseMatrix metric) {
  WassersteinSet set;
  set.support = std::move(support);
  set.empirical = std::move(empirical);
  set.radius = radius;
  set.metric = std::move(metric);
  return UncertaintySpec{std::move(set)};
}

UncertaintySpec UncertaintySpec::wasserstein_l1(std::vector<WeightAssignment> support,
                                                Vector empirical, double radius) {
  auto metric = WassersteinSet::l1_distances(support);
  auto spec = wasserstein(std::move(support), std::move(empirical), radius, std::move(metric));
  std::get<WassersteinSet>(spec.set).l1_metric = true;
  return spec;
}

std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::kSingleton:
      return "singleton";
    case SetKind::kPolyhedral:
      return "polyhedral";
    case SetKind::kEllipsoidal:
      return "ellipsoidal";
    case SetKind::kWasserstein:
      return "wasserstein";
  }
  return "singleton";
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out.empty() ? "ok" : out;
}

namespace {

void validate_weights(const WeightAssignment& w, bool allow_signed, const std::string& what,
                      ValidationReport& report) {
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (!std::isfinite(w[e])) {
      report.violations.push_back(what + ": non-finite weight at " + std::to_string(e));
    } else if (!allow_signed && w[e] < 0.0) {
      report.violations.push_back(what + ": negative weight at " + std::to_string(e));
    }
  }
}

void validate_polyhedral(const PolyhedralSet& set, bool allow_signed, ValidationReport& report) {
  const int m = static_cast<int>(set.A.cols());
  if (set.A.rows() != set.b.size()) {
    report.violations.push_back("polyhedral: A and b row counts differ");
    return;
  }
  // Boxes answer every question from their bounds; the LP route below costs
  // 2m + 1 solves.
  if (set.is_box() && set.box_lower.size() == m && set.A.rows() == 2 * m &&
      set.b.head(m) == set.box_lower && set.b.tail(m) == -set.box_upper) {
    for (int i = 0; i < m; ++i) {
      if (set.box_lower(i) > set.box_upper(i)) {
        report.violations.push_back("polyhedral: empty set");
        return;
      }
    }
    bool unbounded = false;
    for (int i = 0; i < m; ++i) {
      if (!std::isfinite(set.box_lower(i)) || !std::isfinite(set.box_upper(i))) unbounded = true;
      if (!allow_signed && set.box_lower(i) < -kSetTol) {
        report.violations.push_back("polyhedral: negativity reachable, w[" + std::to_string(i) +
                                    "] can be " + std::to_string(set.box_lower(i)));
      }
    }
    if (unbounded) report.violations.push_back("polyhedral: unbounded set");
    return;
  }
  LpProblem lp = polyhedral_lp(set, Vector::Zero(m));
  try {
    simplex_solve(lp);
  } catch (const InfeasibleError&) {
    report.violations.push_back("polyhedral: empty set");
    return;
  }
  bool unbounded = false;
  for (int i = 0; i < m; ++i) {
    lp.c = Vector::Zero(m);
    lp.c(i) = 1.0;
    if (!allow_signed) {
      try {
        const auto low = simplex_solve(lp);
        if (low.x(i) < -kSetTol) {
          report.violations.push_back("polyhedral: negativity reachable, w[" + std::to_string(i) +
                                      "] can be " + std::to_string(low.x(i)));
        }
      } catch (const UnboundedError&) {
        report.violations.push_back("polyhedral: negativity reachable, w[" + std::to_string(i) +
                                    "] unbounded below");
      }
    }
    lp.c(i) = -1.0;
    if (!unbounded) {
      try {
        simplex_solve(lp);
      } catch (const UnboundedError&) {
        unbounded = true;
      }
    }
  }
  if (unbounded) report.violations.push_back("polyhedral: unbounded set");
}

void validate_ellipsoidal(const EllipsoidalSet& set, bool allow_signed, ValidationReport& report) {
  const auto m = set.center.size();
  if (set.shape.rows() != m || set.shape.cols() != m) {
    report.violations.push_back("ellipsoidal: Q must be " + std::to_string(m) + "x" + std::to_string(m));
    return;
  }
  if (!(set.radius > 0.0)) report.violations.push_back("ellipsoidal: a must be positive");
  if ((set.shape - set.shape.transpose()).cwiseAbs().maxCoeff() > kSetTol) {
    report.violations.push_back("ellipsoidal: Q is not symmetric");
    return;
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(set.shape);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0.0) {
    report.violations.push_back("ellipsoidal: Q is not positive definite");
    return;
  }
  if (allow_signed) return;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double low = set.center(i) - std::sqrt(std::max(set.radius, 0.0) * set.shape(i, i));
    if (low < -kSetTol) {
      report.violations.push_back("ellipsoidal: negativity reachable, w[" + std::to_string(i) +
                                  "] can be " + std::to_string(low));
    }
  }
}

void validate_wasserstein(const WassersteinSet& set, bool allow_signed, ValidationReport& report) {
  const int s = static_cast<int>(set.support.size());
  if (s == 0) {
    report.violations.push_back("wasserstein: empty support");
    return;
  }
  for (int i = 0; i < s; ++i) {
    if (set.support[i].size() != set.support.front().size()) {
      report.violations.push_back("wasserstein: support points differ in dimension");
      return;
    }
    validate_weights(set.support[i], allow_signed, "wasserstein support " + std::to_string(i), report);
  }
  if (set.empirical.size() != s) {
    report.violations.push_back("wasserstein: empirical distribution size differs from support");
    return;
  }
  if (set.empirical.minCoeff() < 0.0 || std::abs(set.empirical.sum() - 1.0) > kSetTol) {
    report.violations.push_back("wasserstein: empirical distribution is not a probability vector");
  }
  if (!(set.radius >= 0.0)) report.violations.push_back("wasserstein: radius must be >= 0");
  if (set.metric.rows() != s || set.metric.cols() != s) {
    report.violations.push_back("wasserstein: metric must be " + std::to_string(s) + "x" +
                                std::to_string(s));
    return;
  }
  for (int i = 0; i < s; ++i) {
    if (set.metric(i, i) != 0.0) report.violations.push_back("wasserstein: metric diagonal not zero");
    for (int j = 0; j < s; ++j) {
      if (set.metric(i, j) < 0.0) report.violations.push_back("wasserstein: negative distance");
      if (std::abs(set.metric(i, j) - set.metric(j, i)) > kSetTol) {
        report.violations.push_back("wasserstein: metric not symmetric");
        return;
      }
    }
  }
}

}  // namespace

ValidationReport validate_set(const UncertaintySpec& spec, std::size_t dimension) {
  ValidationReport report;
  if (spec.dimension() != dimension) {
    report.violations.push_back("set dimension " + std::to_string(spec.dimension()) +
                                " differs from the instance's " + std::to_string(dimension) +
                                " weights");
    return report;
  }
  switch (spec.kind()) {
    case SetKind::kSingleton:
      validate_weights(std::get<SingletonSet>(spec.set).weights, spec.allow_signed, "singleton", report);
      break;
    case SetKind::kPolyhedral:
      validate_polyhedral(std::get<PolyhedralSet>(spec.set), spec.allow_signed, report);
      break;
    case SetKind::kEllipsoidal:
      validate_ellipsoidal(std::get<EllipsoidalSet>(spec.set), spec.allow_signed, report);
      break;
    case SetKind::kWasserstein:
      validate_wasserstein(std::get<WassersteinSet>(spec.set), spec.allow_signed, report);
      break;
  }
  return report;
}

ValidationReport validate_set(const UncertaintySpec& spec, const Instance& inst) {
  if (spec.allow_signed && !inst.signed_weights()) {
    ValidationReport report;
    report.violations.push_back("signed set requires an instance flagged \"signed\"");
    return report;
  }
  return validate_set(spec, inst.weight_count());
}

void require_valid(const UncertaintySpec& spec, const Instance& inst) {
  const auto report = validate_set(spec, inst);
  if (!report.ok()) throw DomainError("invalid uncertainty set: " + report.summary());
}

InnerSolution worst_case_mean(const WassersteinSet& set, std::span<const double> c) {
  const int s = static_cast<int>(set.support.size());
  if (s == 0) throw DomainError("wasserstein: empty support");
  check_coefficients(set.support.front().size(), c);
  std::vector<double> cost(s);
  for (int i = 0; i < s; ++i) {
    double total = 0.0;
    for (std::size_t e = 0; e < c.size(); ++e) total += 0.25 * c[e] * set.support[i][e];
    cost[i] = total;
  }

  // K(i, j): mass moved from empirical point j to support point i, stored
  // at column i * s + j.
  LpProblem lp = LpProblem::with_shape(s + 1, s * s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const int col = i * s + j;
      lp.c(col) = cost[i];
      lp.A(j, col) = 1.0;
      lp.A(s, col) = -set.metric(i, j);
    }
  }
  for (int j = 0; j < s; ++j) {
    lp.b(j) = set.empirical(j);
    lp.sense[j] = RowSense::kEqual;
  }
  lp.b(s) = -set.radius;
  const auto sol = simplex_solve(lp);

  InnerSolution out;
  out.probabilities.assign(s, 0.0);
  out.weights.assign(c.size(), 0.0);
  for (int i = 0; i < s; ++i) {
    double p = 0.0;
    for (int j = 0; j < s; ++j) p += sol.x(i * s + j);
    out.probabilities[i] = p;
    for (std::size_t e = 0; e < c.size(); ++e) out.weights[e] += p * set.support[i][e];
  }
  out.value = sol.value;
  return out;
}

InnerSolution worst_case_weights(const UncertaintySpec& spec, std::span<const double> c) {
  check_coefficients(spec.dimension(), c);
  InnerSolution out;
  switch (spec.kind()) {
    case SetKind::kSingleton: {
      out.weights = std::get<SingletonSet>(spec.set).weights;
      for (std::size_t e = 0; e < c.size(); ++e) out.value += 0.25 * c[e] * out.weights[e];
      return out;
    }
    case SetKind::kPolyhedral: {
      const auto& set = std::get<PolyhedralSet>(spec.set);
      const auto sol = simplex_solve(polyhedral_lp(set, to_vector(c)));
      out.weights = to_weights(sol.x);
      out.value = sol.value;
      return out;
    }
    case SetKind::kEllipsoidal: {
      const auto& set = std::get<EllipsoidalSet>(spec.set);
      const Vector cv = to_vector(c);
      const Vector qc = set.shape * cv;
      const double norm = std::sqrt(std::max(0.0, cv.dot(qc)));
      Vector w = set.center;
      if (norm > 0.0) w -= std::sqrt(set.radius) * qc / norm;
      out.weights = to_weights(w);
      out.value = 0.25 * cv.dot(w);
      return out;
    }
    case SetKind::kWasserstein:
      return worst_case_mean(std::get<WassersteinSet>(spec.set), c);
  }
  return out;
}

double dual_polyhedral_value(const PolyhedralSet& set, std::span<const double> c) {
  check_coefficients(static_cast<std::size_t>(set.A.cols()), c);
  const int rows = static_cast<int>(set.A.rows());
  const int m = static_cast<int>(set.A.cols());
  // min -b.p  s.t.  A^T p = c / 4,  p >= 0.
  LpProblem lp = LpProblem::with_shape(m, rows);
  lp.c = -set.b;
  lp.A = set.A.transpose();
  lp.b = 0.25 * to_vector(c);
  lp.sense.assign(m, RowSense::kEqual);
  try {
    return -simplex_solve(lp).value;
  } catch (const InfeasibleError&) {
    throw InfeasibleError("polyhedral dual infeasible: the primal inner problem is unbounded");
  } catch (const UnboundedError&) {
    throw UnboundedError("polyhedral dual unbounded: the uncertainty set is empty");
  }
}

double ellipsoid_closed_form_value(const EllipsoidalSet& set, std::span<const double> c) {
  check_coefficients(static_cast<std::size_t>(set.center.size()), c);
  const Vector cv = to_vector(c);
  const double k = (sqrt_psd(set.shape) * cv).norm();
  return 0.25 * set.center.dot(cv) - 0.25 * std::sqrt(set.radius) * k;
}

InnerSolution sample_feasible(const UncertaintySpec& spec, Rng& rng) {
  const auto m = spec.dimension();
  InnerSolution out;
  auto random_direction = [&](std::size_t dim) {
    std::vector<double> d = rng.normal_vector(dim);
    return d;
  };
  switch (spec.kind()) {
    case SetKind::kSingleton:
      out.weights = std::get<SingletonSet>(spec.set).weights;
      break;
    case SetKind::kPolyhedral: {
      const auto a = worst_case_weights(spec, random_direction(m)).weights;
      const auto b = worst_case_weights(spec, random_direction(m)).weights;
      const double t = rng.uniform();
      out.weights.resize(m);
      for (std::size_t e = 0; e < m; ++e) out.weights[e] = t * a[e] + (1.0 - t) * b[e];
      break;
    }
    case SetKind::kEllipsoidal: {
      const auto& set = std::get<EllipsoidalSet>(spec.set);
      const auto dir = rng.unit_vector(m);
      const double r = std::pow(rng.uniform(), 1.0 / static_cast<double>(std::max<std::size_t>(m, 1)));
      Vector z(static_cast<Eigen::Index>(m));
      for (std::size_t e = 0; e < m; ++e) z(static_cast<Eigen::Index>(e)) = r * dir[e];
      const DenseMatrix l = set.shape.llt().matrixL();
      out.weights = to_weights(set.center + std::sqrt(set.radius) * (l * z));
      break;
    }
    case SetKind::kWasserstein: {
      const auto& set = std::get<WassersteinSet>(spec.set);
      const auto vertex = worst_case_mean(set, random_direction(m));
      const double t = rng.uniform();
      const auto s = set.support.size();
      out.probabilities.resize(s);
      out.weights.assign(m, 0.0);
      for (std::size_t i = 0; i < s; ++i) {
        out.probabilities[i] = t * vertex.probabilities[i] + (1.0 - t) * set.empirical(static_cast<Eigen::Index>(i));
        for (std::size_t e = 0; e < m; ++e) out.weights[e] += out.probabilities[i] * set.support[i][e];
      }
      break;
    }
  }
  return out;
}

namespace {

Vector json_vector(const json& j, const std::string& name) {
  if (!j.contains(name)) throw ParseError(name + ": missing field");
  try {
    const auto v = j.at(name).get<std::vector<double>>();
    return to_vector(v);
  } catch (const json::exception& e) {
    throw ParseError(name + ": " + e.what());
  }
}

DenseMatrix json_matrix(const json& j, const std::string& name) {
  if (!j.contains(name)) throw ParseError(name + ": missing field");
  std::vector<std::vector<double>> rows;
  try {
    rows = j.at(name).get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw ParseError(name + ": " + e.what());
  }
  const auto cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError(name + ": ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  }
  return out;
}

json vector_json(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json matrix_json(const DenseMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
  return rows;
}

}  // namespace

UncertaintySpec parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("kind: missing or not a string");
  }
  const auto kind = j.at("kind").get<std::string>();
  UncertaintySpec spec;
  if (kind == "singleton") {
    const auto w = json_vector(j, "weights");
    spec = UncertaintySpec::singleton(to_weights(w));
  } else if (kind == "box") {
    const auto lo = json_vector(j, "lower");
    const auto hi = json_vector(j, "upper");
    if (lo.size() != hi.size()) throw ParseError("upper: size differs from lower");
    spec = UncertaintySpec{PolyhedralSet::box(lo, hi)};
  } else if (kind == "polyhedral") {
    auto a = json_matrix(j, "A");
    auto b = json_vector(j, "b");
    if (a.rows() != b.size()) throw ParseError("b: size differs from the row count of A");
    spec = UncertaintySpec::polyhedral(std::move(a), std::move(b));
  } else if (kind == "ellipsoidal") {
    if (!j.contains("a")) throw ParseError("a: missing field");
    spec = UncertaintySpec::ellipsoidal(json_vector(j, "center"), json_matrix(j, "Q"),
                                        j.at("a").get<double>());
  } else if (kind == "wasserstein") {
    std::vector<WeightAssignment> support;
    try {
      support = j.at("support").get<std::vector<WeightAssignment>>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("support: ") + e.what());
    }
    auto empirical = j.contains("empirical")
                         ? json_vector(j, "empirical")
                         : Vector::Constant(static_cast<Eigen::Index>(support.size()),
                                            1.0 / static_cast<double>(std::max<std::size_t>(support.size(), 1)));
    if (!j.contains("radius")) throw ParseError("radius: missing field");
    const double radius = j.at("radius").get<double>();
    if (!j.contains("metric") || (j.at("metric").is_string() && j.at("metric") == "l1")) {
      spec = UncertaintySpec::wasserstein_l1(std::move(support), std::move(empirical), radius);
    } else {
      spec = UncertaintySpec::wasserstein(std::move(support), std::move(empirical), radius,
                                          json_matrix(j, "metric"));
    }
  } else {
    throw ParseError("kind: unknown set kind '" + kind + "'");
  }
  spec.allow_signed = j.value("signed", false);
  return spec;
}

UncertaintySpec load_spec(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("spec: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_spec(buffer.str());
}

std::string spec_to_json(const UncertaintySpec& spec) {
  json j;
  switch (spec.kind()) {
    case SetKind::kSingleton:
      j["kind"] = "singleton";
      j["weights"] = std::get<SingletonSet>(spec.set).weights;
      break;
    case SetKind::kPolyhedral: {
      const auto& set = std::get<PolyhedralSet>(spec.set);
      if (set.is_box()) {
        j["kind"] = "box";
        j["lower"] = vector_json(set.box_lower);
        j["upper"] = vector_json(set.box_upper);
      } else {
        j["kind"] = "polyhedral";
        j["A"] = matrix_json(set.A);
        j["b"] = vector_json(set.b);
      }
      break;
    }
    case SetKind::kEllipsoidal: {
      const auto& set = std::get<EllipsoidalSet>(spec.set);
      j["kind"] = "ellipsoidal";
      j["center"] = vector_json(set.center);
      j["Q"] = matrix_json(set.shape);
      j["a"] = set.radius;
      break;
    }
    case SetKind::kWasserstein: {
      const auto& set = std::get<WassersteinSet>(spec.set);
      j["kind"] = "wasserstein";
      j["support"] = set.support;
      j["empirical"] = vector_json(set.empirical);
      j["radius"] = set.radius;
      if (set.l1_metric) {
        j["metric"] = "l1";
      } else {
        j["metric"] = matrix_json(set.metric);
      }
      break;
    }
  }
  if (spec.allow_signed) j["signed"] = true;
  return j.dump(2);
}

}  // namespace robustcut
