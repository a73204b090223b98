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

#include "robustcut/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "robustcut/errors.hpp"
#include "robustcut/rng.hpp"

namespace robustcut {

double GramObjective::value(const GramFactor& u) const {
  if (u.size() != size()) throw DimensionError("gram objective: factor size mismatch");
  double total = offset;
  for (int j = 1; j < size(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (coupling(i, j) != 0.0) total += coupling(i, j) * u.dot(i, j);
    }
  }
  return total;
}

double GramObjective::value(const DenseMatrix& y) const {
  if (y.rows() != size() || y.cols() != size()) {
    throw DimensionError("gram objective: matrix size mismatch");
  }
  double total = offset;
  for (int j = 1; j < size(); ++j) {
    for (int i = 0; i < j; ++i) total += coupling(i, j) * y(i, j);
  }
  return total;
}

namespace {

void check_weights(const Instance& inst, const WeightAssignment& w) {
  if (w.size() != inst.weight_count()) {
    throw DimensionError("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                         std::to_string(inst.weight_count()));
  }
}

void add_pair(DenseMatrix& coupling, int i, int j, double value) {
  coupling(i, j) += value;
  coupling(j, i) += value;
}

// Calls f(weight index, unit-weight coefficient in c(Y)) for Y given by dot.
template <typename Dot, typename F>
void for_each_coefficient(const Instance& inst, Dot dot, F f) {
  switch (inst.kind()) {
    case ProblemKind::kMaxCut: {
      const auto& edges = inst.edges();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        f(e, 2.0 * (1.0 - dot(edges[e].tail, edges[e].head)));
      }
      break;
    }
    case ProblemKind::kDiCut: {
      const auto& arcs = inst.edges();
      for (std::size_t a = 0; a < arcs.size(); ++a) {
        const int t = arcs[a].tail + 1;
        const int h = arcs[a].head + 1;
        f(a, 1.0 + dot(0, t) - dot(0, h) - dot(t, h));
      }
      break;
    }
    case ProblemKind::kAllEqual: {
      const double k2 = static_cast<double>(inst.arity()) * inst.arity();
      const auto& clauses = inst.clauses();
      for (std::size_t c = 0; c < clauses.size(); ++c) {
        double norm2 = 0.0;
        for (const auto& la : clauses[c].literals) {
          for (const auto& lb : clauses[c].literals) {
            norm2 += la.sign() * lb.sign() * dot(la.var, lb.var);
          }
        }
        f(c, 4.0 * norm2 / k2);
      }
      break;
    }
  }
}

}  // namespace

GramObjective relaxed_objective(const Instance& inst, const WeightAssignment& w) {
  check_weights(inst, w);
  GramObjective obj;
  const int size = inst.vector_count();
  obj.coupling = DenseMatrix::Zero(size, size);
  switch (inst.kind()) {
    case ProblemKind::kMaxCut: {
      const auto& edges = inst.edges();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        obj.offset += 0.5 * w[e];
        add_pair(obj.coupling, edges[e].tail, edges[e].head, -0.5 * w[e]);
      }
      break;
    }
    case ProblemKind::kDiCut: {
      const auto& arcs = inst.edges();
      for (std::size_t a = 0; a < arcs.size(); ++a) {
        const int t = arcs[a].tail + 1;
        const int h = arcs[a].head + 1;
        const double q = 0.25 * w[a];
        obj.offset += q;
        add_pair(obj.coupling, 0, t, q);
        add_pair(obj.coupling, 0, h, -q);
        add_pair(obj.coupling, t, h, -q);
      }
      break;
    }
    case ProblemKind::kAllEqual: {
      const double k2 = static_cast<double>(inst.arity()) * inst.arity();
      const auto& clauses = inst.clauses();
      for (std::size_t c = 0; c < clauses.size(); ++c) {
        const auto& lits = clauses[c].literals;
        const double scale = w[c] / k2;
        for (std::size_t a = 0; a < lits.size(); ++a) {
          for (std::size_t b = 0; b < lits.size(); ++b) {
            const double s = scale * lits[a].sign() * lits[b].sign();
            if (lits[a].var == lits[b].var) {
              obj.offset += s;
            } else if (a < b) {
              add_pair(obj.coupling, lits[a].var, lits[b].var, 2.0 * s);
            }
          }
        }
      }
      break;
    }
  }
  return obj;
}

std::vector<double> relaxed_coefficients(const Instance& inst, const GramFactor& u) {
  if (u.size() != inst.vector_count()) {
    throw DimensionError("factor has " + std::to_string(u.size()) + " columns, expected " +
                         std::to_string(inst.vector_count()));
  }
  std::vector<double> c(inst.weight_count());
  for_each_coefficient(
      inst, [&](int i, int j) { return i == j ? 1.0 : u.dot(i, j); },
      [&](std::size_t e, double value) { c[e] = value; });
  return c;
}

std::vector<double> relaxed_coefficients(const Instance& inst, const DenseMatrix& y) {
  if (y.rows() != inst.vector_count() || y.cols() != inst.vector_count()) {
    throw DimensionError("gram matrix size differs from the instance's vector count");
  }
  std::vector<double> c(inst.weight_count());
  for_each_coefficient(
      inst, [&](int i, int j) { return y(i, j); },
      [&](std::size_t e, double value) { c[e] = value; });
  return c;
}

double sdp_objective(const Instance& inst, const GramFactor& u, const WeightAssignment& w) {
  check_weights(inst, w);
  const auto c = relaxed_coefficients(inst, u);
  double total = 0.0;
  for (std::size_t e = 0; e < c.size(); ++e) total += 0.25 * c[e] * w[e];
  return total;
}

int default_rank(int vectors) {
  return static_cast<int>(std::ceil(std::sqrt(2.0 * std::max(vectors, 1)))) + 1;
}

namespace {

SdpResult ascend(const GramObjective& objective, DenseMatrix u, const SdpOptions& options) {
  const int size = objective.size();
  const DenseMatrix& coupling = objective.coupling;
  auto current = [&] { return objective.value(GramFactor(u)); };

  SdpResult result;
  double value = current();
  double residual = 0.0;
  int sweeps = 0;
  bool converged = false;
  Vector g(u.rows());
  while (sweeps < options.max_iter) {
    ++sweeps;
    for (int i = 0; i < size; ++i) {
      g.noalias() = u * coupling.col(i);
      const double norm = g.norm();
      if (norm > 1e-300) u.col(i) = g / norm;
    }
    const double next = current();
    residual = next - value;
    value = next;
    if (residual < options.tol * std::max(1.0, std::abs(value))) {
      converged = true;
      break;
    }
  }
  // Ascent crawls toward rank-one optima. The aligned sign pattern is itself
  // feasible, and exactly optimal whenever the relaxation is tight.
  DenseMatrix aligned(u.rows(), size);
  const Vector ref = u.col(0);
  for (int i = 0; i < size; ++i) aligned.col(i) = u.col(i).dot(ref) >= 0.0 ? ref : Vector(-ref);
  const double aligned_value = objective.value(GramFactor(aligned));
  if (aligned_value > value) {
    value = aligned_value;
    u = std::move(aligned);
  }
  result.factor = GramFactor(std::move(u));
  result.report = {value, sweeps, residual, converged};
  return result;
}

}  // namespace

SdpResult maximize_on_elliptope(const GramObjective& objective, const SdpOptions& options,
                                const GramFactor* warm_start) {
  const int size = objective.size();
  if (size == 0) throw DimensionError("elliptope solve with no vectors");
  const int rank = options.rank > 0 ? options.rank : default_rank(size);
  const int restarts = std::max(options.restarts, 1);

  SdpResult best;
  bool have_best = false;
  auto keep = [&](SdpResult candidate) {
    if (!have_best || candidate.report.value > best.report.value) {
      best = std::move(candidate);
      have_best = true;
    }
  };

  int random_runs = restarts;
  if (warm_start != nullptr && warm_start->size() == size) {
    DenseMatrix u = DenseMatrix::Zero(std::max(rank, warm_start->rank()), size);
    u.topRows(warm_start->rank()) = warm_start->matrix();
    keep(ascend(objective, std::move(u), options));
    --random_runs;
  }
  for (int run = 0; run < random_runs; ++run) {
    Rng rng(options.seed, static_cast<std::uint64_t>(run));
    DenseMatrix u(rank, size);
    for (int i = 0; i < size; ++i) {
      const auto v = rng.unit_vector(rank);
      for (int r = 0; r < rank; ++r) u(r, i) = v[r];
    }
    keep(ascend(objective, std::move(u), options));
  }
  return best;
}

SdpResult solve_elliptope_max(const Instance& inst, const WeightAssignment& w,
                              const SdpOptions& options) {
  return maximize_on_elliptope(relaxed_objective(inst, w), options);
}

}  // namespace robustcut
