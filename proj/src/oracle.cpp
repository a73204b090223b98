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

#include "robustcut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

#include "robustcut/errors.hpp"
#include "robustcut/rng.hpp"
#include "robustcut/rounding.hpp"

namespace robustcut {

namespace {

// Runs fn(worker, begin, end) over contiguous slices of [0, count).
template <typename Fn>
void parallel_slices(std::uint64_t count, Fn&& fn) {
  const auto workers = static_cast<std::uint64_t>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(worker_threads(), count)));
  if (workers == 1) {
    fn(0, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, w * chunk);
    const std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

Cut cut_from_mask(int n, std::uint64_t mask, bool pin_first) {
  std::vector<int> y(static_cast<std::size_t>(n), 1);
  const int offset = pin_first ? 1 : 0;
  for (int i = offset; i < n; ++i) {
    if ((mask >> (i - offset)) & 1U) y[i] = -1;
  }
  return Cut(std::move(y));
}

bool at_least(double lhs, double rhs, double tol) {
  return lhs >= rhs - tol * std::max(1.0, std::abs(rhs));
}

double default_alpha(ProblemKind kind) { return kind == ProblemKind::kDiCut ? 0.796 : 0.878; }

}  // namespace

int worker_threads() {
  if (const char* env = std::getenv("ROBUSTCUT_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

InnerSolution inner_at_cut(const Instance& inst, const UncertaintySpec& spec, const Cut& y) {
  return worst_case_weights(spec, cut_coefficients(inst, y));
}

OracleResult brute_force_robust(const Instance& inst, const UncertaintySpec& spec) {
  if (inst.n() > kMaxEnumerationSize) {
    throw DomainError("brute force enumeration is limited to n <= " +
                      std::to_string(kMaxEnumerationSize) + " (got n = " + std::to_string(inst.n()) +
                      "); use the relaxation bound for larger instances");
  }
  require_valid(spec, inst);
  const bool pin = inst.kind() != ProblemKind::kDiCut;
  const int free_bits = pin ? inst.n() - 1 : inst.n();
  const std::uint64_t count = std::uint64_t{1} << free_bits;

  struct Best {
    double value = -std::numeric_limits<double>::infinity();
    std::uint64_t mask = 0;
  };
  std::vector<Best> best(static_cast<std::size_t>(worker_threads()));
  parallel_slices(count, [&](std::uint64_t worker, std::uint64_t begin, std::uint64_t end) {
    Best local;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const double v = inner_at_cut(inst, spec, cut_from_mask(inst.n(), mask, pin)).value;
      if (v > local.value) local = {v, mask};
    }
    best[worker] = local;
  });
  // Slices are ordered by mask, so a strict comparison keeps the lowest mask on ties.
  Best overall;
  for (const auto& b : best) {
    if (b.value > overall.value) overall = b;
  }

  OracleResult out;
  out.best_cut = cut_from_mask(inst.n(), overall.mask, pin);
  const auto inner = inner_at_cut(inst, spec, out.best_cut);
  out.worst = inner.weights;
  out.worst_probabilities = inner.probabilities;
  out.value = inner.value;
  out.enumerated = count;
  return out;
}

MonteCarloEstimate mc_expected_cut(const Instance& inst, const GramFactor& u,
                                   const WeightAssignment& w, int trials, std::uint64_t seed) {
  if (trials < 100) throw DomainError("mc_expected_cut needs at least 100 trials");
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_slices(static_cast<std::uint64_t>(trials),
                  [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t t = begin; t < end; ++t) {
                      values[t] = objective_value(inst, round_trial(inst, u, seed, t), w);
                    }
                  });
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / trials;
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / (trials - 1) / trials)};
}

bool SandwichReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::vector<std::string> SandwichReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

SandwichReport certify_sandwich(const Instance& inst, const UncertaintySpec& spec,
                                const SaddleSolution& solution, const Cut& cut,
                                const CertifyOptions& opts) {
  if (inst.kind() == ProblemKind::kAllEqual) {
    throw DomainError("certify_sandwich covers Max-Cut and DiCut; use certify_allequal");
  }
  SandwichReport report;
  report.oracle = brute_force_robust(inst, spec);
  report.val_rp = report.oracle.value;
  report.relaxed_value = solution.value;
  report.ratio_constant = opts.alpha > 0.0 ? opts.alpha : default_alpha(inst.kind());
  const double target = report.ratio_constant * report.val_rp;

  report.checks.push_back({"relaxation >= optimum", solution.value, report.val_rp,
                           at_least(solution.value, report.val_rp, 1e-6)});

  auto expected_under = [&](const InnerSolution& w) {
    if (spec.kind() != SetKind::kWasserstein || w.probabilities.empty()) {
      return expected_cut_exact(inst, solution.factor, w.weights);
    }
    // Distributional form: sum_i p_i E[C(s_i)].
    const auto& set = std::get<WassersteinSet>(spec.set);
    double total = 0.0;
    for (std::size_t i = 0; i < set.support.size(); ++i) {
      if (w.probabilities[i] != 0.0) {
        total += w.probabilities[i] * expected_cut_exact(inst, solution.factor, set.support[i]);
      }
    }
    return total;
  };

  const bool shifted = opts.shifted || spec.allow_signed;
  report.min_expected = std::numeric_limits<double>::infinity();
  auto lower_check = [&](const std::string& name, const InnerSolution& w) {
    const double e = expected_under(w);
    report.min_expected = std::min(report.min_expected, e);
    if (!shifted) {
      report.checks.push_back({name, e, target, at_least(e, target, opts.tol)});
      return;
    }
    double w_minus = 0.0;
    for (double x : w.weights) w_minus += std::min(x, 0.0);
    const double lhs = e - w_minus;
    const double rhs = report.ratio_constant * (report.val_rp - w_minus);
    report.checks.push_back({"shifted " + name, lhs, rhs, at_least(lhs, rhs, opts.tol)});
  };
  lower_check("expected cut at solver worst case", {solution.worst, 0.0, solution.worst_probabilities});
  for (int s = 0; s < opts.samples; ++s) {
    Rng rng(opts.seed, static_cast<std::uint64_t>(s));
    lower_check("expected cut at sampled weights #" + std::to_string(s), sample_feasible(spec, rng));
  }

  report.max_rounded_worst = -std::numeric_limits<double>::infinity();
  auto upper_check = [&](const std::string& name, const Cut& y) {
    const double g = inner_at_cut(inst, spec, y).value;
    report.max_rounded_worst = std::max(report.max_rounded_worst, g);
    report.checks.push_back({name, report.val_rp, g, at_least(report.val_rp, g, opts.tol)});
  };
  upper_check("optimum >= worst case of supplied cut", cut);
  for (int d = 0; d < opts.draws; ++d) {
    upper_check("optimum >= worst case of rounded cut #" + std::to_string(d),
                round_trial(inst, solution.factor, opts.seed, static_cast<std::uint64_t>(d)));
  }
  return report;
}

bool LargeCutReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

LargeCutReport certify_large_cut(const Instance& inst, const UncertaintySpec& spec,
                                 const SaddleSolution& solution, double val_rp,
                                 const CertifyOptions& opts) {
  if (inst.kind() != ProblemKind::kMaxCut) throw DomainError("large-cut bound needs a maxcut instance");
  std::vector<WeightAssignment> weightings{solution.worst};
  for (int s = 0; s < opts.samples; ++s) {
    Rng rng(opts.seed, static_cast<std::uint64_t>(s));
    weightings.push_back(sample_feasible(spec, rng).weights);
  }
  const auto& edges = inst.edges();
  LargeCutReport report;
  report.a_tilde = std::numeric_limits<double>::infinity();
  for (const auto& w : weightings) {
    double total = 0.0;
    double relaxed = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      total += w[e];
      relaxed += w[e] * (1.0 - solution.factor.dot(edges[e].tail, edges[e].head)) / 2.0;
    }
    if (total > 0.0) report.a_tilde = std::min(report.a_tilde, relaxed / total);
  }
  if (!std::isfinite(report.a_tilde)) return report;
  report.a_tilde = std::min(report.a_tilde, 1.0);
  report.applicable = report.a_tilde >= kLargeCutThreshold;
  if (!report.applicable) return report;
  report.ratio = large_cut_ratio(report.a_tilde);
  for (std::size_t i = 0; i < weightings.size(); ++i) {
    const double e = expected_cut_exact(inst, solution.factor, weightings[i]);
    const double rhs = report.ratio * val_rp;
    report.checks.push_back({i == 0 ? std::string("large-cut bound at solver worst case")
                                    : "large-cut bound at sampled weights #" + std::to_string(i - 1),
                             e, rhs, at_least(e, rhs, opts.tol)});
  }
  return report;
}

DenseMatrix allequal_matrix(const Instance& inst, const WeightAssignment& w) {
  if (inst.kind() != ProblemKind::kAllEqual) throw DomainError("allequal_matrix needs an allequal instance");
  if (w.size() != inst.weight_count()) throw DimensionError("weight vector length differs");
  DenseMatrix a = DenseMatrix::Zero(inst.n(), inst.n());
  const auto& clauses = inst.clauses();
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    for (const auto& la : clauses[c].literals) {
      for (const auto& lb : clauses[c].literals) {
        a(la.var, lb.var) += w[c] * la.sign() * lb.sign();
      }
    }
  }
  return a;
}

bool AllEqualPipelineReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

AllEqualPipelineReport certify_allequal(const Instance& inst, const UncertaintySpec& spec,
                                        const SaddleSolution& solution, int trials,
                                        const CertifyOptions& opts) {
  if (inst.kind() != ProblemKind::kAllEqual) throw DomainError("certify_allequal needs an allequal instance");
  if (trials < 2) throw DomainError("certify_allequal needs at least 2 trials");
  AllEqualPipelineReport report;
  const int k = inst.arity();
  report.val_ae = brute_force_robust(inst, spec).value;
  report.relaxed_value = solution.value;
  report.bound_factor = 0.88 * k / std::ldexp(1.0, k);
  report.checks.push_back({"relaxation >= optimum", solution.value, report.val_ae,
                           at_least(solution.value, report.val_ae, 1e-6)});

  const DenseMatrix a = allequal_matrix(inst, solution.worst);
  RoundConfig sign_cfg{opts.seed, 16, RoundScheme::kSignPsd};
  report.z = sign_round_psd(a, solution.factor, sign_cfg);
  const double sdp_side = (2.0 / std::numbers::pi) * a.cwiseProduct(solution.factor.gram()).sum();
  report.checks.push_back({"sign rounding guarantee", sign_quadratic(a, report.z), sdp_side,
                           at_least(sign_quadratic(a, report.z), sdp_side, 1e-10)});

  const double target = report.bound_factor * report.val_ae;
  auto check = [&](const std::string& name, const WeightAssignment& w) {
    std::vector<double> values(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
      Rng rng(opts.seed + 1, static_cast<std::uint64_t>(t));
      values[t] = allequal_value(inst, allequal_round(report.z, k, rng), w);
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= trials;
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    const double se = std::sqrt(sq / (trials - 1) / trials);
    report.checks.push_back({name, mean + 3.0 * se, target, at_least(mean + 3.0 * se, target, opts.tol)});
  };
  check("satisfied weight at solver worst case", solution.worst);
  for (int s = 0; s < opts.samples; ++s) {
    Rng rng(opts.seed, static_cast<std::uint64_t>(s));
    check("satisfied weight at sampled weights #" + std::to_string(s), sample_feasible(spec, rng).weights);
  }
  return report;
}

}  // namespace robustcut
