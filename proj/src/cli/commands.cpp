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

#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <numbers>
#include <sstream>

#include "cli/generate.hpp"
#include "robustcut/errors.hpp"
#include "robustcut/oracle.hpp"
#include "robustcut/rng.hpp"
#include "robustcut/robust.hpp"
#include "robustcut/rounding.hpp"

namespace robustcut::cli {

using json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Flags shared by the commands that run the solver.
struct SolveFlags {
  std::string instance;
  std::string spec;
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  int trials = 0;
  int rank = 0;
  double gap_tol = 0.0;
  int max_iter = 0;
  bool timings = false;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* rank_opt = nullptr;
  CLI::Option* gap_opt = nullptr;
  CLI::Option* iter_opt = nullptr;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f, bool need_spec = false) {
  cmd->add_option("--instance", f.instance, "Instance file (JSON or edge list)")->required();
  auto* spec = cmd->add_option("--spec", f.spec, "Uncertainty set file (default: nominal weights)");
  if (need_spec) spec->required();
  cmd->add_option("--config", f.config, "Solver config JSON");
  f.seed_opt = cmd->add_option("--seed", f.seed, "Seed for the solver and the rounding");
  f.trials_opt = cmd->add_option("--trials", f.trials, "Rounding draws")->check(CLI::PositiveNumber);
  f.rank_opt = cmd->add_option("--rank", f.rank, "Factor rank (0: automatic)")->check(CLI::NonNegativeNumber);
  f.gap_opt = cmd->add_option("--gap-tol", f.gap_tol, "Relative saddle gap tolerance")
                  ->check(CLI::PositiveNumber);
  f.iter_opt = cmd->add_option("--max-iter", f.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "Report path (default: stdout)");
  cmd->add_flag("--timings", f.timings, "Add wall-clock times to the report");
}

SolverConfig load_config(const std::string& path) {
  SolverConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream file(path);
  if (!file) throw ParseError("config: cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(file);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "gap_tol") {
        cfg.gap_tol = value.get<double>();
      } else if (key == "max_iter") {
        cfg.max_iter = value.get<int>();
      } else if (key == "rank") {
        cfg.rank = value.get<int>();
      } else if (key == "restarts") {
        cfg.restarts = value.get<int>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "step") {
        cfg.step = value.get<double>();
      } else if (key == "sdp_tol") {
        cfg.sdp_tol = value.get<double>();
      } else {
        throw ParseError("config: unknown field '" + key + "'");
      }
    } catch (const json::exception&) {
      throw ParseError("config: field '" + key + "' has the wrong type");
    }
  }
  if (!(cfg.gap_tol > 0.0) || cfg.max_iter < 1 || cfg.rank < 0 || cfg.restarts < 1 ||
      !(cfg.step > 0.0) || !(cfg.sdp_tol > 0.0)) {
    throw ParseError("config: values out of range");
  }
  return cfg;
}

SolverConfig solver_config(const SolveFlags& f) {
  SolverConfig cfg = load_config(f.config);
  if (f.seed_opt->count() > 0) cfg.seed = f.seed;
  if (f.rank_opt->count() > 0) cfg.rank = f.rank;
  if (f.gap_opt->count() > 0) cfg.gap_tol = f.gap_tol;
  if (f.iter_opt->count() > 0) cfg.max_iter = f.max_iter;
  return cfg;
}

json config_json(const SolverConfig& cfg) {
  return {{"gap_tol", cfg.gap_tol}, {"max_iter", cfg.max_iter}, {"rank", cfg.rank},
          {"restarts", cfg.restarts}, {"sdp_tol", cfg.sdp_tol}, {"seed", cfg.seed},
          {"step", cfg.step}};
}

struct Inputs {
  Instance inst;
  UncertaintySpec spec;
  std::string instance_digest;
  std::string spec_digest;
};

Inputs load_inputs(const SolveFlags& f) {
  Instance inst = load_instance(f.instance);
  UncertaintySpec spec = f.spec.empty() ? make_singleton_spec(inst) : load_spec(f.spec);
  return {inst, spec, fnv1a_hex(instance_to_json(inst)), fnv1a_hex(spec_to_json(spec))};
}

json cut_json(const Cut& y) { return y.signs(); }

json checks_json(const std::vector<InequalityCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  }
  return arr;
}

json solution_json(const SaddleSolution& sol) {
  json j{{"value", sol.value},
         {"upper_bound", sol.upper_bound},
         {"iterations", sol.report.iterations},
         {"residual", sol.report.residual},
         {"converged", sol.report.converged},
         {"rank", sol.factor.rank()},
         {"worst", sol.worst}};
  if (!sol.worst_probabilities.empty()) j["worst_probabilities"] = sol.worst_probabilities;
  return j;
}

json header_json(const std::string& command, const Inputs& in, const SolverConfig& cfg,
                 std::uint64_t seed) {
  return {{"command", command},
          {"seed", seed},
          {"instance_digest", in.instance_digest},
          {"spec_digest", in.spec_digest},
          {"instance", {{"kind", std::string(to_string(in.inst.kind()))},
                        {"n", in.inst.n()},
                        {"weights", in.inst.weight_count()}}},
          {"spec_kind", std::string(to_string(in.spec.kind()))},
          {"config", config_json(cfg)}};
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

// Best of `trials` rounded solutions by worst-case objective; ties keep the
// earliest draw.
struct RoundedChoice {
  Cut cut;
  int trial = 0;
  double worst_value = 0.0;
  std::optional<Cut> z;
};

RoundedChoice choose_rounded(const Inputs& in, const SaddleSolution& sol, std::uint64_t seed,
                             int trials) {
  RoundedChoice best;
  best.worst_value = -std::numeric_limits<double>::infinity();
  std::optional<Cut> z;
  if (in.inst.kind() == ProblemKind::kAllEqual) {
    z = sign_round_psd(allequal_matrix(in.inst, sol.worst), sol.factor,
                       RoundConfig{seed, trials, RoundScheme::kSignPsd});
  }
  for (int t = 0; t < trials; ++t) {
    Cut y;
    if (z) {
      Rng rng(seed + 1, static_cast<std::uint64_t>(t));
      y = allequal_round(*z, in.inst.arity(), rng);
    } else {
      y = round_trial(in.inst, sol.factor, seed, static_cast<std::uint64_t>(t));
    }
    const double g = inner_at_cut(in.inst, in.spec, y).value;
    if (g > best.worst_value) {
      best.cut = std::move(y);
      best.trial = t;
      best.worst_value = g;
    }
  }
  best.z = std::move(z);
  return best;
}

void write_csv(const std::string& path, const Inputs& in, const SaddleSolution& sol, const Cut& y) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << std::setprecision(17);
  const auto coeff = relaxed_coefficients(in.inst, sol.factor);
  const auto rounded = cut_coefficients(in.inst, y);
  file << "index,tail,head,worst_weight,relaxed_coefficient,relaxed_contribution,rounded_contribution\n";
  for (std::size_t e = 0; e < in.inst.weight_count(); ++e) {
    file << e + 1 << ',';
    if (in.inst.kind() == ProblemKind::kAllEqual) {
      file << ",,";
    } else {
      file << in.inst.edges()[e].tail + 1 << ',' << in.inst.edges()[e].head + 1 << ',';
    }
    file << sol.worst[e] << ',' << coeff[e] << ',' << 0.25 * coeff[e] * sol.worst[e] << ','
         << 0.25 * rounded[e] * sol.worst[e] << '\n';
  }
}

int cmd_solve(const SolveFlags& f, const std::string& csv, std::ostream& out) {
  const auto start = Clock::now();
  const Inputs in = load_inputs(f);
  const SolverConfig cfg = solver_config(f);
  const int trials = f.trials_opt->count() > 0 ? f.trials : 64;
  const auto sol = solve_robust(in.inst, in.spec, cfg);
  const double solve_seconds = seconds_since(start);
  const auto choice = choose_rounded(in, sol, f.seed, trials);

  json report = header_json("solve", in, cfg, f.seed);
  report["solver"] = solution_json(sol);
  json rounding{{"trials", trials},
                {"best_trial", choice.trial},
                {"cut", cut_json(choice.cut)},
                {"worst_case_value", choice.worst_value},
                {"value_at_solver_worst", objective_value(in.inst, choice.cut, sol.worst)},
                {"nominal_value", objective_value(in.inst, choice.cut, in.inst.nominal_weights())}};
  if (choice.z) rounding["sign_vector"] = cut_json(*choice.z);
  if (in.inst.kind() != ProblemKind::kAllEqual) {
    rounding["expected_at_solver_worst"] = expected_cut_exact(in.inst, sol.factor, sol.worst);
  }
  report["rounding"] = rounding;
  const int code = sol.report.converged ? kExitOk : kExitNotConverged;
  report["exit_code"] = code;
  if (f.timings) {
    report["wall_seconds"] = {{"solve", solve_seconds}, {"total", seconds_since(start)}};
  }
  if (!csv.empty()) write_csv(csv, in, sol, choice.cut);
  emit(report, f.out, out);
  return code;
}

struct VerifyFlags {
  int samples = 20;
  int mc_trials = 4000;
  std::optional<double> corrupt_value;
};

int cmd_verify(const SolveFlags& f, const VerifyFlags& v, std::ostream& out) {
  const auto start = Clock::now();
  const Inputs in = load_inputs(f);
  const SolverConfig cfg = solver_config(f);
  const int trials = f.trials_opt->count() > 0 ? f.trials : 32;
  auto sol = solve_robust(in.inst, in.spec, cfg);
  if (v.corrupt_value) sol.value = *v.corrupt_value;

  CertifyOptions opts;
  opts.samples = v.samples;
  opts.draws = trials;
  opts.seed = f.seed;

  json report = header_json("verify", in, cfg, f.seed);
  report["solver"] = solution_json(sol);
  if (v.corrupt_value) report["corrupted_value"] = *v.corrupt_value;
  std::vector<InequalityCheck> checks;
  if (in.inst.kind() == ProblemKind::kAllEqual) {
    const auto rep = certify_allequal(in.inst, in.spec, sol, v.mc_trials, opts);
    report["optimum"] = rep.val_ae;
    report["bound_factor"] = rep.bound_factor;
    report["sign_vector"] = cut_json(rep.z);
    report["mc_trials"] = v.mc_trials;
    checks = rep.checks;
  } else {
    const auto choice = choose_rounded(in, sol, f.seed, trials);
    const auto rep = certify_sandwich(in.inst, in.spec, sol, choice.cut, opts);
    report["optimum"] = rep.val_rp;
    report["optimal_cut"] = cut_json(rep.oracle.best_cut);
    report["enumerated"] = rep.oracle.enumerated;
    report["ratio_constant"] = rep.ratio_constant;
    report["min_expected"] = rep.min_expected;
    report["max_rounded_worst"] = rep.max_rounded_worst;
    checks = rep.checks;
    if (in.inst.kind() == ProblemKind::kMaxCut && !in.spec.allow_signed) {
      const auto large = certify_large_cut(in.inst, in.spec, sol, rep.val_rp, opts);
      report["large_cut"] = {{"a_tilde", large.a_tilde},
                             {"applicable", large.applicable},
                             {"ratio", large.ratio}};
      checks.insert(checks.end(), large.checks.begin(), large.checks.end());
    }
  }
  bool pass = true;
  json failures = json::array();
  for (const auto& c : checks) {
    if (!c.pass) {
      pass = false;
      failures.push_back(c.name);
    }
  }
  report["checks"] = checks_json(checks);
  report["failures"] = failures;
  report["verdict"] = pass ? "pass" : "fail";
  const int code = pass ? kExitOk : kExitFailedCheck;
  report["exit_code"] = code;
  if (f.timings) report["wall_seconds"] = {{"total", seconds_since(start)}};
  emit(report, f.out, out);
  return code;
}

int cmd_round(const SolveFlags& f, const std::string& scheme_name, std::ostream& out) {
  const auto start = Clock::now();
  const Inputs in = load_inputs(f);
  const SolverConfig cfg = solver_config(f);
  const int trials = f.trials_opt->count() > 0 ? f.trials : 1000;
  RoundScheme scheme;
  if (!scheme_name.empty()) {
    scheme = round_scheme_from_string(scheme_name);
  } else {
    switch (in.inst.kind()) {
      case ProblemKind::kMaxCut:
        scheme = RoundScheme::kUniform;
        break;
      case ProblemKind::kDiCut:
        scheme = RoundScheme::kDicutUniform;
        break;
      default:
        scheme = RoundScheme::kAllEqualBiased;
        break;
    }
  }
  const auto sol = solve_robust(in.inst, in.spec, cfg);
  json report = header_json("round", in, cfg, f.seed);
  report["solver"] = solution_json(sol);
  json r{{"scheme", std::string(to_string(scheme))}, {"trials", trials}};
  switch (scheme) {
    case RoundScheme::kUniform:
    case RoundScheme::kDicutUniform: {
      const bool want_dicut = scheme == RoundScheme::kDicutUniform;
      if (want_dicut != (in.inst.kind() == ProblemKind::kDiCut) ||
          in.inst.kind() == ProblemKind::kAllEqual) {
        throw DomainError("scheme " + std::string(to_string(scheme)) + " does not fit a " +
                          std::string(to_string(in.inst.kind())) + " instance");
      }
      const auto mc = mc_expected_cut(in.inst, sol.factor, sol.worst, std::max(trials, 100), f.seed);
      const double exact = expected_cut_exact(in.inst, sol.factor, sol.worst);
      r["mc_mean"] = mc.mean;
      r["mc_std_error"] = mc.std_error;
      r["exact_expectation"] = exact;
      r["first_cut"] = cut_json(round_trial(in.inst, sol.factor, f.seed, 0));
      break;
    }
    case RoundScheme::kAllEqualBiased:
    case RoundScheme::kSignPsd: {
      if (in.inst.kind() != ProblemKind::kAllEqual) {
        throw DomainError("scheme " + std::string(to_string(scheme)) + " needs an allequal instance");
      }
      const DenseMatrix a = allequal_matrix(in.inst, sol.worst);
      const Cut z = sign_round_psd(a, sol.factor, RoundConfig{f.seed, trials, RoundScheme::kSignPsd});
      r["sign_vector"] = cut_json(z);
      r["sign_objective"] = sign_quadratic(a, z);
      r["sign_target"] = (2.0 / std::numbers::pi) * a.cwiseProduct(sol.factor.gram()).sum();
      if (scheme == RoundScheme::kAllEqualBiased) {
        double sum = 0.0;
        double sq = 0.0;
        for (int t = 0; t < trials; ++t) {
          Rng rng(f.seed + 1, static_cast<std::uint64_t>(t));
          const double v = allequal_value(in.inst, allequal_round(z, in.inst.arity(), rng), sol.worst);
          sum += v;
          sq += v * v;
        }
        const double mean = sum / trials;
        const double var = trials > 1 ? std::max(0.0, (sq - trials * mean * mean) / (trials - 1)) : 0.0;
        r["mc_mean"] = mean;
        r["mc_std_error"] = std::sqrt(var / trials);
      }
      break;
    }
  }
  report["rounding"] = r;
  const int code = sol.report.converged ? kExitOk : kExitNotConverged;
  report["exit_code"] = code;
  if (f.timings) report["wall_seconds"] = {{"total", seconds_since(start)}};
  emit(report, f.out, out);
  return code;
}

struct GenFlags {
  std::string kind;
  std::string spec;
  std::string instance;
  std::string out;
  int n = 0;
  double p = 0.5;
  int k = 3;
  int m = 0;
  std::uint64_t seed = 0;
  SpecParams params;
};

int cmd_gen(GenFlags g, std::ostream& out) {
  if (g.kind.empty() == g.spec.empty()) throw ParseError("gen needs exactly one of --kind or --spec");
  if (!g.kind.empty()) {
    Instance inst = [&] {
      if (g.kind == "cycle") return make_cycle(g.n);
      if (g.kind == "gnp") return make_gnp(g.n, g.p, g.seed);
      if (g.kind == "tournament") return make_tournament(g.n, g.seed);
      if (g.kind == "allequal") return make_allequal(g.n, g.k, g.m > 0 ? g.m : 2 * g.n, g.seed);
      throw ParseError("unknown generator kind '" + g.kind + "'");
    }();
    emit(json::parse(instance_to_json(inst)), g.out, out);
    return kExitOk;
  }
  if (g.instance.empty()) throw ParseError("gen --spec needs --instance for the nominal weights");
  const Instance inst = load_instance(g.instance);
  g.params.seed = g.seed;
  UncertaintySpec spec = [&] {
    if (g.spec == "singleton") return make_singleton_spec(inst);
    if (g.spec == "box") return make_box_spec(inst, g.params.width);
    if (g.spec == "ellipsoid" || g.spec == "ellipsoidal") return make_ellipsoid_spec(inst, g.params.width);
    if (g.spec == "wasserstein") return make_wasserstein_spec(inst, g.params);
    throw ParseError("unknown spec kind '" + g.spec + "'");
  }();
  emit(json::parse(spec_to_json(spec)), g.out, out);
  return kExitOk;
}

struct BenchFlags {
  std::vector<int> sizes{8, 16, 32};
  std::string kind = "gnp";
  std::string spec = "box";
  double p = 0.5;
  double width = 0.2;
  std::uint64_t seed = 0;
  std::string out;
};

// Wall-clock numbers make bench output inherently run dependent.
int cmd_bench(const BenchFlags& b, std::ostream& out) {
  json rows = json::array();
  bool all_converged = true;
  for (int n : b.sizes) {
    Instance inst = b.kind == "cycle"        ? make_cycle(n)
                    : b.kind == "tournament" ? make_tournament(n, b.seed)
                    : b.kind == "gnp"        ? make_gnp(n, b.p, b.seed)
                                             : throw ParseError("bench supports cycle, gnp and tournament");
    UncertaintySpec spec = b.spec == "singleton"   ? make_singleton_spec(inst)
                           : b.spec == "box"       ? make_box_spec(inst, b.width)
                           : b.spec == "ellipsoid" ? make_ellipsoid_spec(inst, b.width)
                           : b.spec == "wasserstein"
                               ? make_wasserstein_spec(inst, SpecParams{b.width, 0.1, 3, b.seed})
                               : throw ParseError("unknown spec kind '" + b.spec + "'");
    SolverConfig cfg;
    cfg.seed = b.seed;
    const auto start = Clock::now();
    const auto sol = solve_robust(inst, spec, cfg);
    const double secs = seconds_since(start);
    all_converged = all_converged && sol.report.converged;
    rows.push_back({{"n", n},
                    {"weights", inst.weight_count()},
                    {"value", sol.value},
                    {"upper_bound", sol.upper_bound},
                    {"iterations", sol.report.iterations},
                    {"converged", sol.report.converged},
                    {"wall_seconds", secs}});
  }
  json report{{"command", "bench"}, {"kind", b.kind}, {"spec_kind", b.spec}, {"seed", b.seed}, {"rows", rows}};
  emit(report, b.out, out);
  return all_converged ? kExitOk : kExitNotConverged;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust and distributionally robust Max-Cut via SDP relaxation and rounding",
               "robustcut"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  SolveFlags solve_flags;
  std::string csv;
  auto* solve = app.add_subcommand("solve", "Solve the relaxation, round and evaluate");
  add_solve_flags(solve, solve_flags);
  solve->add_option("--csv", csv, "Per-edge contribution table");

  SolveFlags verify_flags;
  VerifyFlags verify_extra;
  double corrupt = 0.0;
  auto* verify = app.add_subcommand("verify", "Certify the rounding guarantees against brute force");
  add_solve_flags(verify, verify_flags);
  verify->add_option("--samples", verify_extra.samples, "Random feasible weightings to check")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--mc-trials", verify_extra.mc_trials, "Monte-Carlo draws for allequal")
      ->check(CLI::Range(2, 100000000));
  auto* corrupt_opt = verify->add_option("--corrupt-value", corrupt,
                                         "Test hook: replace the solver value before certifying");

  SolveFlags round_flags;
  std::string scheme;
  auto* round = app.add_subcommand("round", "Solve and report rounding statistics");
  add_solve_flags(round, round_flags);
  round->add_option("--scheme", scheme, "uniform, dicut_uniform, allequal_biased or sign_psd");

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "Generate a random instance or uncertainty set");
  gen->add_option("--kind", gen_flags.kind, "cycle, gnp, tournament or allequal");
  gen->add_option("--spec", gen_flags.spec, "singleton, box, ellipsoid or wasserstein");
  gen->add_option("--instance", gen_flags.instance, "Instance supplying nominal weights (with --spec)");
  gen->add_option("--n", gen_flags.n, "Vertex or variable count");
  gen->add_option("--p", gen_flags.p, "Edge probability for gnp");
  gen->add_option("--k", gen_flags.k, "Clause arity for allequal");
  gen->add_option("--m", gen_flags.m, "Clause count for allequal (default 2n)");
  gen->add_option("--seed", gen_flags.seed, "Generator seed");
  gen->add_option("--width", gen_flags.params.width, "Relative width of box, ellipsoid or support");
  gen->add_option("--radius", gen_flags.params.radius, "Wasserstein radius");
  gen->add_option("--support", gen_flags.params.support, "Wasserstein support size");
  gen->add_option("--out", gen_flags.out, "Output path (default: stdout)");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Time the saddle solver on generated instances");
  bench->add_option("--sizes", bench_flags.sizes, "Instance sizes")->delimiter(',');
  bench->add_option("--kind", bench_flags.kind, "cycle, gnp or tournament");
  bench->add_option("--spec", bench_flags.spec, "singleton, box, ellipsoid or wasserstein");
  bench->add_option("--p", bench_flags.p, "Edge probability for gnp");
  bench->add_option("--width", bench_flags.width, "Relative set width");
  bench->add_option("--seed", bench_flags.seed, "Generator and solver seed");
  bench->add_option("--out", bench_flags.out, "Output path (default: stdout)");

  std::vector<std::string> argv_storage{"robustcut"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "robustcut: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*solve) return cmd_solve(solve_flags, csv, out);
    if (*verify) {
      if (corrupt_opt->count() > 0) verify_extra.corrupt_value = corrupt;
      return cmd_verify(verify_flags, verify_extra, out);
    }
    if (*round) return cmd_round(round_flags, scheme, out);
    if (*gen) return cmd_gen(gen_flags, out);
    if (*bench) return cmd_bench(bench_flags, out);
  } catch (const NumericError& e) {
    err << "robustcut: numeric failure: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const std::exception& e) {
    err << "robustcut: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace robustcut::cli
