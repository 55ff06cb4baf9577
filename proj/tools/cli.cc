// Copyright 2026 The erent Authors
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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "erent/errors.h"
#include "erent/io.h"
#include "erent/oracle.h"
#include "erent/reductions.h"
#include "erent/solver.h"

namespace erent {
namespace {

struct ProblemFlags {
  std::string input;
  std::string output;
  std::string objective;
  std::string mode;
  std::optional<int64_t> budget;
  std::optional<int64_t> lambda;
  int64_t tardy_cap = kDefaultTardyProcessingCap;
};

struct GenFlags {
  std::string kind;
  int n = 5;
  int64_t p_max = 5;
  int64_t w_max = 5;
  std::optional<int64_t> d_max;
  double r_fraction = 0.4;
  uint64_t seed = 0;
  std::string numbers;
  std::string output;
};

// Raised for bad flag combinations the parser cannot see.
struct UsageError : Error {
  using Error::Error;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& f, bool with_mode) {
  cmd->add_option("--input", f.input, "instance document")->required();
  cmd->add_option("--output", f.output, "write the document here instead of stdout");
  cmd->add_option("--objective", f.objective, "tc, twc, lmax or wu")
      ->check(CLI::IsMember({"tc", "twc", "lmax", "wu"}));
  if (with_mode) {
    cmd->add_option("--mode", f.mode, "er-budget, gamma-budget, composite or pareto")
        ->check(CLI::IsMember({"er-budget", "gamma-budget", "composite", "pareto"}));
    auto* budget = cmd->add_option("--budget", f.budget, "K^r or K^gamma");
    auto* lambda = cmd->add_option("--lambda", f.lambda, "rental cost per time unit");
    budget->excludes(lambda);
  }
  cmd->add_option("--tardy-cap", f.tardy_cap, "largest P accepted by the wu solver")
      ->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Flags override the document's own spec.
ProblemSpec resolve_spec(const ProblemFlags& f, const std::optional<ProblemSpec>& from_doc,
                         bool force_pareto) {
  ProblemSpec spec;
  if (!f.objective.empty()) {
    spec.objective = *parse_objective(f.objective);
  } else if (from_doc) {
    spec.objective = from_doc->objective;
  } else {
    throw UsageError("--objective is required (the document names no spec)");
  }
  if (force_pareto) {
    spec.mode = Pareto{};
    return spec;
  }
  if (!f.mode.empty()) {
    const auto mode = make_mode(f.mode, f.budget, f.lambda);
    if (!mode) {
      throw UsageError("--mode " + f.mode + " needs " +
                       (f.mode == "composite" ? "--lambda >= 0"
                        : f.mode == "pareto"  ? "neither --budget nor --lambda"
                                              : "--budget"));
    }
    spec.mode = *mode;
  } else if (from_doc) {
    spec.mode = from_doc->mode;
  } else {
    throw UsageError("--mode is required (the document names no spec)");
  }
  return spec;
}

std::string describe(const ProblemSpec& spec) {
  std::string text = std::string(objective_name(spec.objective)) + " " +
                     std::string(mode_name(spec.mode));
  if (const auto* m = std::get_if<ErBudget>(&spec.mode)) text += " " + std::to_string(m->limit);
  if (const auto* m = std::get_if<GammaBudget>(&spec.mode)) {
    text += " " + std::to_string(m->limit);
  }
  if (const auto* m = std::get_if<Composite>(&spec.mode)) {
    text += " lambda " + std::to_string(m->lambda);
  }
  return text;
}

void emit(const std::string& document, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << document;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + output);
  file << document;
}

int emit_result(const SolveResult& result, const ProblemSpec& spec, const std::string& output,
                std::ostream& out, std::ostream& err) {
  if (const auto* front = std::get_if<ParetoFront>(&result)) {
    emit(pareto_document(*front), output, out);
    err << describe(spec) << ": " << front->size() << " points\n";
    return kExitOk;
  }
  const auto& solution = std::get<std::optional<Solution>>(result);
  if (!solution) {
    emit(infeasible_document(spec, "no sequence satisfies the budget"), output, out);
    err << describe(spec) << ": infeasible\n";
    return kExitInfeasible;
  }
  emit(solution_document(*solution, spec), output, out);
  err << describe(spec) << ": objective " << mode_objective(solution->metrics, spec) << ", er "
      << solution->metrics.er << "\n";
  return kExitOk;
}

int run_solve(const ProblemFlags& f, bool pareto, std::ostream& out, std::ostream& err) {
  const InstanceDocument doc = parse_document(read_file(f.input));
  const ProblemSpec spec = resolve_spec(f, doc.spec, pareto);
  SolverOptions options;
  options.tardy.max_processing = f.tardy_cap;
  return emit_result(solve(doc.instance, spec, options), spec, f.output, out, err);
}

// Objective-level comparison: the witnesses may differ.
bool same_result(const SolveResult& a, const SolveResult& b, const ProblemSpec& spec) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<ParetoFront>(&a)) {
    const auto& fb = std::get<ParetoFront>(b);
    return std::equal(fa->begin(), fa->end(), fb.begin(), fb.end(),
                      [](const ParetoPoint& x, const ParetoPoint& y) {
                        return x.er == y.er && x.gamma == y.gamma;
                      });
  }
  const auto& sa = std::get<std::optional<Solution>>(a);
  const auto& sb = std::get<std::optional<Solution>>(b);
  if (sa.has_value() != sb.has_value()) return false;
  return !sa || mode_objective(sa->metrics, spec) == mode_objective(sb->metrics, spec);
}

std::string result_summary(const SolveResult& r, const ProblemSpec& spec) {
  if (const auto* front = std::get_if<ParetoFront>(&r)) {
    std::string text;
    for (const ParetoPoint& p : *front) {
      text += "(" + std::to_string(p.er) + "," + std::to_string(p.gamma) + ")";
    }
    return text;
  }
  const auto& s = std::get<std::optional<Solution>>(r);
  if (!s) return "infeasible";
  return "objective " + std::to_string(mode_objective(s->metrics, spec)) + " er " +
         std::to_string(s->metrics.er);
}

int run_verify(const ProblemFlags& f, std::ostream& out, std::ostream& err) {
  const InstanceDocument doc = parse_document(read_file(f.input));
  const ProblemSpec spec = resolve_spec(f, doc.spec, false);
  SolverOptions options;
  options.tardy.max_processing = f.tardy_cap;
  const OracleResult oracle = brute_force(doc.instance, spec);
  const SolveResult solver = solve(doc.instance, spec, options);
  const bool match = same_result(solver, oracle, spec);
  std::ostringstream doc_out;
  doc_out << "{\"match\":" << (match ? "true" : "false") << ",\"solver\":\""
          << result_summary(solver, spec) << "\",\"oracle\":\"" << result_summary(oracle, spec)
          << "\"}\n";
  emit(doc_out.str(), f.output, out);
  err << describe(spec) << ": solver " << result_summary(solver, spec) << ", oracle "
      << result_summary(oracle, spec) << (match ? "" : "  MISMATCH") << "\n";
  return match ? kExitOk : kExitMismatch;
}

int run_gen(const GenFlags& g, std::ostream& out, std::ostream& err) {
  if (g.kind == "random") {
    RandomInstanceSpec spec;
    spec.n = g.n;
    spec.p_max = g.p_max;
    spec.w_max = g.w_max;
    spec.d_max = g.d_max;
    spec.r_fraction = g.r_fraction;
    spec.seed = g.seed;
    Instance instance = [&] {
      try {
        return random_instance(spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    emit(serialize_instance(instance), g.output, out);
    err << "random instance with " << instance.size() << " jobs\n";
    return kExitOk;
  }
  if (g.numbers.empty()) throw UsageError("--kind " + g.kind + " needs --numbers");
  const std::vector<int64_t> numbers = parse_numbers(g.numbers);
  const Reduction r = g.kind == "evenodd" ? evenodd_reduction(numbers) : partition_reduction(numbers);
  emit(serialize_instance(r.instance, r.spec, r.certificate.lines()), g.output, out);
  err << g.kind << " instance with " << r.instance.size() << " jobs, answer "
      << (r.certificate.yes ? "yes" : "no") << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact single-machine scheduling with one rented resource", "erent"};
  app.require_subcommand(1);

  ProblemFlags solve_flags;
  ProblemFlags pareto_flags;
  ProblemFlags verify_flags;
  GenFlags gen_flags;
  auto* solve_cmd = app.add_subcommand("solve", "solve a budgeted or composite problem");
  add_problem_flags(solve_cmd, solve_flags, true);
  auto* pareto_cmd = app.add_subcommand("pareto", "enumerate the (er, cost) front");
  add_problem_flags(pareto_cmd, pareto_flags, false);
  auto* verify_cmd = app.add_subcommand("verify", "compare the solver with brute force");
  add_problem_flags(verify_cmd, verify_flags, true);
  auto* gen_cmd = app.add_subcommand("gen", "write an instance document");
  gen_cmd->add_option("--kind", gen_flags.kind, "random, evenodd or partition")
      ->required()
      ->check(CLI::IsMember({"random", "evenodd", "partition"}));
  gen_cmd->add_option("--n", gen_flags.n, "job count");
  gen_cmd->add_option("--pmax", gen_flags.p_max, "largest processing time");
  gen_cmd->add_option("--wmax", gen_flags.w_max, "largest weight");
  gen_cmd->add_option("--dmax", gen_flags.d_max, "largest due date (default P)");
  gen_cmd->add_option("--rfrac", gen_flags.r_fraction, "share of r-jobs");
  gen_cmd->add_option("--seed", gen_flags.seed, "random seed");
  gen_cmd->add_option("--numbers", gen_flags.numbers, "source list, e.g. 1,1,2");
  gen_cmd->add_option("--output", gen_flags.output, "write the document here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "erent: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_flags, false, out, err);
    if (pareto_cmd->parsed()) return run_solve(pareto_flags, true, out, err);
    if (verify_cmd->parsed()) return run_verify(verify_flags, out, err);
    return run_gen(gen_flags, out, err);
  } catch (const Error& e) {
    err << "erent: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace erent
