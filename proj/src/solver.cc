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

#include "erent/solver.h"

#include "erent/composite.h"
#include "erent/max_lateness.h"
#include "erent/weighted_completion.h"

namespace erent {
namespace {

std::optional<Solution> er_budget(const Instance& instance, Objective objective, int64_t limit,
                                  const SolverOptions& options) {
  switch (objective) {
    case Objective::kTotalCompletion:
      return solve_er_budget_tc(instance, limit);
    case Objective::kWeightedCompletion:
      return solve_er_budget_twc(instance, limit);
    case Objective::kMaxLateness:
      return solve_er_budget_lmax(instance, limit);
    case Objective::kWeightedTardy:
      return solve_er_budget_wu(instance, limit, options.tardy);
  }
  return std::nullopt;
}

std::optional<Solution> gamma_budget(const Instance& instance, Objective objective,
                                     int64_t limit, const SolverOptions& options) {
  switch (objective) {
    case Objective::kTotalCompletion:
      return solve_tc_budget_er(instance, limit);
    case Objective::kWeightedCompletion:
      return solve_twc_budget_er(instance, limit);
    case Objective::kMaxLateness:
      return solve_lmax_budget_er(instance, limit);
    case Objective::kWeightedTardy:
      return solve_wu_budget_er(instance, limit, options.tardy);
  }
  return std::nullopt;
}

ParetoFront pareto(const Instance& instance, Objective objective, const SolverOptions& options) {
  switch (objective) {
    case Objective::kTotalCompletion:
      return pareto_tc(instance);
    case Objective::kWeightedCompletion:
      return pareto_twc(instance);
    case Objective::kMaxLateness:
      return pareto_lmax(instance);
    case Objective::kWeightedTardy:
      return pareto_wu(instance, options.tardy);
  }
  return {};
}

Solution composite(const Instance& instance, Objective objective, int64_t lambda,
                   const SolverOptions& options) {
  if (objective == Objective::kTotalCompletion) return solve_composite_tc(instance, lambda);
  if (objective == Objective::kWeightedCompletion) return solve_composite_twc(instance, lambda);
  return solve_composite_via_pareto(instance, objective, lambda, options.tardy);
}

}  // namespace

SolveResult solve(const Instance& instance, const ProblemSpec& spec,
                  const SolverOptions& options) {
  if (const auto* m = std::get_if<ErBudget>(&spec.mode)) {
    return er_budget(instance, spec.objective, m->limit, options);
  }
  if (const auto* m = std::get_if<GammaBudget>(&spec.mode)) {
    return gamma_budget(instance, spec.objective, m->limit, options);
  }
  if (const auto* m = std::get_if<Composite>(&spec.mode)) {
    return std::optional<Solution>(composite(instance, spec.objective, m->lambda, options));
  }
  return pareto(instance, spec.objective, options);
}

}  // namespace erent
