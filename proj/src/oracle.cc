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

#include "erent/oracle.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "erent/errors.h"

namespace erent {

OracleReport::OracleReport(const Instance& instance, Objective objective, OracleOptions options)
    : instance_(instance), objective_(objective) {
  if (instance.size() > options.max_jobs) {
    throw TooLarge("oracle accepts at most " + std::to_string(options.max_jobs) + " jobs, got " +
                   std::to_string(instance.size()));
  }
  Sequence perm;
  for (const Job& j : instance.jobs()) perm.push_back(j.id);
  std::sort(perm.begin(), perm.end());
  // Permutations come in lexicographic order, so the first witness of a
  // pair is the smallest.
  std::map<std::pair<int64_t, int64_t>, Sequence> seen;
  do {
    const ScheduleMetrics m = evaluate(instance, perm);
    seen.try_emplace({m.er, scheduling_cost(m, objective)}, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& [key, witness] : seen) {
    table_.push_back({key.first, key.second, std::move(witness)});
  }
}

std::optional<Solution> OracleReport::best(auto&& admissible, auto&& value) const {
  const OracleEntry* pick = nullptr;
  for (const OracleEntry& e : table_) {
    if (!admissible(e)) continue;
    if (pick == nullptr || value(e) < value(*pick) ||
        (value(e) == value(*pick) && e.witness < pick->witness)) {
      pick = &e;
    }
  }
  if (pick == nullptr) return std::nullopt;
  return make_solution(instance_, pick->witness);
}

std::optional<Solution> OracleReport::er_budget(int64_t er_limit) const {
  return best([&](const OracleEntry& e) { return e.er <= er_limit; },
              [](const OracleEntry& e) { return e.gamma; });
}

std::optional<Solution> OracleReport::gamma_budget(int64_t gamma_limit) const {
  return best([&](const OracleEntry& e) { return e.gamma <= gamma_limit; },
              [](const OracleEntry& e) { return e.er; });
}

Solution OracleReport::composite(int64_t lambda) const {
  return *best([](const OracleEntry&) { return true; },
               [&](const OracleEntry& e) { return e.gamma + lambda * e.er; });
}

ParetoFront OracleReport::pareto() const {
  std::vector<ParetoPoint> points;
  for (const OracleEntry& e : table_) points.push_back({e.er, e.gamma, e.witness});
  return nondominated(std::move(points));
}

OracleResult brute_force(const Instance& instance, const ProblemSpec& spec,
                         OracleOptions options) {
  const OracleReport report(instance, spec.objective, options);
  if (const auto* m = std::get_if<ErBudget>(&spec.mode)) return report.er_budget(m->limit);
  if (const auto* m = std::get_if<GammaBudget>(&spec.mode)) return report.gamma_budget(m->limit);
  if (const auto* m = std::get_if<Composite>(&spec.mode)) {
    return std::optional<Solution>(report.composite(m->lambda));
  }
  return report.pareto();
}

}  // namespace erent
