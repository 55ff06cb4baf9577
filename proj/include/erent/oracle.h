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

// Brute-force reference solver: evaluates every permutation.

#ifndef ERENT_ORACLE_H_
#define ERENT_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "erent/model.h"

namespace erent {

inline constexpr std::size_t kDefaultOracleJobCap = 8;

struct OracleOptions {
  std::size_t max_jobs = kDefaultOracleJobCap;
};

// One distinct (er, gamma) pair and the lexicographically smallest
// permutation attaining it.
struct OracleEntry {
  int64_t er = 0;
  int64_t gamma = 0;
  Sequence witness;
};

class OracleReport {
 public:
  // Throws TooLarge when the instance has more than options.max_jobs jobs.
  OracleReport(const Instance& instance, Objective objective, OracleOptions options = {});

  Objective objective() const { return objective_; }
  // Sorted by (er, gamma).
  const std::vector<OracleEntry>& table() const { return table_; }

  // Ties on the optimized value go to the lexicographically smallest
  // witness. Empty optional when infeasible.
  std::optional<Solution> er_budget(int64_t er_limit) const;
  std::optional<Solution> gamma_budget(int64_t gamma_limit) const;
  Solution composite(int64_t lambda) const;
  ParetoFront pareto() const;

 private:
  std::optional<Solution> best(auto&& admissible, auto&& value) const;

  Instance instance_;
  Objective objective_;
  std::vector<OracleEntry> table_;
};

// Solution for budget modes (empty when infeasible), Solution for Composite,
// ParetoFront for Pareto.
using OracleResult = std::variant<std::optional<Solution>, ParetoFront>;

OracleResult brute_force(const Instance& instance, const ProblemSpec& spec,
                         OracleOptions options = {});

}  // namespace erent

#endif  // ERENT_ORACLE_H_
