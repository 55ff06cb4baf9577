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

// One entry point over every objective and mode.

#ifndef ERENT_SOLVER_H_
#define ERENT_SOLVER_H_

#include <optional>
#include <variant>

#include "erent/model.h"
#include "erent/tardy_weight.h"

namespace erent {

struct SolverOptions {
  TardyOptions tardy;
};

// Budget and composite modes give a Solution (empty when infeasible);
// Pareto gives a front.
using SolveResult = std::variant<std::optional<Solution>, ParetoFront>;

SolveResult solve(const Instance& instance, const ProblemSpec& spec,
                  const SolverOptions& options = {});

}  // namespace erent

#endif  // ERENT_SOLVER_H_
