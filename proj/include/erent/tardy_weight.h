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

// Exact solvers for total weight of tardy jobs with a rental-period
// criterion, over an EDD view.
//
// Some optimal sequence has the shape X, Y, (r-jobs not in Y), Z, rest:
// X and Z hold on-time o-jobs, Y holds on-time jobs of either kind, every
// o-job of X and Y precedes every job of Z in EDD order, and the rest is
// tardy. With kappa = min Z, Y splits into Y' below kappa and the r-jobs Y''
// at or above kappa. A four-index recursion picks X and Y' for a guessed
// t = p(X); two single-machine on-time suffix programs pick Y'' and Z.
//
// The cost is O(n P^4), so instances whose total processing time exceeds a
// cap are rejected with TooLarge.

#ifndef ERENT_TARDY_WEIGHT_H_
#define ERENT_TARDY_WEIGHT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "erent/model.h"
#include "erent/ordered_view.h"

namespace erent {

inline constexpr int64_t kDefaultTardyProcessingCap = 64;

struct TardyOptions {
  // Largest total processing time accepted.
  int64_t max_processing = kDefaultTardyProcessingCap;
};

enum class JobFilter { kResourceOnly, kOrdinaryOnly };

// For every kappa in [0, n] and offset s: the heaviest set S of filtered
// positions >= kappa such that, processed in view order from time s, every
// job of S completes by its due date.
class OnTimeSuffix {
 public:
  // Throws std::invalid_argument for a non-EDD view.
  OnTimeSuffix(const OrderedView& view, JobFilter filter);

  // Exact for offsets up to P; 0 when the offset exceeds every due date.
  // Throws std::out_of_range for other offsets above P.
  int64_t weight(std::size_t kappa, int64_t offset) const;
  std::vector<std::size_t> set(std::size_t kappa, int64_t offset) const;

 private:
  bool in_range(std::size_t kappa, int64_t offset) const;
  int64_t cell(std::size_t kappa, int64_t offset) const {
    return values_[kappa * (max_offset_ + 1) + offset];
  }

  std::vector<Job> jobs_;
  std::vector<bool> eligible_;
  int64_t total_ = 0;
  int64_t max_due_ = 0;
  int64_t max_offset_ = 0;
  std::vector<int64_t> values_;
};

// One stage of the X / Y' recursion for a fixed t: the heaviest disjoint
// X (o-jobs, on time from 0) and Y' (any jobs, on time from t) among the
// processed positions, keyed by p(X), p(Y') and p(Y' o-jobs).
class Theta5Layer {
 public:
  Theta5Layer(int64_t t, int64_t max_x, int64_t max_y, int64_t max_y_ordinary);

  int64_t t() const { return t_; }
  int64_t max_x() const { return max_x_; }
  int64_t max_y() const { return max_y_; }
  int64_t max_y_ordinary() const { return max_yo_; }

  // Empty for unreachable or out-of-range states.
  std::optional<int64_t> at(int64_t x, int64_t y, int64_t y_ordinary) const;

 private:
  friend class Theta5Runner;
  std::size_t index(int64_t x, int64_t y, int64_t yo) const {
    return (static_cast<std::size_t>(x) * (max_y_ + 1) + y) * (max_yo_ + 1) + yo;
  }

  int64_t t_;
  int64_t max_x_;
  int64_t max_y_;
  int64_t max_yo_;
  std::vector<int64_t> cells_;  // -1 marks unreachable
};

// The recursion after the first `stage` view positions, with p(X) and p(Y')
// up to P and p(Y' o-jobs) up to `max_y_ordinary`.
Theta5Layer theta5_layer(const OrderedView& view, int64_t t, int64_t max_y_ordinary,
                         std::size_t stage);

// One build answers every er budget.
class TardyTables {
 public:
  // Throws std::invalid_argument for a non-EDD view and TooLarge when P
  // exceeds options.max_processing.
  explicit TardyTables(const OrderedView& view, TardyOptions options = {});

  const OrderedView& view() const { return view_; }

  // Largest on-time weight over sequences with er <= er_limit. Empty when
  // er_limit < p(J^r) (or er_limit < 0 without r-jobs).
  std::optional<int64_t> best_on_time_weight(int64_t er_limit) const;
  // A sequence attaining best_on_time_weight(er_limit).
  Sequence witness(int64_t er_limit) const;

 private:
  struct Choice {
    int64_t weight = -1;
    std::size_t kappa = 0;
    int64_t t = 0;
    int64_t y = 0;
    int64_t y_ordinary = 0;
  };

  const Choice* choice(int64_t er_limit) const;
  static const OrderedView& admit(const OrderedView& view, const TardyOptions& options);

  OrderedView view_;
  int64_t resource_processing_ = 0;
  bool has_resource_ = false;
  OnTimeSuffix resource_suffix_;
  OnTimeSuffix ordinary_suffix_;
  // best_[s]: best choice with p(Y' o-jobs) <= s.
  std::vector<Choice> best_;
};

std::optional<Solution> solve_er_budget_wu(const Instance& instance, int64_t er_limit,
                                           TardyOptions options = {});
// Binary search over er budgets on one shared build.
std::optional<Solution> solve_wu_budget_er(const Instance& instance, int64_t wu_limit,
                                           TardyOptions options = {});
ParetoFront pareto_wu(const Instance& instance, TardyOptions options = {});

}  // namespace erent

#endif  // ERENT_TARDY_WEIGHT_H_
