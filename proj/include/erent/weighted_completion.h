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

// Exact solvers for total (weighted) completion time with a rental-period
// criterion: er-budget, cost-budget and the full (er, cost) front.
//
// All three rest on one structure: some optimal sequence keeps the WSPT
// order except that a set X of o-jobs between the first and last r-job moves
// in front of the first r-job and a disjoint set Y, all of whose members
// follow every member of X, moves behind the last r-job. The tables hold,
// for every split position kappa and processing amount rho, the cheapest
// such X below kappa and the cheapest such Y at or above kappa.

#ifndef ERENT_WEIGHTED_COMPLETION_H_
#define ERENT_WEIGHTED_COMPLETION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "erent/model.h"
#include "erent/ordered_view.h"
#include "erent/pair_search.h"

namespace erent {

enum class XYMethod {
  kProcessingIndexed,  // states (j, rho'), one pass per rho; n * P * rho_max
  kWeightIndexed,      // states (j, rho', omega), one pass; n * P * W
};

// Prefix and suffix tables over a WSPT view.
//
// prefix_cost(kappa, rho): cheapest weighted completion of positions
// [alpha, kappa) when X is a subset of the between positions below kappa
// with p(X) = rho and X runs right at the start of the first r-job.
// suffix_cost(kappa, rho): the same for positions [kappa, beta] with Y
// taken at or above kappa and run right after the last r-job.
// Split positions run over (alpha, beta]; without a window, or with
// alpha == beta, the range is empty.
class XYTables {
 public:
  const OrderedView& view() const { return view_; }
  XYMethod method() const { return method_; }
  int64_t max_rho() const { return prefix_.max_rho(); }
  std::size_t first_split() const { return prefix_.first_kappa(); }
  std::size_t last_split() const { return prefix_.last_kappa(); }
  bool empty() const { return first_split() > last_split(); }

  std::optional<int64_t> prefix_cost(std::size_t kappa, int64_t rho) const {
    return prefix_.at(kappa, rho);
  }
  std::optional<int64_t> suffix_cost(std::size_t kappa, int64_t rho) const {
    return suffix_.at(kappa, rho);
  }
  const SplitTable& prefix_table() const { return prefix_; }
  const SplitTable& suffix_table() const { return suffix_; }

  // A set attaining the cell, as ascending view positions. Throws
  // std::out_of_range for an unreachable cell.
  std::vector<std::size_t> prefix_set(std::size_t kappa, int64_t rho) const;
  std::vector<std::size_t> suffix_set(std::size_t kappa, int64_t rho) const;

 private:
  XYTables(OrderedView view, XYMethod method, SplitTable prefix, SplitTable suffix)
      : view_(std::move(view)),
        method_(method),
        prefix_(std::move(prefix)),
        suffix_(std::move(suffix)) {}

  friend XYTables build_xy_tables_theta1(const OrderedView&, int64_t);
  friend XYTables build_xy_tables_theta2(const OrderedView&, int64_t);

  OrderedView view_;
  XYMethod method_;
  SplitTable prefix_;
  SplitTable suffix_;
};

// Both throw std::invalid_argument for a non-WSPT view or rho_max < 0.
XYTables build_xy_tables_theta1(const OrderedView& view, int64_t rho_max);
XYTables build_xy_tables_theta2(const OrderedView& view, int64_t rho_max);

// theta1 when P <= W, theta2 otherwise; rho_max is p(between).
XYTables build_xy_tables(const OrderedView& view);

// Weighted completion of the positions before alpha and after beta, which
// no five-block sequence moves. 0 without a window.
int64_t outer_weighted_cost(const OrderedView& view);

// Pair search with the outer cost folded in, so `cost` is the full twc.
std::optional<PairSearchResult> pair_search(const XYTables& tables, const PairSearchMode& mode);

// The five-block sequence a pair-search result describes.
Sequence assemble_sequence(const XYTables& tables, const PairSearchResult& result);

// Empty optional when infeasible.
std::optional<Solution> solve_er_budget_twc(const Instance& instance, int64_t er_limit);
std::optional<Solution> solve_twc_budget_er(const Instance& instance, int64_t twc_limit);
ParetoFront pareto_twc(const Instance& instance);

// Unit-weight delegates. Solutions are evaluated on the original instance;
// gamma in the front is tc.
std::optional<Solution> solve_er_budget_tc(const Instance& instance, int64_t er_limit);
std::optional<Solution> solve_tc_budget_er(const Instance& instance, int64_t tc_limit);
ParetoFront pareto_tc(const Instance& instance);

}  // namespace erent

#endif  // ERENT_WEIGHTED_COMPLETION_H_
