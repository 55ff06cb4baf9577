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

// Exact solvers for maximum lateness with a rental-period criterion.
//
// Same five-block structure as for weighted completion, over an EDD view.
// prefix_lateness(kappa, rho) is the smallest max lateness of positions
// [alpha, kappa) over sets X below kappa with p(X) = rho, and
// suffix_lateness(kappa, rho) the same for positions [kappa, beta] and sets
// Y at or above kappa. Partial values combine with max.

#ifndef ERENT_MAX_LATENESS_H_
#define ERENT_MAX_LATENESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "erent/model.h"
#include "erent/ordered_view.h"
#include "erent/pair_search.h"

namespace erent {

class LmaxTables {
 public:
  // Throws std::invalid_argument for a non-EDD view. Split positions cover
  // (alpha, beta]; the range is empty without a window or when alpha == beta.
  explicit LmaxTables(const OrderedView& view);

  const OrderedView& view() const { return view_; }
  int64_t max_rho() const { return prefix_.max_rho(); }
  std::size_t first_split() const { return prefix_.first_kappa(); }
  std::size_t last_split() const { return prefix_.last_kappa(); }
  bool empty() const { return first_split() > last_split(); }

  std::optional<int64_t> prefix_lateness(std::size_t kappa, int64_t rho) const {
    return prefix_.at(kappa, rho);
  }
  std::optional<int64_t> suffix_lateness(std::size_t kappa, int64_t rho) const {
    return suffix_.at(kappa, rho);
  }
  const SplitTable& prefix_table() const { return prefix_; }
  const SplitTable& suffix_table() const { return suffix_; }

  // Ascending view positions. Throw std::out_of_range for unreachable cells.
  std::vector<std::size_t> prefix_set(std::size_t kappa, int64_t rho) const;
  std::vector<std::size_t> suffix_set(std::size_t kappa, int64_t rho) const;

 private:
  OrderedView view_;
  SplitTable prefix_;
  SplitTable suffix_;
  // took_prefix_[kappa][rho]: the job at kappa - 1 joined X on the way to
  // (kappa, rho). took_suffix_[kappa][rho]: the job at kappa joined Y.
  std::vector<std::vector<unsigned char>> took_prefix_;
  std::vector<std::vector<unsigned char>> took_suffix_;
};

// Max lateness of the positions before alpha and after beta; empty when
// there are none. Without a window: max lateness of the whole view.
std::optional<int64_t> outer_lateness(const OrderedView& view);

// Max lateness of positions [alpha, kappa) in the five-block sequence with
// sets (x, {}), and of positions [kappa, beta] with sets ({}, y). Computed by
// evaluating the sequence; used to check the table recursions.
int64_t direct_prefix_lateness(const OrderedView& view, std::span<const std::size_t> x,
                               std::size_t kappa);
int64_t direct_suffix_lateness(const OrderedView& view, std::span<const std::size_t> y,
                               std::size_t kappa);

std::optional<PairSearchResult> pair_search(const LmaxTables& tables, const PairSearchMode& mode);
Sequence assemble_sequence(const LmaxTables& tables, const PairSearchResult& result);

std::optional<Solution> solve_er_budget_lmax(const Instance& instance, int64_t er_limit);
std::optional<Solution> solve_lmax_budget_er(const Instance& instance, int64_t lmax_limit);
ParetoFront pareto_lmax(const Instance& instance);

}  // namespace erent

#endif  // ERENT_MAX_LATENESS_H_
