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

#include "erent/max_lateness.h"

#include <algorithm>
#include <stdexcept>

namespace erent {
namespace {

bool has_splits(const OrderedView& view) {
  return view.has_window() && *view.alpha() < *view.beta();
}

// Lateness of every view position in `sequence`, indexed by view position.
std::vector<int64_t> lateness_by_position(const OrderedView& view, const Sequence& sequence) {
  std::vector<int64_t> lateness(view.size(), 0);
  int64_t t = 0;
  for (JobId id : sequence) {
    const std::size_t pos = view.position_of(id);
    t += view.at(pos).p;
    lateness[pos] = t - view.at(pos).d;
  }
  return lateness;
}

}  // namespace

LmaxTables::LmaxTables(const OrderedView& view) : view_(view) {
  if (view.rule() != OrderRule::kEdd) {
    throw std::invalid_argument("lateness tables need an EDD view");
  }
  const int64_t rho_max = view.between_processing();
  if (!has_splits(view)) {
    prefix_ = SplitTable(1, 0, rho_max);
    suffix_ = SplitTable(1, 0, rho_max);
    return;
  }
  const std::size_t alpha = *view.alpha();
  const std::size_t beta = *view.beta();
  const int64_t end = view.prefix(beta + 1);
  prefix_ = SplitTable(alpha + 1, beta, rho_max);
  suffix_ = SplitTable(alpha + 1, beta, rho_max);
  took_prefix_.assign(beta + 1, std::vector<unsigned char>(rho_max + 1, 0));
  took_suffix_.assign(beta + 1, std::vector<unsigned char>(rho_max + 1, 0));

  prefix_.set(alpha + 1, 0, view.prefix(alpha + 1) - view.at(alpha).d);
  for (std::size_t k = alpha + 1; k < beta; ++k) {
    const Job& job = view.at(k);
    const int64_t stay = view.prefix(k + 1) - job.d;
    const bool movable = view.is_between(k);
    for (int64_t r = 0; r <= rho_max; ++r) {
      std::optional<int64_t> best;
      if (prefix_.reachable(k, r)) best = std::max(prefix_.value(k, r), stay);
      if (movable && r >= job.p && prefix_.reachable(k, r - job.p)) {
        const int64_t moved = prefix_.value(k, r - job.p) + job.p;
        if (!best || moved < *best) {
          best = moved;
          took_prefix_[k + 1][r] = 1;
        }
      }
      if (best) prefix_.set(k + 1, r, *best);
    }
  }

  suffix_.set(beta, 0, end - view.at(beta).d);
  for (std::size_t k = beta - 1; k > alpha; --k) {
    const Job& job = view.at(k);
    const int64_t stay = view.prefix(k + 1) - job.d;
    const bool movable = view.is_between(k);
    for (int64_t r = 0; r <= rho_max; ++r) {
      std::optional<int64_t> best;
      if (suffix_.reachable(k + 1, r)) best = std::max(suffix_.value(k + 1, r), stay);
      if (movable && r >= job.p && suffix_.reachable(k + 1, r - job.p)) {
        const int64_t moved =
            std::max(suffix_.value(k + 1, r - job.p), end - (r - job.p) - job.d);
        if (!best || moved < *best) {
          best = moved;
          took_suffix_[k][r] = 1;
        }
      }
      if (best) suffix_.set(k, r, *best);
    }
  }
}

std::vector<std::size_t> LmaxTables::prefix_set(std::size_t kappa, int64_t rho) const {
  if (!prefix_.reachable(kappa, rho)) throw std::out_of_range("unreachable prefix cell");
  std::vector<std::size_t> set;
  int64_t r = rho;
  for (std::size_t k = kappa; k > first_split(); --k) {
    if (took_prefix_[k][r]) {
      set.push_back(k - 1);
      r -= view_.at(k - 1).p;
    }
  }
  std::reverse(set.begin(), set.end());
  return set;
}

std::vector<std::size_t> LmaxTables::suffix_set(std::size_t kappa, int64_t rho) const {
  if (!suffix_.reachable(kappa, rho)) throw std::out_of_range("unreachable suffix cell");
  std::vector<std::size_t> set;
  int64_t r = rho;
  for (std::size_t k = kappa; k < last_split(); ++k) {
    if (took_suffix_[k][r]) {
      set.push_back(k);
      r -= view_.at(k).p;
    }
  }
  return set;
}

std::optional<int64_t> outer_lateness(const OrderedView& view) {
  std::optional<int64_t> worst;
  for (std::size_t j = 0; j < view.size(); ++j) {
    if (view.has_window() && j >= *view.alpha() && j <= *view.beta()) continue;
    const int64_t l = view.prefix(j + 1) - view.at(j).d;
    if (!worst || l > *worst) worst = l;
  }
  return worst;
}

int64_t direct_prefix_lateness(const OrderedView& view, std::span<const std::size_t> x,
                               std::size_t kappa) {
  const std::vector<int64_t> lateness =
      lateness_by_position(view, five_block_sequence(view, x, {}));
  return *std::max_element(lateness.begin() + *view.alpha(), lateness.begin() + kappa);
}

int64_t direct_suffix_lateness(const OrderedView& view, std::span<const std::size_t> y,
                               std::size_t kappa) {
  const std::vector<int64_t> lateness =
      lateness_by_position(view, five_block_sequence(view, {}, y));
  return *std::max_element(lateness.begin() + kappa, lateness.begin() + *view.beta() + 1);
}

std::optional<PairSearchResult> pair_search(const LmaxTables& tables,
                                            const PairSearchMode& mode) {
  if (tables.empty()) return std::nullopt;
  PairSearchProblem problem;
  problem.prefix = &tables.prefix_table();
  problem.suffix = &tables.suffix_table();
  problem.first_kappa = tables.first_split();
  problem.last_kappa = tables.last_split();
  problem.window_processing = tables.view().window_processing();
  problem.outer = outer_lateness(tables.view());
  problem.combine = Combine::kMax;
  return search_pairs(problem, mode);
}

Sequence assemble_sequence(const LmaxTables& tables, const PairSearchResult& result) {
  const std::vector<std::size_t> x = tables.prefix_set(result.kappa, result.rho_prefix);
  const std::vector<std::size_t> y = tables.suffix_set(result.kappa, result.rho_suffix);
  return five_block_sequence(tables.view(), x, y);
}

std::optional<Solution> solve_er_budget_lmax(const Instance& instance, int64_t er_limit) {
  if (er_limit < instance.resource_processing()) return std::nullopt;
  const OrderedView view(instance, OrderRule::kEdd);
  if (view.between().empty() || er_limit >= view.window_processing()) {
    return make_solution(instance, view.order());
  }
  const LmaxTables tables(view);
  const auto best = pair_search(tables, MinCostWindowAtMost{er_limit});
  if (!best) return std::nullopt;
  return make_solution(instance, assemble_sequence(tables, *best));
}

std::optional<Solution> solve_lmax_budget_er(const Instance& instance, int64_t lmax_limit) {
  const OrderedView view(instance, OrderRule::kEdd);
  if (view.between().empty()) {
    Solution plain = make_solution(instance, view.order());
    if (plain.metrics.lmax > lmax_limit) return std::nullopt;
    return plain;
  }
  const LmaxTables tables(view);
  const auto best = pair_search(tables, MinWindowCostAtMost{lmax_limit});
  if (!best) return std::nullopt;
  return make_solution(instance, assemble_sequence(tables, *best));
}

ParetoFront pareto_lmax(const Instance& instance) {
  const OrderedView view(instance, OrderRule::kEdd);
  if (view.between().empty()) {
    Solution plain = make_solution(instance, view.order());
    return {ParetoPoint{plain.metrics.er, plain.metrics.lmax, plain.sequence}};
  }
  const LmaxTables tables(view);
  std::vector<PairSearchResult> kept;
  for (int64_t window = instance.resource_processing(); window <= view.window_processing();
       ++window) {
    const auto r = pair_search(tables, MinCostWindowExactly{window});
    if (r && (kept.empty() || r->cost < kept.back().cost)) kept.push_back(*r);
  }
  ParetoFront front;
  for (const PairSearchResult& r : kept) {
    Solution s = make_solution(instance, assemble_sequence(tables, r));
    front.push_back(ParetoPoint{s.metrics.er, s.metrics.lmax, std::move(s.sequence)});
  }
  return front;
}

}  // namespace erent
