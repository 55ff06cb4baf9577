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

#include "erent/weighted_completion.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace erent {
namespace {

using Cell = std::optional<int64_t>;
// Per processed position, one flag per state: 1 when the job joined the set.
using Decisions = std::vector<std::vector<unsigned char>>;

void require_wspt(const OrderedView& view, int64_t rho_max) {
  if (view.rule() != OrderRule::kWspt) {
    throw std::invalid_argument("weighted completion tables need a WSPT view");
  }
  if (rho_max < 0) throw std::invalid_argument("rho_max must be nonnegative");
}

bool has_splits(const OrderedView& view) {
  return view.has_window() && *view.alpha() < *view.beta();
}

SplitTable empty_table(const OrderedView& view, int64_t rho_max) {
  if (!has_splits(view)) return SplitTable(1, 0, rho_max);
  return SplitTable(*view.alpha() + 1, *view.beta(), rho_max);
}

void keep_min(Cell& best, int64_t candidate, unsigned char* flag) {
  if (!best || candidate < *best) {
    best = candidate;
    if (flag != nullptr) *flag = 1;
  }
}

// --- processing-indexed recursion, one rho at a time ---------------------

// X side for a fixed rho over positions [alpha, stop). State r is p of the
// part of X seen so far. on_stage(j, row) runs after position j.
template <class OnStage>
void theta1_prefix_slice(const OrderedView& v, int64_t rho, std::size_t stop,
                         Decisions* take, OnStage on_stage) {
  const std::size_t alpha = *v.alpha();
  const int64_t t_alpha = v.start(alpha);
  std::vector<Cell> prev(rho + 1), cur(rho + 1);
  prev[0] = 0;
  for (std::size_t j = alpha; j < stop; ++j) {
    const Job& job = v.at(j);
    const bool movable = v.is_between(j);
    unsigned char* flags = take ? take->emplace_back(rho + 1, 0).data() : nullptr;
    for (int64_t r = 0; r <= rho; ++r) {
      Cell best;
      if (prev[r]) best = *prev[r] + job.w * (v.prefix(j + 1) + rho - r);
      if (movable && r >= job.p && prev[r - job.p]) {
        keep_min(best, *prev[r - job.p] + job.w * (t_alpha + r), flags ? flags + r : nullptr);
      }
      cur[r] = best;
    }
    std::swap(prev, cur);
    on_stage(j, prev);
  }
}

// Y side for a fixed rho over positions beta down to `stop`. State r is p of
// the part of Y seen so far.
template <class OnStage>
void theta1_suffix_slice(const OrderedView& v, int64_t rho, std::size_t stop,
                         Decisions* take, OnStage on_stage) {
  const std::size_t beta = *v.beta();
  const int64_t t_end = v.prefix(beta + 1);
  std::vector<Cell> prev(rho + 1), cur(rho + 1);
  prev[0] = 0;
  for (std::size_t j = beta + 1; j-- > stop;) {
    const Job& job = v.at(j);
    const bool movable = v.is_between(j);
    unsigned char* flags = take ? take->emplace_back(rho + 1, 0).data() : nullptr;
    for (int64_t r = 0; r <= rho; ++r) {
      Cell best;
      if (prev[r]) best = *prev[r] + job.w * (v.prefix(j + 1) - (rho - r));
      if (movable && r >= job.p && prev[r - job.p]) {
        keep_min(best, *prev[r - job.p] + job.w * (t_end - (r - job.p)),
                 flags ? flags + r : nullptr);
      }
      cur[r] = best;
    }
    std::swap(prev, cur);
    on_stage(j, prev);
  }
}

// --- weight-indexed recursion, all rho at once ----------------------------
//
// State (r, om): r is p of the set so far, om the weight of the jobs seen so
// far that stayed. Moving a job shifts every stayed job seen so far by p_j,
// which the om * p_j term charges.

struct Grid {
  int64_t max_rho;
  int64_t max_omega;
  std::vector<Cell> cells;

  Grid(int64_t rho, int64_t omega)
      : max_rho(rho), max_omega(omega), cells((rho + 1) * (omega + 1)) {}
  Cell& at(int64_t r, int64_t om) { return cells[r * (max_omega + 1) + om]; }
  const Cell& at(int64_t r, int64_t om) const { return cells[r * (max_omega + 1) + om]; }
  Cell row_min(int64_t r) const {
    Cell best;
    for (int64_t om = 0; om <= max_omega; ++om) {
      if (at(r, om) && (!best || *at(r, om) < *best)) best = at(r, om);
    }
    return best;
  }
};

int64_t weight_between(const OrderedView& v, std::size_t lo, std::size_t hi) {
  int64_t total = 0;
  for (std::size_t j = lo; j <= hi; ++j) total += v.at(j).w;
  return total;
}

template <class OnStage>
void theta2_prefix_pass(const OrderedView& v, int64_t rho_max, std::size_t stop,
                        OnStage on_stage) {
  const std::size_t alpha = *v.alpha();
  const int64_t t_alpha = v.start(alpha);
  const int64_t omega = stop > alpha ? weight_between(v, alpha, stop - 1) : 0;
  Grid prev(rho_max, omega), cur(rho_max, omega);
  prev.at(0, 0) = 0;
  for (std::size_t j = alpha; j < stop; ++j) {
    const Job& job = v.at(j);
    const bool movable = v.is_between(j);
    for (int64_t r = 0; r <= rho_max; ++r) {
      for (int64_t om = 0; om <= omega; ++om) {
        Cell best;
        if (om >= job.w && prev.at(r, om - job.w)) {
          best = *prev.at(r, om - job.w) + job.w * v.prefix(j + 1);
        }
        if (movable && r >= job.p && prev.at(r - job.p, om)) {
          keep_min(best, *prev.at(r - job.p, om) + job.w * (t_alpha + r) + om * job.p, nullptr);
        }
        cur.at(r, om) = best;
      }
    }
    std::swap(prev, cur);
    on_stage(j, prev);
  }
}

template <class OnStage>
void theta2_suffix_pass(const OrderedView& v, int64_t rho_max, std::size_t stop,
                        OnStage on_stage) {
  const std::size_t beta = *v.beta();
  const int64_t t_end = v.prefix(beta + 1);
  const int64_t omega = stop <= beta ? weight_between(v, stop, beta) : 0;
  Grid prev(rho_max, omega), cur(rho_max, omega);
  prev.at(0, 0) = 0;
  for (std::size_t j = beta + 1; j-- > stop;) {
    const Job& job = v.at(j);
    const bool movable = v.is_between(j);
    for (int64_t r = 0; r <= rho_max; ++r) {
      for (int64_t om = 0; om <= omega; ++om) {
        Cell best;
        if (om >= job.w && prev.at(r, om - job.w)) {
          best = *prev.at(r, om - job.w) + job.w * v.prefix(j + 1);
        }
        if (movable && r >= job.p && prev.at(r - job.p, om)) {
          keep_min(best,
                   *prev.at(r - job.p, om) + job.w * (t_end - (r - job.p)) - om * job.p, nullptr);
        }
        cur.at(r, om) = best;
      }
    }
    std::swap(prev, cur);
    on_stage(j, prev);
  }
}

}  // namespace

XYTables build_xy_tables_theta1(const OrderedView& view, int64_t rho_max) {
  require_wspt(view, rho_max);
  SplitTable prefix = empty_table(view, rho_max);
  SplitTable suffix = empty_table(view, rho_max);
  if (has_splits(view)) {
    const std::size_t alpha = *view.alpha();
    const std::size_t beta = *view.beta();
    for (int64_t rho = 0; rho <= rho_max; ++rho) {
      theta1_prefix_slice(view, rho, beta, nullptr,
                          [&](std::size_t j, const std::vector<Cell>& row) {
                            if (row[rho]) prefix.set(j + 1, rho, *row[rho]);
                          });
      theta1_suffix_slice(view, rho, alpha + 1, nullptr,
                          [&](std::size_t j, const std::vector<Cell>& row) {
                            if (row[rho]) suffix.set(j, rho, *row[rho]);
                          });
    }
  }
  return XYTables(view, XYMethod::kProcessingIndexed, std::move(prefix), std::move(suffix));
}

XYTables build_xy_tables_theta2(const OrderedView& view, int64_t rho_max) {
  require_wspt(view, rho_max);
  SplitTable prefix = empty_table(view, rho_max);
  SplitTable suffix = empty_table(view, rho_max);
  if (has_splits(view)) {
    const std::size_t alpha = *view.alpha();
    const std::size_t beta = *view.beta();
    theta2_prefix_pass(view, rho_max, beta, [&](std::size_t j, const Grid& grid) {
      for (int64_t r = 0; r <= rho_max; ++r) {
        if (Cell c = grid.row_min(r)) prefix.set(j + 1, r, *c);
      }
    });
    theta2_suffix_pass(view, rho_max, alpha + 1, [&](std::size_t j, const Grid& grid) {
      for (int64_t r = 0; r <= rho_max; ++r) {
        if (Cell c = grid.row_min(r)) suffix.set(j, r, *c);
      }
    });
  }
  return XYTables(view, XYMethod::kWeightIndexed, std::move(prefix), std::move(suffix));
}

XYTables build_xy_tables(const OrderedView& view) {
  int64_t weight = 0;
  for (const Job& j : view.jobs()) weight += j.w;
  const int64_t rho_max = view.between_processing();
  if (view.total_processing() <= weight) return build_xy_tables_theta1(view, rho_max);
  return build_xy_tables_theta2(view, rho_max);
}

// Either table kind stores the same optimal values, so one
// processing-indexed slice for the requested rho recovers an optimal set.
std::vector<std::size_t> XYTables::prefix_set(std::size_t kappa, int64_t rho) const {
  if (!prefix_.reachable(kappa, rho)) throw std::out_of_range("unreachable prefix cell");
  Decisions take;
  theta1_prefix_slice(view_, rho, kappa, &take, [](std::size_t, const std::vector<Cell>&) {});
  const std::size_t alpha = *view_.alpha();
  std::vector<std::size_t> set;
  int64_t r = rho;
  for (std::size_t j = kappa; j-- > alpha;) {
    if (take[j - alpha][r]) {
      set.push_back(j);
      r -= view_.at(j).p;
    }
  }
  std::reverse(set.begin(), set.end());
  return set;
}

std::vector<std::size_t> XYTables::suffix_set(std::size_t kappa, int64_t rho) const {
  if (!suffix_.reachable(kappa, rho)) throw std::out_of_range("unreachable suffix cell");
  Decisions take;
  theta1_suffix_slice(view_, rho, kappa, &take, [](std::size_t, const std::vector<Cell>&) {});
  const std::size_t beta = *view_.beta();
  std::vector<std::size_t> set;
  int64_t r = rho;
  for (std::size_t j = kappa; j <= beta; ++j) {
    if (take[beta - j][r]) {
      set.push_back(j);
      r -= view_.at(j).p;
    }
  }
  return set;
}

int64_t outer_weighted_cost(const OrderedView& view) {
  if (!view.has_window()) return 0;
  int64_t total = 0;
  for (std::size_t j = 0; j < view.size(); ++j) {
    if (j < *view.alpha() || j > *view.beta()) total += view.at(j).w * view.prefix(j + 1);
  }
  return total;
}

std::optional<PairSearchResult> pair_search(const XYTables& tables, const PairSearchMode& mode) {
  if (tables.empty()) return std::nullopt;
  PairSearchProblem problem;
  problem.prefix = &tables.prefix_table();
  problem.suffix = &tables.suffix_table();
  problem.first_kappa = tables.first_split();
  problem.last_kappa = tables.last_split();
  problem.window_processing = tables.view().window_processing();
  problem.outer = outer_weighted_cost(tables.view());
  problem.combine = Combine::kSum;
  return search_pairs(problem, mode);
}

Sequence assemble_sequence(const XYTables& tables, const PairSearchResult& result) {
  const std::vector<std::size_t> x = tables.prefix_set(result.kappa, result.rho_prefix);
  const std::vector<std::size_t> y = tables.suffix_set(result.kappa, result.rho_suffix);
  return five_block_sequence(tables.view(), x, y);
}

std::optional<Solution> solve_er_budget_twc(const Instance& instance, int64_t er_limit) {
  if (er_limit < instance.resource_processing()) return std::nullopt;
  const OrderedView view(instance, OrderRule::kWspt);
  if (view.between().empty() || er_limit >= view.window_processing()) {
    return make_solution(instance, view.order());
  }
  const XYTables tables = build_xy_tables(view);
  const auto best = pair_search(tables, MinCostWindowAtMost{er_limit});
  if (!best) return std::nullopt;
  return make_solution(instance, assemble_sequence(tables, *best));
}

std::optional<Solution> solve_twc_budget_er(const Instance& instance, int64_t twc_limit) {
  const OrderedView view(instance, OrderRule::kWspt);
  if (view.between().empty()) {
    Solution plain = make_solution(instance, view.order());
    if (plain.metrics.twc > twc_limit) return std::nullopt;
    return plain;
  }
  const XYTables tables = build_xy_tables(view);
  const auto best = pair_search(tables, MinWindowCostAtMost{twc_limit});
  if (!best) return std::nullopt;
  return make_solution(instance, assemble_sequence(tables, *best));
}

ParetoFront pareto_twc(const Instance& instance) {
  const OrderedView view(instance, OrderRule::kWspt);
  if (view.between().empty()) {
    Solution plain = make_solution(instance, view.order());
    return {ParetoPoint{plain.metrics.er, plain.metrics.twc, plain.sequence}};
  }
  const XYTables tables = build_xy_tables(view);
  std::vector<PairSearchResult> kept;
  for (int64_t window = instance.resource_processing(); window <= view.window_processing();
       ++window) {
    const auto r = pair_search(tables, MinCostWindowExactly{window});
    if (r && (kept.empty() || r->cost < kept.back().cost)) kept.push_back(*r);
  }
  ParetoFront front;
  for (const PairSearchResult& r : kept) {
    Solution s = make_solution(instance, assemble_sequence(tables, r));
    front.push_back(ParetoPoint{s.metrics.er, s.metrics.twc, std::move(s.sequence)});
  }
  return front;
}

namespace {

std::optional<Solution> reevaluate(const Instance& instance, std::optional<Solution> unit) {
  if (!unit) return std::nullopt;
  return make_solution(instance, std::move(unit->sequence));
}

}  // namespace

std::optional<Solution> solve_er_budget_tc(const Instance& instance, int64_t er_limit) {
  return reevaluate(instance, solve_er_budget_twc(instance.with_unit_weights(), er_limit));
}

std::optional<Solution> solve_tc_budget_er(const Instance& instance, int64_t tc_limit) {
  return reevaluate(instance, solve_twc_budget_er(instance.with_unit_weights(), tc_limit));
}

ParetoFront pareto_tc(const Instance& instance) {
  // twc under unit weights is tc
  return pareto_twc(instance.with_unit_weights());
}

}  // namespace erent
