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

#include "erent/pair_search.h"

#include <algorithm>
#include <stdexcept>

namespace erent {

SplitTable::SplitTable(std::size_t first_kappa, std::size_t last_kappa, int64_t max_rho)
    : first_(first_kappa), last_(last_kappa), max_rho_(max_rho) {
  if (max_rho < 0) throw std::invalid_argument("max_rho must be nonnegative");
  if (first_ <= last_) {
    const std::size_t cells = (last_ - first_ + 1) * static_cast<std::size_t>(max_rho + 1);
    values_.assign(cells, 0);
    reachable_.assign(cells, 0);
  }
}

namespace {

int64_t combine(const PairSearchProblem& p, int64_t a, int64_t b) {
  if (p.combine == Combine::kSum) return p.outer.value_or(0) + a + b;
  int64_t v = std::max(a, b);
  return p.outer ? std::max(*p.outer, v) : v;
}

// Best suffix value over rho2 >= r, with the smallest rho2 attaining it.
struct SuffixBest {
  std::vector<int64_t> value;
  std::vector<int64_t> rho;  // -1 when no reachable rho2 >= r
};

SuffixBest suffix_minima(const SplitTable& table, std::size_t kappa) {
  const int64_t max_rho = table.max_rho();
  SuffixBest best{std::vector<int64_t>(max_rho + 2, 0), std::vector<int64_t>(max_rho + 2, -1)};
  for (int64_t r = max_rho; r >= 0; --r) {
    best.value[r] = best.value[r + 1];
    best.rho[r] = best.rho[r + 1];
    if (table.reachable(kappa, r)) {
      const int64_t v = table.value(kappa, r);
      if (best.rho[r] < 0 || v <= best.value[r]) {
        best.value[r] = v;
        best.rho[r] = r;
      }
    }
  }
  return best;
}

struct Stair {
  int64_t rho;
  int64_t value;
};

// Nondominated suffix cells: a cell survives when every larger rho has a
// strictly larger value. Ordered by rho descending, so values decrease.
std::vector<Stair> staircase(const SplitTable& table, std::size_t kappa) {
  std::vector<Stair> stairs;
  for (int64_t r = table.max_rho(); r >= 0; --r) {
    if (!table.reachable(kappa, r)) continue;
    const int64_t v = table.value(kappa, r);
    if (stairs.empty() || v < stairs.back().value) stairs.push_back({r, v});
  }
  return stairs;
}

PairSearchResult make_result(const PairSearchProblem& p, std::size_t kappa, int64_t rho1,
                             int64_t rho2) {
  PairSearchResult r;
  r.kappa = kappa;
  r.rho_prefix = rho1;
  r.rho_suffix = rho2;
  r.prefix_value = p.prefix->value(kappa, rho1);
  r.suffix_value = p.suffix->value(kappa, rho2);
  r.window = p.window_processing - rho1 - rho2;
  r.cost = combine(p, r.prefix_value, r.suffix_value);
  return r;
}

std::optional<PairSearchResult> min_cost_window_at_most(const PairSearchProblem& p,
                                                        int64_t limit) {
  std::optional<PairSearchResult> best;
  const int64_t needed = p.window_processing - limit;  // rho1 + rho2 >= needed
  for (std::size_t kappa = p.first_kappa; kappa <= p.last_kappa; ++kappa) {
    const SuffixBest suffix = suffix_minima(*p.suffix, kappa);
    const int64_t max_suffix = p.suffix->max_rho();
    for (int64_t rho1 = 0; rho1 <= p.prefix->max_rho(); ++rho1) {
      if (!p.prefix->reachable(kappa, rho1)) continue;
      const int64_t r = std::max<int64_t>(0, needed - rho1);
      if (r > max_suffix || suffix.rho[r] < 0) continue;
      const int64_t cost = combine(p, p.prefix->value(kappa, rho1), suffix.value[r]);
      if (!best || cost < best->cost) best = make_result(p, kappa, rho1, suffix.rho[r]);
    }
  }
  return best;
}

std::optional<PairSearchResult> min_window_cost_at_most(const PairSearchProblem& p,
                                                        int64_t limit) {
  std::optional<PairSearchResult> best;
  if (p.combine == Combine::kMax && p.outer && *p.outer > limit) return best;
  for (std::size_t kappa = p.first_kappa; kappa <= p.last_kappa; ++kappa) {
    const std::vector<Stair> stairs = staircase(*p.suffix, kappa);
    for (int64_t rho1 = 0; rho1 <= p.prefix->max_rho(); ++rho1) {
      if (!p.prefix->reachable(kappa, rho1)) continue;
      const int64_t f = p.prefix->value(kappa, rho1);
      int64_t budget = 0;
      if (p.combine == Combine::kSum) {
        budget = limit - p.outer.value_or(0) - f;
      } else {
        if (f > limit) continue;
        budget = limit;
      }
      // First stair (largest rho) whose value fits the budget.
      auto it = std::partition_point(stairs.begin(), stairs.end(),
                                     [budget](const Stair& s) { return s.value > budget; });
      if (it == stairs.end()) continue;
      const int64_t window = p.window_processing - rho1 - it->rho;
      if (!best || window < best->window) best = make_result(p, kappa, rho1, it->rho);
    }
  }
  return best;
}

std::optional<PairSearchResult> min_cost_window_exactly(const PairSearchProblem& p,
                                                        int64_t window) {
  std::optional<PairSearchResult> best;
  const int64_t total = p.window_processing - window;  // rho1 + rho2
  if (total < 0) return best;
  for (std::size_t kappa = p.first_kappa; kappa <= p.last_kappa; ++kappa) {
    const int64_t lo = std::max<int64_t>(0, total - p.suffix->max_rho());
    const int64_t hi = std::min(total, p.prefix->max_rho());
    for (int64_t rho1 = lo; rho1 <= hi; ++rho1) {
      const int64_t rho2 = total - rho1;
      if (!p.prefix->reachable(kappa, rho1) || !p.suffix->reachable(kappa, rho2)) continue;
      const int64_t cost =
          combine(p, p.prefix->value(kappa, rho1), p.suffix->value(kappa, rho2));
      if (!best || cost < best->cost) best = make_result(p, kappa, rho1, rho2);
    }
  }
  return best;
}

}  // namespace

std::optional<PairSearchResult> search_pairs(const PairSearchProblem& problem,
                                             const PairSearchMode& mode) {
  if (problem.prefix == nullptr || problem.suffix == nullptr) {
    throw std::invalid_argument("pair search needs both tables");
  }
  if (problem.first_kappa > problem.last_kappa) return std::nullopt;
  for (std::size_t kappa : {problem.first_kappa, problem.last_kappa}) {
    if (!problem.prefix->covers(kappa) || !problem.suffix->covers(kappa)) {
      throw std::invalid_argument("pair search range exceeds the tables");
    }
  }
  if (const auto* m = std::get_if<MinCostWindowAtMost>(&mode)) {
    return min_cost_window_at_most(problem, m->limit);
  }
  if (const auto* m = std::get_if<MinWindowCostAtMost>(&mode)) {
    return min_window_cost_at_most(problem, m->limit);
  }
  return min_cost_window_exactly(problem, std::get<MinCostWindowExactly>(mode).window);
}

}  // namespace erent
