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

// Dynamic-program tables indexed by a split position kappa and a processing
// amount rho, and the search that pairs a prefix table with a suffix table.
//
// Both the weighted-completion and the max-lateness solvers reduce to the
// same question: pick kappa, a prefix set of total processing rho1 pulled
// in front of the rental window from positions below kappa, and a suffix set
// of total processing rho2 pushed behind the window from positions at or
// above kappa. The window then has length window_processing - rho1 - rho2.

#ifndef ERENT_PAIR_SEARCH_H_
#define ERENT_PAIR_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace erent {

class SplitTable {
 public:
  SplitTable() = default;
  // Covers kappa in [first_kappa, last_kappa] and rho in [0, max_rho]; every
  // cell starts unreachable. An empty range (first > last) is allowed.
  SplitTable(std::size_t first_kappa, std::size_t last_kappa, int64_t max_rho);

  std::size_t first_kappa() const { return first_; }
  std::size_t last_kappa() const { return last_; }
  int64_t max_rho() const { return max_rho_; }
  bool covers(std::size_t kappa) const { return kappa >= first_ && kappa <= last_; }

  bool reachable(std::size_t kappa, int64_t rho) const {
    return covers(kappa) && rho >= 0 && rho <= max_rho_ && reachable_[index(kappa, rho)];
  }
  // Precondition: reachable(kappa, rho).
  int64_t value(std::size_t kappa, int64_t rho) const { return values_[index(kappa, rho)]; }
  std::optional<int64_t> at(std::size_t kappa, int64_t rho) const {
    if (!reachable(kappa, rho)) return std::nullopt;
    return value(kappa, rho);
  }
  void set(std::size_t kappa, int64_t rho, int64_t value) {
    values_[index(kappa, rho)] = value;
    reachable_[index(kappa, rho)] = 1;
  }

  friend bool operator==(const SplitTable&, const SplitTable&) = default;

 private:
  std::size_t index(std::size_t kappa, int64_t rho) const {
    return (kappa - first_) * static_cast<std::size_t>(max_rho_ + 1) +
           static_cast<std::size_t>(rho);
  }

  std::size_t first_ = 1;
  std::size_t last_ = 0;
  int64_t max_rho_ = 0;
  std::vector<int64_t> values_;
  std::vector<unsigned char> reachable_;
};

// How the two partial costs and the sequence-independent outer cost form the
// full objective.
enum class Combine { kSum, kMax };

// min cost subject to window <= limit
struct MinCostWindowAtMost {
  int64_t limit = 0;
};
// min window subject to cost <= limit
struct MinWindowCostAtMost {
  int64_t limit = 0;
};
// min cost subject to window == window
struct MinCostWindowExactly {
  int64_t window = 0;
};

using PairSearchMode =
    std::variant<MinCostWindowAtMost, MinWindowCostAtMost, MinCostWindowExactly>;

struct PairSearchResult {
  std::size_t kappa = 0;
  int64_t rho_prefix = 0;
  int64_t rho_suffix = 0;
  int64_t prefix_value = 0;
  int64_t suffix_value = 0;
  int64_t window = 0;
  // Full-sequence objective, outer cost included.
  int64_t cost = 0;
};

struct PairSearchProblem {
  const SplitTable* prefix = nullptr;
  const SplitTable* suffix = nullptr;
  // Split positions to try; both tables must cover them.
  std::size_t first_kappa = 1;
  std::size_t last_kappa = 0;
  int64_t window_processing = 0;
  // Contribution of the jobs outside the window range. Absent means no such
  // jobs (only meaningful for kMax).
  std::optional<int64_t> outer;
  Combine combine = Combine::kSum;
};

// Scans every split position once with a dominance-filtered suffix
// staircase. Ties go to the smallest kappa, then the smallest rho_prefix,
// then the smallest rho_suffix that attains the best suffix value.
std::optional<PairSearchResult> search_pairs(const PairSearchProblem& problem,
                                             const PairSearchMode& mode);

}  // namespace erent

#endif  // ERENT_PAIR_SEARCH_H_
