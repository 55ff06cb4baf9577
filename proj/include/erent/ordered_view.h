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

#ifndef ERENT_ORDERED_VIEW_H_
#define ERENT_ORDERED_VIEW_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "erent/model.h"

namespace erent {

enum class OrderRule {
  kWspt,  // w/p nonincreasing; p == 0 first; ties by ascending id
  kEdd,   // d nondecreasing; ties by ascending id
};

// An instance re-indexed by a priority rule. Positions are 0-based.
//
// `alpha` and `beta` are the first and last positions holding an r-job and
// `between` lists the o-job positions strictly between them. All three are
// absent when the instance has no r-jobs.
class OrderedView {
 public:
  OrderedView(const Instance& instance, OrderRule rule);

  OrderRule rule() const { return rule_; }
  std::size_t size() const { return jobs_.size(); }
  const Job& at(std::size_t pos) const { return jobs_[pos]; }
  std::span<const Job> jobs() const { return jobs_; }
  std::size_t position_of(JobId id) const;

  // Total processing time of the first `count` positions. start(pos) is
  // prefix(pos) and the plain-order completion of `pos` is prefix(pos + 1).
  int64_t prefix(std::size_t count) const { return prefix_[count]; }
  int64_t start(std::size_t pos) const { return prefix_[pos]; }
  int64_t total_processing() const { return prefix_.back(); }

  bool has_window() const { return alpha_.has_value(); }
  std::optional<std::size_t> alpha() const { return alpha_; }
  std::optional<std::size_t> beta() const { return beta_; }
  std::span<const std::size_t> between() const { return between_; }
  bool is_between(std::size_t pos) const;

  // p of positions alpha..beta, and p of `between`. 0 without a window.
  int64_t window_processing() const;
  int64_t between_processing() const;

  // Job ids in view order.
  Sequence order() const;

 private:
  OrderRule rule_;
  std::vector<Job> jobs_;
  std::vector<int64_t> prefix_;
  std::optional<std::size_t> alpha_;
  std::optional<std::size_t> beta_;
  std::vector<std::size_t> between_;
  std::vector<bool> between_mask_;
};

// True iff job `a` goes strictly before job `b` under `rule`.
bool precedes(const Job& a, const Job& b, OrderRule rule);

// The five-block sequence: positions [0, alpha), X, the rest of
// [alpha, beta], Y, then (beta, n). Each block keeps view order. X and Y are
// view positions; they must be disjoint subsets of between(). Throws
// InvalidBlockSets otherwise.
Sequence five_block_sequence(const OrderedView& view, std::span<const std::size_t> x,
                             std::span<const std::size_t> y);

// The tardy-structure sequence: X, Y, J^r \ Y, Z, then every remaining job,
// each block in view order. Sets hold job ids, must be pairwise disjoint,
// and X and Z may not contain r-jobs. Throws InvalidBlockSets otherwise.
Sequence tardy_block_sequence(const OrderedView& view, std::span<const JobId> x,
                              std::span<const JobId> y, std::span<const JobId> z);

}  // namespace erent

#endif  // ERENT_ORDERED_VIEW_H_
