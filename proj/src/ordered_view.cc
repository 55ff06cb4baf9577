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

#include "erent/ordered_view.h"

#include <algorithm>
#include <string>

#include "erent/errors.h"

namespace erent {

bool precedes(const Job& a, const Job& b, OrderRule rule) {
  if (rule == OrderRule::kEdd) {
    if (a.d != b.d) return a.d < b.d;
    return a.id < b.id;
  }
  // Zero processing time is an infinite ratio.
  const bool a_zero = a.p == 0;
  const bool b_zero = b.p == 0;
  if (a_zero != b_zero) return a_zero;
  if (!a_zero) {
    const int64_t lhs = a.w * b.p;
    const int64_t rhs = b.w * a.p;
    if (lhs != rhs) return lhs > rhs;
  }
  return a.id < b.id;
}

OrderedView::OrderedView(const Instance& instance, OrderRule rule)
    : rule_(rule), jobs_(instance.jobs().begin(), instance.jobs().end()) {
  std::sort(jobs_.begin(), jobs_.end(),
            [rule](const Job& a, const Job& b) { return precedes(a, b, rule); });
  prefix_.assign(jobs_.size() + 1, 0);
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    prefix_[i + 1] = prefix_[i] + jobs_[i].p;
    if (jobs_[i].needs_resource) {
      if (!alpha_) alpha_ = i;
      beta_ = i;
    }
  }
  between_mask_.assign(jobs_.size(), false);
  if (alpha_) {
    for (std::size_t i = *alpha_ + 1; i < *beta_; ++i) {
      if (!jobs_[i].needs_resource) {
        between_.push_back(i);
        between_mask_[i] = true;
      }
    }
  }
}

std::size_t OrderedView::position_of(JobId id) const {
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    if (jobs_[i].id == id) return i;
  }
  throw InvalidInstance("unknown job id " + std::to_string(id));
}

bool OrderedView::is_between(std::size_t pos) const {
  return pos < between_mask_.size() && between_mask_[pos];
}

int64_t OrderedView::window_processing() const {
  if (!alpha_) return 0;
  return prefix_[*beta_ + 1] - prefix_[*alpha_];
}

int64_t OrderedView::between_processing() const {
  int64_t total = 0;
  for (std::size_t pos : between_) total += jobs_[pos].p;
  return total;
}

Sequence OrderedView::order() const {
  Sequence seq;
  seq.reserve(jobs_.size());
  for (const Job& j : jobs_) seq.push_back(j.id);
  return seq;
}

Sequence five_block_sequence(const OrderedView& view, std::span<const std::size_t> x,
                             std::span<const std::size_t> y) {
  const std::size_t n = view.size();
  if (!view.has_window()) {
    if (x.empty() && y.empty()) return view.order();
    throw InvalidBlockSets("instance has no r-jobs, block sets must be empty");
  }
  // 0: untouched, 1: in X, 2: in Y
  std::vector<int> tag(n, 0);
  auto mark = [&](std::span<const std::size_t> set, int value, const char* name) {
    for (std::size_t pos : set) {
      if (!view.is_between(pos)) {
        throw InvalidBlockSets(std::string(name) + " holds position " + std::to_string(pos) +
                               ", which is not an o-job between the first and last r-job");
      }
      if (tag[pos] != 0) {
        throw InvalidBlockSets("position " + std::to_string(pos) + " listed twice");
      }
      tag[pos] = value;
    }
  };
  mark(x, 1, "X");
  mark(y, 2, "Y");

  const std::size_t alpha = *view.alpha();
  const std::size_t beta = *view.beta();
  Sequence seq;
  seq.reserve(n);
  for (std::size_t i = 0; i < alpha; ++i) seq.push_back(view.at(i).id);
  for (std::size_t i = alpha; i <= beta; ++i) {
    if (tag[i] == 1) seq.push_back(view.at(i).id);
  }
  for (std::size_t i = alpha; i <= beta; ++i) {
    if (tag[i] == 0) seq.push_back(view.at(i).id);
  }
  for (std::size_t i = alpha; i <= beta; ++i) {
    if (tag[i] == 2) seq.push_back(view.at(i).id);
  }
  for (std::size_t i = beta + 1; i < n; ++i) seq.push_back(view.at(i).id);
  return seq;
}

Sequence tardy_block_sequence(const OrderedView& view, std::span<const JobId> x,
                              std::span<const JobId> y, std::span<const JobId> z) {
  const std::size_t n = view.size();
  // 0: remaining, 1: X, 2: Y, 4: Z
  std::vector<int> tag(n, 0);
  auto mark = [&](std::span<const JobId> set, int value, bool allow_resource,
                  const char* name) {
    for (JobId id : set) {
      std::size_t pos = 0;
      try {
        pos = view.position_of(id);
      } catch (const InvalidInstance&) {
        throw InvalidBlockSets(std::string(name) + " names unknown job " + std::to_string(id));
      }
      if (!allow_resource && view.at(pos).needs_resource) {
        throw InvalidBlockSets(std::string(name) + " may not contain r-job " +
                               std::to_string(id));
      }
      if (tag[pos] != 0) {
        throw InvalidBlockSets("job " + std::to_string(id) + " listed in two sets");
      }
      tag[pos] = value;
    }
  };
  mark(x, 1, false, "X");
  mark(y, 2, true, "Y");
  mark(z, 4, false, "Z");

  Sequence seq;
  seq.reserve(n);
  auto emit = [&](auto&& keep) {
    for (std::size_t i = 0; i < n; ++i) {
      if (keep(i)) seq.push_back(view.at(i).id);
    }
  };
  emit([&](std::size_t i) { return tag[i] == 1; });
  emit([&](std::size_t i) { return tag[i] == 2; });
  emit([&](std::size_t i) { return tag[i] == 0 && view.at(i).needs_resource; });
  emit([&](std::size_t i) { return tag[i] == 4; });
  emit([&](std::size_t i) { return tag[i] == 0 && !view.at(i).needs_resource; });
  return seq;
}

}  // namespace erent
