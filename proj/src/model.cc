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

#include "erent/model.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "erent/errors.h"

namespace erent {

Instance::Instance(std::vector<Job> jobs) : jobs_(std::move(jobs)) {
  if (jobs_.empty()) throw InvalidInstance("an instance needs at least one job");
  by_id_.reserve(jobs_.size());
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    const Job& job = jobs_[i];
    if (job.id <= 0) {
      throw InvalidInstance("job id must be positive, got " + std::to_string(job.id));
    }
    if (job.p < 0 || job.w < 0 || job.d < 0) {
      throw InvalidInstance("job " + std::to_string(job.id) +
                            " has a negative processing time, weight or due date");
    }
    by_id_.emplace_back(job.id, i);
  }
  std::sort(by_id_.begin(), by_id_.end());
  for (std::size_t i = 1; i < by_id_.size(); ++i) {
    if (by_id_[i].first == by_id_[i - 1].first) {
      throw InvalidInstance("duplicate job id " + std::to_string(by_id_[i].first));
    }
  }
}

bool Instance::contains(JobId id) const {
  auto it = std::lower_bound(by_id_.begin(), by_id_.end(), std::pair{id, std::size_t{0}});
  return it != by_id_.end() && it->first == id;
}

std::size_t Instance::index_of(JobId id) const {
  auto it = std::lower_bound(by_id_.begin(), by_id_.end(), std::pair{id, std::size_t{0}});
  if (it == by_id_.end() || it->first != id) {
    throw InvalidInstance("unknown job id " + std::to_string(id));
  }
  return it->second;
}

int64_t Instance::total_processing() const {
  return std::accumulate(jobs_.begin(), jobs_.end(), int64_t{0},
                         [](int64_t acc, const Job& j) { return acc + j.p; });
}

int64_t Instance::total_weight() const {
  return std::accumulate(jobs_.begin(), jobs_.end(), int64_t{0},
                         [](int64_t acc, const Job& j) { return acc + j.w; });
}

int64_t Instance::resource_processing() const {
  int64_t total = 0;
  for (const Job& j : jobs_) {
    if (j.needs_resource) total += j.p;
  }
  return total;
}

bool Instance::has_resource_jobs() const {
  return std::any_of(jobs_.begin(), jobs_.end(),
                     [](const Job& j) { return j.needs_resource; });
}

std::vector<JobId> Instance::resource_ids() const {
  std::vector<JobId> ids;
  for (const auto& [id, index] : by_id_) {
    if (jobs_[index].needs_resource) ids.push_back(id);
  }
  return ids;
}

std::vector<JobId> Instance::ordinary_ids() const {
  std::vector<JobId> ids;
  for (const auto& [id, index] : by_id_) {
    if (!jobs_[index].needs_resource) ids.push_back(id);
  }
  return ids;
}

Instance Instance::with_unit_weights() const {
  std::vector<Job> jobs = jobs_;
  for (Job& j : jobs) j.w = 1;
  return Instance(std::move(jobs));
}

void check_permutation(const Instance& instance, std::span<const JobId> sequence) {
  if (sequence.size() != instance.size()) {
    throw NotAPermutation("sequence has " + std::to_string(sequence.size()) +
                          " entries, instance has " + std::to_string(instance.size()) +
                          " jobs");
  }
  std::vector<bool> seen(instance.size(), false);
  for (JobId id : sequence) {
    if (!instance.contains(id)) {
      throw NotAPermutation("sequence names unknown job " + std::to_string(id));
    }
    std::size_t index = instance.index_of(id);
    if (seen[index]) {
      throw NotAPermutation("job " + std::to_string(id) + " appears twice");
    }
    seen[index] = true;
  }
}

ScheduleMetrics evaluate(const Instance& instance, std::span<const JobId> sequence) {
  check_permutation(instance, sequence);
  const std::size_t n = instance.size();
  ScheduleMetrics m;
  m.completion.assign(n, 0);
  m.lateness.assign(n, 0);
  m.tardy.assign(n, false);

  int64_t clock = 0;
  std::optional<int64_t> rent_start;
  int64_t rent_end = 0;
  bool first = true;
  for (JobId id : sequence) {
    std::size_t i = instance.index_of(id);
    const Job& job = instance.jobs()[i];
    int64_t start = clock;
    clock += job.p;
    m.completion[i] = clock;
    m.lateness[i] = clock - job.d;
    m.tardy[i] = clock > job.d;

    m.tc += clock;
    m.twc += job.w * clock;
    m.lmax = first ? m.lateness[i] : std::max(m.lmax, m.lateness[i]);
    first = false;
    if (m.tardy[i]) m.wtardy += job.w;
    if (job.needs_resource) {
      if (!rent_start) rent_start = start;
      rent_end = clock;
    }
  }
  m.er = rent_start ? rent_end - *rent_start : 0;
  return m;
}

std::string_view objective_name(Objective objective) {
  switch (objective) {
    case Objective::kTotalCompletion:
      return "tc";
    case Objective::kWeightedCompletion:
      return "twc";
    case Objective::kMaxLateness:
      return "lmax";
    case Objective::kWeightedTardy:
      return "wu";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view name) {
  for (Objective o : {Objective::kTotalCompletion, Objective::kWeightedCompletion,
                      Objective::kMaxLateness, Objective::kWeightedTardy}) {
    if (objective_name(o) == name) return o;
  }
  return std::nullopt;
}

int64_t scheduling_cost(const ScheduleMetrics& metrics, Objective objective) {
  switch (objective) {
    case Objective::kTotalCompletion:
      return metrics.tc;
    case Objective::kWeightedCompletion:
      return metrics.twc;
    case Objective::kMaxLateness:
      return metrics.lmax;
    case Objective::kWeightedTardy:
      return metrics.wtardy;
  }
  return 0;
}

std::string_view mode_name(const Mode& mode) {
  struct Visitor {
    std::string_view operator()(const ErBudget&) const { return "er-budget"; }
    std::string_view operator()(const GammaBudget&) const { return "gamma-budget"; }
    std::string_view operator()(const Pareto&) const { return "pareto"; }
    std::string_view operator()(const Composite&) const { return "composite"; }
  };
  return std::visit(Visitor{}, mode);
}

Solution make_solution(const Instance& instance, Sequence sequence) {
  Solution s;
  s.metrics = evaluate(instance, sequence);
  s.sequence = std::move(sequence);
  s.feasible = true;
  return s;
}

int64_t mode_objective(const ScheduleMetrics& metrics, const ProblemSpec& spec) {
  const int64_t gamma = scheduling_cost(metrics, spec.objective);
  if (std::holds_alternative<GammaBudget>(spec.mode)) return metrics.er;
  if (const auto* c = std::get_if<Composite>(&spec.mode)) return gamma + c->lambda * metrics.er;
  return gamma;
}

ParetoFront nondominated(std::vector<ParetoPoint> points) {
  std::stable_sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    return a.er != b.er ? a.er < b.er : a.gamma < b.gamma;
  });
  ParetoFront front;
  for (ParetoPoint& point : points) {
    if (front.empty() || point.gamma < front.back().gamma) {
      front.push_back(std::move(point));
    }
  }
  return front;
}

}  // namespace erent
