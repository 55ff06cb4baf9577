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

// Domain types for single-machine scheduling with one rented resource.
//
// Jobs run back to back from time zero. Jobs flagged `needs_resource`
// ("r-jobs") may only run while the resource is rented, and the resource is
// rented for one uninterrupted period: from the start of the first r-job to
// the completion of the last one. The length of that period is `er`.

#ifndef ERENT_MODEL_H_
#define ERENT_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace erent {

using JobId = int;

// A permutation of all job ids of an instance.
using Sequence = std::vector<JobId>;

struct Job {
  JobId id = 0;
  int64_t p = 0;  // processing time
  int64_t w = 0;  // weight
  int64_t d = 0;  // due date
  bool needs_resource = false;

  friend bool operator==(const Job&, const Job&) = default;
};

// An immutable set of jobs. Totals are recomputed from the job list on each
// call.
class Instance {
 public:
  // Throws InvalidInstance on an empty job list, a non-positive or duplicate
  // id, or a negative p, w or d.
  explicit Instance(std::vector<Job> jobs);

  std::span<const Job> jobs() const { return jobs_; }
  std::size_t size() const { return jobs_.size(); }

  bool contains(JobId id) const;
  // Index of `id` in jobs(). Throws InvalidInstance for unknown ids.
  std::size_t index_of(JobId id) const;
  const Job& job(JobId id) const { return jobs_[index_of(id)]; }

  int64_t total_processing() const;           // P
  int64_t total_weight() const;               // W
  int64_t resource_processing() const;        // p(J^r)
  bool has_resource_jobs() const;
  std::vector<JobId> resource_ids() const;    // J^r, ascending
  std::vector<JobId> ordinary_ids() const;    // J^o, ascending

  // Same jobs with every weight set to 1.
  Instance with_unit_weights() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.jobs_ == b.jobs_;
  }

 private:
  std::vector<Job> jobs_;
  // (id, index) sorted by id.
  std::vector<std::pair<JobId, std::size_t>> by_id_;
};

struct ScheduleMetrics {
  // Per job, aligned with Instance::jobs().
  std::vector<int64_t> completion;
  std::vector<int64_t> lateness;
  std::vector<bool> tardy;

  int64_t er = 0;
  int64_t tc = 0;
  int64_t twc = 0;
  int64_t lmax = 0;
  int64_t wtardy = 0;
};

// Throws NotAPermutation unless `sequence` holds every id of `instance`
// exactly once.
void check_permutation(const Instance& instance, std::span<const JobId> sequence);

// Completion times of a no-idle schedule processing `sequence` from time 0,
// plus every derived quantity. er is 0 when the instance has no r-jobs.
ScheduleMetrics evaluate(const Instance& instance, std::span<const JobId> sequence);

enum class Objective {
  kTotalCompletion,     // sum C_j
  kWeightedCompletion,  // sum w_j C_j
  kMaxLateness,         // max L_j
  kWeightedTardy,       // sum w_j U_j
};

std::string_view objective_name(Objective objective);
std::optional<Objective> parse_objective(std::string_view name);

// Scheduling cost (gamma) of an evaluated schedule under `objective`.
int64_t scheduling_cost(const ScheduleMetrics& metrics, Objective objective);

// Minimize gamma subject to er <= limit.
struct ErBudget {
  int64_t limit = 0;
  friend bool operator==(const ErBudget&, const ErBudget&) = default;
};
// Minimize er subject to gamma <= limit.
struct GammaBudget {
  int64_t limit = 0;
  friend bool operator==(const GammaBudget&, const GammaBudget&) = default;
};
// All nondominated (er, gamma) points.
struct Pareto {
  friend bool operator==(const Pareto&, const Pareto&) = default;
};
// Minimize gamma + lambda * er.
struct Composite {
  int64_t lambda = 0;
  friend bool operator==(const Composite&, const Composite&) = default;
};

using Mode = std::variant<ErBudget, GammaBudget, Pareto, Composite>;

struct ProblemSpec {
  Objective objective = Objective::kWeightedCompletion;
  Mode mode = ErBudget{};
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

std::string_view mode_name(const Mode& mode);

struct Solution {
  Sequence sequence;
  ScheduleMetrics metrics;
  bool feasible = true;
};

// Evaluates `sequence` and wraps it as a feasible Solution.
Solution make_solution(const Instance& instance, Sequence sequence);

// Value a solver minimizes for `spec`: gamma for ErBudget, er for
// GammaBudget, gamma + lambda * er for Composite. Pareto has no single
// value; gamma is returned.
int64_t mode_objective(const ScheduleMetrics& metrics, const ProblemSpec& spec);

struct ParetoPoint {
  int64_t er = 0;
  int64_t gamma = 0;
  Sequence sequence;
};

// Sorted by er ascending; gamma strictly decreasing.
using ParetoFront = std::vector<ParetoPoint>;

// Keeps the nondominated points of `points` (any order). Among points with
// equal (er, gamma) the first one wins.
ParetoFront nondominated(std::vector<ParetoPoint> points);

}  // namespace erent

#endif  // ERENT_MODEL_H_
