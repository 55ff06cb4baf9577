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

// Structured instances from number-partitioning sources.
//
// Each generator turns a source list of integers into a scheduling
// instance plus a threshold such that the instance's optimum meets the
// threshold exactly when the source has the requested partition.

#ifndef ERENT_REDUCTIONS_H_
#define ERENT_REDUCTIONS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "erent/model.h"

namespace erent {

struct ReductionCertificate {
  std::string kind;              // "evenodd" or "partition"
  std::vector<int64_t> source;   // numbers as given
  std::vector<int64_t> numbers;  // numbers after any shift
  int64_t m = 0;
  int64_t half = 0;              // B: half of the (shifted) total
  int64_t c = 0;                 // evenodd only
  int64_t d = 0;                 // evenodd only
  int64_t er_limit = 0;          // K^r
  int64_t threshold = 0;         // optimum <= threshold iff yes
  bool yes = false;              // answer of the source, by exhaustive check

  // "key = value" lines, one per field.
  std::vector<std::string> lines() const;
};

struct Reduction {
  Instance instance;
  ProblemSpec spec;  // objective and er budget of the target problem
  ReductionCertificate certificate;
};

// Even-odd partition: is there a choice of one number from each pair
// (a_1, a_2), (a_3, a_4), ... summing to half the total? Target problem: total
// completion time under er <= K^r, yes iff optimum <= threshold. Throws
// BadSource unless the list is nonempty, of even length, strictly
// increasing, positive and of even total.
Reduction evenodd_reduction(const std::vector<int64_t>& numbers);

// Partition: is there a subset summing to half the total? Target problem:
// max lateness under er <= B + 2, yes iff optimum <= 0. Ids follow EDD
// order: the early r-job, the numbers by nonincreasing size, the late r-job.
// Throws BadSource on an empty list, a negative number or an odd total.
Reduction partition_reduction(const std::vector<int64_t>& numbers);

// Exhaustive source checks.
bool has_partition(const std::vector<int64_t>& numbers);
bool has_evenodd_partition(const std::vector<int64_t>& numbers);

// "1,2,3" -> {1, 2, 3}. Throws BadSource on malformed text.
std::vector<int64_t> parse_numbers(const std::string& text);

}  // namespace erent

#endif  // ERENT_REDUCTIONS_H_
