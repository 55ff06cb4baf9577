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

#include "erent/reductions.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "erent/errors.h"

namespace erent {
namespace {

std::string join(const std::vector<int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::vector<std::string> ReductionCertificate::lines() const {
  std::vector<std::string> out = {
      "kind = " + kind,
      "source = " + join(source),
      "numbers = " + join(numbers),
      "m = " + std::to_string(m),
      "B = " + std::to_string(half),
  };
  if (kind == "evenodd") {
    out.push_back("C = " + std::to_string(c));
    out.push_back("D = " + std::to_string(d));
  }
  out.push_back("er_limit = " + std::to_string(er_limit));
  out.push_back("threshold = " + std::to_string(threshold));
  out.push_back(std::string("answer = ") + (yes ? "yes" : "no"));
  return out;
}

bool has_partition(const std::vector<int64_t>& numbers) {
  const int64_t total = std::accumulate(numbers.begin(), numbers.end(), int64_t{0});
  if (total % 2 != 0) return false;
  std::set<int64_t> sums = {0};
  for (int64_t a : numbers) {
    std::set<int64_t> next = sums;
    for (int64_t s : sums) next.insert(s + a);
    sums = std::move(next);
  }
  return sums.count(total / 2) > 0;
}

bool has_evenodd_partition(const std::vector<int64_t>& numbers) {
  const int64_t total = std::accumulate(numbers.begin(), numbers.end(), int64_t{0});
  if (numbers.size() % 2 != 0 || total % 2 != 0) return false;
  std::set<int64_t> sums = {0};
  for (std::size_t k = 0; k + 1 < numbers.size(); k += 2) {
    std::set<int64_t> next;
    for (int64_t s : sums) {
      next.insert(s + numbers[k]);
      next.insert(s + numbers[k + 1]);
    }
    sums = std::move(next);
  }
  return sums.count(total / 2) > 0;
}

Reduction evenodd_reduction(const std::vector<int64_t>& numbers) {
  if (numbers.empty() || numbers.size() % 2 != 0) {
    throw BadSource("even-odd partition needs a nonempty list of even length");
  }
  for (std::size_t k = 0; k < numbers.size(); ++k) {
    if (numbers[k] <= 0) throw BadSource("even-odd partition numbers must be positive");
    if (k > 0 && numbers[k] <= numbers[k - 1]) {
      throw BadSource("even-odd partition numbers must be strictly increasing");
    }
  }
  const int64_t total = std::accumulate(numbers.begin(), numbers.end(), int64_t{0});
  if (total % 2 != 0) throw BadSource("even-odd partition total must be even");

  ReductionCertificate cert;
  cert.kind = "evenodd";
  cert.source = numbers;
  cert.numbers = numbers;
  cert.m = static_cast<int64_t>(numbers.size() / 2);
  const int64_t m = cert.m;
  cert.half = total / 2;
  // The construction needs B >= 2m(m+1) - 2; shifting every number by
  // 2(m+1) keeps the answer and raises B by 2m(m+1).
  if (cert.half < 2 * m * (m + 1) - 2) {
    for (int64_t& a : cert.numbers) a += 2 * (m + 1);
    cert.half += 2 * m * (m + 1);
  }
  const int64_t b = cert.half;
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < cert.numbers.size(); ++k) {
    jobs.push_back(Job{static_cast<JobId>(k + 1), b * b + cert.numbers[k], 1, 0, false});
  }
  for (int64_t k = 1; k <= m; ++k) {
    cert.c += (m + 1 - k) * (jobs[2 * k - 2].p + jobs[2 * k - 1].p);
  }
  cert.c += (m * b * b + b) * (m + 1);
  cert.d = 2 * m * b * b + 2 * b;
  const int64_t big = cert.c + cert.d + 1;
  jobs.push_back(Job{static_cast<JobId>(2 * m + 1), 0, 1, 0, true});
  jobs.push_back(Job{static_cast<JobId>(2 * m + 2), big, 1, 0, true});
  cert.er_limit = big + m * b * b + b;
  cert.threshold = 2 * (cert.c + cert.d) + 1;
  cert.yes = has_evenodd_partition(numbers);
  return Reduction{Instance(std::move(jobs)),
                   ProblemSpec{Objective::kTotalCompletion, ErBudget{cert.er_limit}},
                   std::move(cert)};
}

Reduction partition_reduction(const std::vector<int64_t>& numbers) {
  if (numbers.empty()) throw BadSource("partition needs at least one number");
  for (int64_t a : numbers) {
    if (a < 0) throw BadSource("partition numbers must be nonnegative");
  }
  const int64_t total = std::accumulate(numbers.begin(), numbers.end(), int64_t{0});
  if (total % 2 != 0) throw BadSource("partition total must be even");

  ReductionCertificate cert;
  cert.kind = "partition";
  cert.source = numbers;
  cert.numbers = numbers;
  std::stable_sort(cert.numbers.begin(), cert.numbers.end(), std::greater<>());
  cert.m = static_cast<int64_t>(numbers.size());
  cert.half = total / 2;
  const int64_t b = cert.half;
  std::vector<Job> jobs;
  jobs.push_back(Job{1, 1, 1, b + 1, true});
  for (std::size_t k = 0; k < cert.numbers.size(); ++k) {
    jobs.push_back(Job{static_cast<JobId>(k + 2), cert.numbers[k], 1, 2 * b + 1, false});
  }
  jobs.push_back(Job{static_cast<JobId>(cert.m + 2), 1, 1, 2 * b + 2, true});
  cert.er_limit = b + 2;
  cert.threshold = 0;
  cert.yes = has_partition(numbers);
  return Reduction{Instance(std::move(jobs)),
                   ProblemSpec{Objective::kMaxLateness, ErBudget{cert.er_limit}},
                   std::move(cert)};
}

std::vector<int64_t> parse_numbers(const std::string& text) {
  std::vector<int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item(text.data() + pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int64_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw BadSource("malformed number list \"" + text + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace erent
