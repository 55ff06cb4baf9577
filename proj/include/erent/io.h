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

// Instance, solution and front documents, plus seeded random instances.
//
// An instance document is a JSON object:
//   {"version": 1, "jobs": [{"id": 1, "p": 3, "w": 2, "d": 7, "r": true}, ...]}
// p, w and d are required integers; "r" defaults to false. An optional
// "spec" object names a default problem, e.g.
//   {"objective": "twc", "mode": "er-budget", "budget": 5}
// Line comments are accepted, so generators can prepend notes.

#ifndef ERENT_IO_H_
#define ERENT_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erent/model.h"

namespace erent {

inline constexpr int kDocumentVersion = 1;

struct InstanceDocument {
  Instance instance;
  std::optional<ProblemSpec> spec;
};

// Throws ParseError; the error carries the line of a syntax error or the
// path of a bad field ("jobs[2].p").
InstanceDocument parse_document(std::string_view text);
Instance parse_instance(std::string_view text);

// One job per line, keys in the fixed order id, p, w, d, r. Each entry of
// `comments` becomes a leading "// " line.
std::string serialize_instance(const Instance& instance,
                               const std::optional<ProblemSpec>& spec = std::nullopt,
                               const std::vector<std::string>& comments = {});

// Mode names used in documents and on the command line: "er-budget",
// "gamma-budget", "pareto", "composite".
std::optional<Mode> make_mode(std::string_view name, std::optional<int64_t> budget,
                              std::optional<int64_t> lambda);

// Single-line documents. "objective" is the value the mode minimizes.
std::string solution_document(const Solution& solution, const ProblemSpec& spec);
std::string infeasible_document(const ProblemSpec& spec, const std::string& reason);
std::string pareto_document(const ParetoFront& front);

struct RandomInstanceSpec {
  int n = 5;
  int64_t p_max = 5;  // p in [0, p_max]
  int64_t w_max = 5;  // w in [1, w_max]
  // d in [0, d_max]; P of the drawn processing times when absent.
  std::optional<int64_t> d_max;
  // round(r_fraction * n) r-jobs, at least one when r_fraction > 0.
  double r_fraction = 0.4;
  uint64_t seed = 0;
};

// Deterministic per seed. Ids are 1..n. Throws std::invalid_argument on
// n < 1, negative bounds, w_max < 1 or r_fraction outside [0, 1].
Instance random_instance(const RandomInstanceSpec& spec);

}  // namespace erent

#endif  // ERENT_IO_H_
