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

#include "erent/oracle.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "erent/errors.h"
#include "test_support.h"

namespace erent {
namespace {

using testing::fixture_a;

TEST(OracleTest, FixtureATable) {
  const OracleReport report(fixture_a(), Objective::kWeightedCompletion);
  const auto& table = report.table();
  EXPECT_TRUE(std::is_sorted(table.begin(), table.end(), [](const auto& a, const auto& b) {
    return std::pair(a.er, a.gamma) < std::pair(b.er, b.gamma);
  }));
  for (const OracleEntry& e : table) {
    const ScheduleMetrics m = evaluate(fixture_a(), e.witness);
    EXPECT_EQ(m.er, e.er);
    EXPECT_EQ(m.twc, e.gamma);
  }
  EXPECT_EQ(table.front().er, 5);
}

TEST(OracleTest, FixtureAQueries) {
  const OracleReport report(fixture_a(), Objective::kWeightedCompletion);
  const auto five = report.er_budget(5);
  ASSERT_TRUE(five.has_value());
  EXPECT_EQ(five->metrics.twc, 88);
  EXPECT_FALSE(report.er_budget(4).has_value());
  EXPECT_EQ(report.gamma_budget(84)->metrics.er, 7);
  EXPECT_FALSE(report.gamma_budget(83).has_value());
  const ParetoFront front = report.pareto();
  ASSERT_EQ(front.size(), 2u);
  EXPECT_EQ(front[0].er, 5);
  EXPECT_EQ(front[0].gamma, 88);
  EXPECT_EQ(front[1].er, 7);
  EXPECT_EQ(front[1].gamma, 84);
  const Solution c = report.composite(2);
  EXPECT_EQ(c.metrics.twc + 2 * c.metrics.er, 98);
}

TEST(OracleTest, WitnessIsLexSmallest) {
  const OracleReport report(fixture_a(), Objective::kWeightedCompletion);
  // 84 is only attained by the plain order among windows of length 7.
  EXPECT_EQ(report.er_budget(7)->sequence, (Sequence{1, 2, 3, 4, 5}));
}

TEST(OracleTest, DispatchesOnMode) {
  const Instance a = fixture_a();
  const OracleResult front = brute_force(a, {Objective::kWeightedCompletion, Pareto{}});
  EXPECT_EQ(std::get<ParetoFront>(front).size(), 2u);
  const OracleResult none = brute_force(a, {Objective::kWeightedCompletion, ErBudget{4}});
  EXPECT_FALSE(std::get<std::optional<Solution>>(none).has_value());
}

TEST(OracleTest, JobCap) {
  std::vector<Job> jobs;
  for (int i = 1; i <= 9; ++i) jobs.push_back(testing::o_job(i, 1, 1));
  EXPECT_THROW(OracleReport(Instance(jobs), Objective::kTotalCompletion), TooLarge);
  EXPECT_NO_THROW(OracleReport(Instance(jobs), Objective::kTotalCompletion, OracleOptions{9}));
}

}  // namespace
}  // namespace erent
