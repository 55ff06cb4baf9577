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

#include "erent/io.h"

#include <gtest/gtest.h>

#include "erent/errors.h"
#include "test_support.h"

namespace erent {
namespace {

using testing::fixture_a;

ParseError parse_failure(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for " << text;
  return ParseError("", 0, "");
}

TEST(ParseTest, MinimalDocument) {
  const Instance inst =
      parse_instance(R"({"version":1,"jobs":[{"id":1,"p":2,"w":3,"d":4}]})");
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.jobs()[0], (Job{1, 2, 3, 4, false}));
}

TEST(ParseTest, SpecAndComments) {
  const InstanceDocument doc = parse_document(
      "// note\n{\"version\":1,\"jobs\":[{\"id\":1,\"p\":1,\"w\":1,\"d\":0,\"r\":true}],\n"
      "\"spec\":{\"objective\":\"lmax\",\"mode\":\"gamma-budget\",\"budget\":-2}}");
  ASSERT_TRUE(doc.spec.has_value());
  EXPECT_EQ(doc.spec->objective, Objective::kMaxLateness);
  EXPECT_EQ(doc.spec->mode, Mode{GammaBudget{-2}});
  EXPECT_TRUE(doc.instance.jobs()[0].needs_resource);
}

TEST(ParseTest, FieldErrors) {
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[{"id":1,"p":1,"w":1,"d":1},)"
                          R"({"id":1,"p":1,"w":1,"d":1}]})")
                .field(),
            "jobs[1].id");
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[{"id":1,"p":1.5,"w":1,"d":1}]})").field(),
            "jobs[0].p");
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[{"id":1,"p":1,"w":-1,"d":1}]})").field(),
            "jobs[0].w");
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[{"id":1,"p":1,"w":1}]})").field(),
            "jobs[0].d");
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[{"id":1,"p":1,"w":1,"d":1,"q":2}]})").field(),
            "jobs[0].q");
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[{"id":1,"p":"1","w":1,"d":1}]})").field(),
            "jobs[0].p");
  EXPECT_EQ(parse_failure(R"({"version":2,"jobs":[{"id":1,"p":1,"w":1,"d":1}]})").field(),
            "version");
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[]})").field(), "jobs");
  EXPECT_EQ(parse_failure(R"({"version":1,"jobs":[{"id":1,"p":1,"w":1,"d":1}],)"
                          R"("spec":{"objective":"twc","mode":"er-budget"}})")
                .field(),
            "spec.mode");
}

TEST(ParseTest, SyntaxErrorCarriesLine) {
  const ParseError e = parse_failure("{\"version\":1,\n\"jobs\":[\n{\"id\":1,,}]}");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_TRUE(e.field().empty());
}

TEST(SerializeTest, FixtureAIsByteStable) {
  const std::string text = serialize_instance(fixture_a());
  EXPECT_EQ(text,
            "{\n"
            "  \"version\": 1,\n"
            "  \"jobs\": [\n"
            "    {\"id\":1,\"p\":1,\"w\":10,\"d\":0,\"r\":false},\n"
            "    {\"id\":2,\"p\":2,\"w\":6,\"d\":0,\"r\":true},\n"
            "    {\"id\":3,\"p\":2,\"w\":4,\"d\":0,\"r\":false},\n"
            "    {\"id\":4,\"p\":3,\"w\":3,\"d\":0,\"r\":true},\n"
            "    {\"id\":5,\"p\":4,\"w\":1,\"d\":0,\"r\":false}\n"
            "  ]\n"
            "}\n");
  EXPECT_EQ(parse_instance(text), fixture_a());
  EXPECT_EQ(serialize_instance(parse_instance(text)), text);
}

TEST(SerializeTest, RoundTripsRandomInstances) {
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 1 + static_cast<int>(seed % 12);
    spec.p_max = 1 + static_cast<int64_t>(seed % 30);
    spec.r_fraction = static_cast<double>(seed % 11) / 10.0;
    spec.seed = seed;
    const Instance inst = random_instance(spec);
    ASSERT_EQ(parse_instance(serialize_instance(inst)), inst) << "seed " << seed;
  }
}

TEST(SerializeTest, SpecAndCommentsRoundTrip) {
  const ProblemSpec spec{Objective::kTotalCompletion, Composite{3}};
  const std::string text = serialize_instance(fixture_a(), spec, {"a = 1", "b = 2"});
  EXPECT_EQ(text.rfind("// a = 1\n// b = 2\n{", 0), 0u);
  const InstanceDocument doc = parse_document(text);
  EXPECT_EQ(doc.instance, fixture_a());
  EXPECT_EQ(doc.spec, spec);
}

TEST(MakeModeTest, FlagCombinations) {
  EXPECT_EQ(make_mode("er-budget", 5, std::nullopt), Mode{ErBudget{5}});
  EXPECT_EQ(make_mode("gamma-budget", 5, std::nullopt), Mode{GammaBudget{5}});
  EXPECT_EQ(make_mode("composite", std::nullopt, 2), Mode{Composite{2}});
  EXPECT_EQ(make_mode("pareto", std::nullopt, std::nullopt), Mode{Pareto{}});
  EXPECT_FALSE(make_mode("er-budget", std::nullopt, std::nullopt).has_value());
  EXPECT_FALSE(make_mode("er-budget", 5, 2).has_value());
  EXPECT_FALSE(make_mode("composite", std::nullopt, -1).has_value());
  EXPECT_FALSE(make_mode("weighted", 1, std::nullopt).has_value());
}

TEST(DocumentTest, SolutionDocument) {
  const Solution s = make_solution(fixture_a(), {1, 3, 2, 4, 5});
  EXPECT_EQ(solution_document(s, {Objective::kWeightedCompletion, ErBudget{5}}),
            "{\"sequence\":[1,3,2,4,5],\"feasible\":true,\"objective\":88,\"er\":5,"
            "\"metrics\":{\"tc\":29,\"twc\":88,\"lmax\":12,\"wtardy\":24}}\n");
}

TEST(DocumentTest, ParetoDocument) {
  const ParetoFront front = {{5, 88, {1, 3, 2, 4, 5}}, {7, 84, {1, 2, 3, 4, 5}}};
  EXPECT_EQ(pareto_document(front),
            "{\"points\":[{\"er\":5,\"gamma\":88,\"sequence\":[1,3,2,4,5]},"
            "{\"er\":7,\"gamma\":84,\"sequence\":[1,2,3,4,5]}]}\n");
}

TEST(RandomInstanceTest, DeterministicPerSeed) {
  RandomInstanceSpec spec;
  spec.seed = 7;
  EXPECT_EQ(random_instance(spec), random_instance(spec));
  spec.seed = 8;
  RandomInstanceSpec other;
  other.seed = 7;
  EXPECT_FALSE(random_instance(spec) == random_instance(other));
}

TEST(RandomInstanceTest, Bounds) {
  RandomInstanceSpec spec;
  spec.n = 40;
  spec.p_max = 6;
  spec.w_max = 3;
  spec.d_max = 9;
  spec.seed = 3;
  const Instance inst = random_instance(spec);
  for (const Job& j : inst.jobs()) {
    EXPECT_GE(j.p, 0);
    EXPECT_LE(j.p, 6);
    EXPECT_GE(j.w, 1);
    EXPECT_LE(j.w, 3);
    EXPECT_GE(j.d, 0);
    EXPECT_LE(j.d, 9);
  }
}

TEST(RandomInstanceTest, ResourceFraction) {
  RandomInstanceSpec spec;
  spec.r_fraction = 1.0;
  EXPECT_TRUE(random_instance(spec).ordinary_ids().empty());
  spec.r_fraction = 0.0;
  EXPECT_FALSE(random_instance(spec).has_resource_jobs());
  spec.n = 1;
  spec.r_fraction = 0.1;
  EXPECT_TRUE(random_instance(spec).has_resource_jobs());
  spec.r_fraction = 1.5;
  EXPECT_THROW(random_instance(spec), std::invalid_argument);
}

}  // namespace
}  // namespace erent
