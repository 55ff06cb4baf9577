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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "erent/io.h"
#include "test_support.h"

namespace erent {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("erent_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  static CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  fs::path dir_;
};

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

TEST_F(CliTest, SolveFixtureA) {
  const std::string a = write("a.json", serialize_instance(testing::fixture_a()));
  CliRun r = run({"solve", "--input", a, "--objective", "twc", "--mode", "er-budget", "--budget", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"objective\":88,\"er\":5")) << r.out;
  EXPECT_FALSE(r.err.empty());

  r = run({"solve", "--input", a, "--objective", "twc", "--mode", "er-budget", "--budget", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "\"feasible\":false")) << r.out;

  r = run({"solve", "--input", a, "--objective", "twc", "--mode", "composite", "--lambda", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"objective\":103")) << r.out;

  r = run({"solve", "--input", a, "--objective", "tc", "--mode", "gamma-budget", "--budget", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"objective\":5")) << r.out;
}

TEST_F(CliTest, FlagErrors) {
  const std::string a = write("a.json", serialize_instance(testing::fixture_a()));
  EXPECT_EQ(run({"solve", "--input", a, "--objective", "twc", "--mode", "er-budget",
                 "--budget", "5", "--lambda", "1"})
                .code,
            3);
  EXPECT_EQ(run({"solve", "--input", a, "--objective", "twc", "--mode", "composite"}).code, 3);
  EXPECT_EQ(run({"solve", "--input", a, "--objective", "makespan", "--mode", "er-budget",
                 "--budget", "5"})
                .code,
            3);
  EXPECT_EQ(run({"solve", "--input", a, "--mode", "er-budget", "--budget", "5"}).code, 3);
  EXPECT_EQ(run({"solve", "--input", (dir_ / "missing.json").string(), "--objective", "twc",
                 "--mode", "er-budget", "--budget", "5"})
                .code,
            3);
  const std::string bad = write("bad.json", "{\"version\":1,\"jobs\":[{\"id\":1}]}");
  EXPECT_EQ(run({"pareto", "--input", bad, "--objective", "twc"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, SpecFromDocument) {
  const std::string a = write(
      "a.json", serialize_instance(testing::fixture_a(),
                                   ProblemSpec{Objective::kWeightedCompletion, ErBudget{5}}));
  CliRun r = run({"solve", "--input", a});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"objective\":88")) << r.out;
  r = run({"solve", "--input", a, "--budget", "7", "--mode", "er-budget"});
  EXPECT_TRUE(contains(r.out, "\"objective\":84")) << r.out;
}

TEST_F(CliTest, OutputFile) {
  const std::string a = write("a.json", serialize_instance(testing::fixture_a()));
  const std::string target = (dir_ / "front.json").string();
  const CliRun r = run({"pareto", "--input", a, "--objective", "twc", "--output", target});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_TRUE(contains(text.str(), "\"points\"")) << text.str();
}

TEST_F(CliTest, Pareto) {
  const std::string a = write("a.json", serialize_instance(testing::fixture_a()));
  CliRun r = run({"pareto", "--input", a, "--objective", "twc"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "{\"er\":5,\"gamma\":88,")) << r.out;
  EXPECT_TRUE(contains(r.out, "{\"er\":7,\"gamma\":84,")) << r.out;

  const std::string one = write("one.json", serialize_instance(Instance({testing::r_job(1, 2, 3, 1)})));
  r = run({"pareto", "--input", one, "--objective", "lmax"});
  EXPECT_EQ(r.out, "{\"points\":[{\"er\":2,\"gamma\":1,\"sequence\":[1]}]}\n");

  const std::string plain = write(
      "plain.json", serialize_instance(Instance({testing::o_job(1, 2, 3), testing::o_job(2, 1, 1)})));
  r = run({"pareto", "--input", plain, "--objective", "wu"});
  EXPECT_TRUE(contains(r.out, "{\"points\":[{\"er\":0,")) << r.out;
}

TEST_F(CliTest, Verify) {
  const std::string a = write("a.json", serialize_instance(testing::fixture_a()));
  CliRun r = run({"verify", "--input", a, "--objective", "twc", "--mode", "er-budget", "--budget", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"match\":true")) << r.out;

  const std::string c = write("c.json", serialize_instance(testing::fixture_c()));
  r = run({"verify", "--input", c, "--objective", "lmax", "--mode", "gamma-budget", "--budget", "0"});
  EXPECT_EQ(r.code, 0);
  r = run({"verify", "--input", c, "--objective", "wu", "--mode", "pareto"});
  EXPECT_EQ(r.code, 0);

  RandomInstanceSpec spec;
  spec.n = 12;
  const std::string big = write("big.json", serialize_instance(random_instance(spec)));
  r = run({"verify", "--input", big, "--objective", "twc", "--mode", "er-budget", "--budget", "30"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, Gen) {
  CliRun r = run({"gen", "--kind", "partition", "--numbers", "1,1,2"});
  EXPECT_EQ(r.code, 0);
  const InstanceDocument doc = parse_document(r.out);
  EXPECT_EQ(doc.instance, testing::fixture_c());
  EXPECT_EQ(doc.spec, (ProblemSpec{Objective::kMaxLateness, ErBudget{4}}));
  EXPECT_TRUE(contains(r.out, "// threshold = 0")) << r.out;

  const CliRun first = run({"gen", "--kind", "random", "--seed", "7"});
  const CliRun second = run({"gen", "--kind", "random", "--seed", "7"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);

  EXPECT_EQ(run({"gen", "--kind", "evenodd", "--numbers", "1,2,3"}).code, 3);
  EXPECT_EQ(run({"gen", "--kind", "evenodd"}).code, 3);
  EXPECT_EQ(run({"gen", "--kind", "random", "--rfrac", "2"}).code, 3);
  EXPECT_EQ(run({"gen", "--kind", "evenodd", "--numbers", "1,2,3,4"}).code, 0);
}

}  // namespace
}  // namespace erent
