// Copyright 2026 The probmetric Authors
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

// End-to-end checks of the command-line tool: output and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PROBMETRIC_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kSample = std::string(PROBMETRIC_SAMPLES) + "/line3.json";

TEST(Cli, Validate) {
  const auto r = run("validate " + kSample);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok: 3 points, 3 laws, 4 random variables, 1 sequences\n");
  EXPECT_EQ(run("validate /nonexistent.json").code, 1);
}

TEST(Cli, Metric) {
  auto r = run("metric ind xi eta -f " + kSample);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/1\n");
  r = run("metric lp:2 xi eta -f " + kSample);
  EXPECT_EQ(r.out, "1/1\n");
  r = run("'metric' 'sup(ind,tv)' xi zeta -f " + kSample);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run("metric bogus xi eta -f " + kSample).code, 2);
  EXPECT_EQ(run("metric ind xi missing -f " + kSample).code, 1);
}

TEST(Cli, Hat) {
  auto r = run("hat linf P Q -f " + kSample);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/1\n");
  r = run("hat lp:1 P Q --witness -f " + kSample);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"entries\""), std::string::npos);
}

TEST(Cli, LimitReflectCoreflect) {
  EXPECT_EQ(run("limit kyfan-family to_xi xi -f " + kSample).code, 0);
  EXPECT_EQ(run("reflect kyfan-family").out, "prok-family\n");
  EXPECT_EQ(run("reflect 'basis(ind,lp:2)'").out, "basis(tv,hat(lp:2))\n");
  EXPECT_EQ(run("coreflect kyfan-family").out, "ind\n");
  EXPECT_EQ(run("coreflect 'basis(ind,tv)'").out, "sup(ind,tv)\n");
  EXPECT_EQ(run("reflect 'basis('").code, 2);
}

TEST(Cli, Suite) {
  const auto a = run("suite identities --seeds 1..3");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("result PASS"), std::string::npos);
  EXPECT_EQ(run("suite identities --seeds 1..3").out, a.out);
  EXPECT_EQ(run("suite axioms --seeds 1..2 --float").code, 0);
  EXPECT_EQ(run("suite axioms --seeds 1..2 --format csv").code, 0);
  EXPECT_EQ(run("suite nonexistent --seeds 1..2").code, 2);
  EXPECT_EQ(run("suite axioms --seeds 5..1").code, 2);
  EXPECT_EQ(run("suite axioms --seeds x").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("metric ind xi").code, 2);
}

TEST(Cli, GapExplore) {
  const auto dir = std::filesystem::temp_directory_path() / "probmetric_gap_test";
  std::filesystem::remove_all(dir);
  const auto r = run("gap-explore --seed 4 --budget 2 --out " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "gaps-4.txt"));
  EXPECT_NE(r.out.find("candidates from"), std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace
