// Copyright 2026 The RASM Authors.
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
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace rasm::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rasm");
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Field(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find(key + ": ");
  if (pos == std::string::npos) return "";
  const std::size_t start = pos + key.size() + 2;
  return text.substr(start, text.find('\n', start) - start);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rasm_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string MakeInstance(int n, int m, int seed) {
    const std::string path = Path("inst" + std::to_string(seed) + ".rasc");
    const Outcome g = Invoke({"gen", "--n", std::to_string(n), "--m",
                              std::to_string(m), "--prob-low", "0.1",
                              "--prob-high", "0.6", "--seed",
                              std::to_string(seed), "--out", path});
    EXPECT_EQ(g.code, kExitOk) << g.err;
    return path;
  }

  std::filesystem::path dir_;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_F(CliTest, GenWritesInstance) {
  const std::string path = MakeInstance(6, 4, 3);
  const std::string text = ReadFile(path);
  EXPECT_EQ(text.rfind("rasc 6 4", 0), 0u) << text;
}

TEST_F(CliTest, GenIsDeterministicPerSeed) {
  const std::string a = ReadFile(MakeInstance(5, 5, 9));
  std::filesystem::rename(Path("inst9.rasc"), Path("first.rasc"));
  const std::string b = ReadFile(MakeInstance(5, 5, 9));
  EXPECT_EQ(a, b);
  const std::string c = ReadFile(MakeInstance(5, 5, 10));
  EXPECT_NE(a, c);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({"gen", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"gen", "--prob-low", "0.7", "--prob-high", "0.2",
                    "--out", Path("x.rasc")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"solve", Path("missing.rasc")}).code, kExitUsage);
  const std::string inst = MakeInstance(4, 4, 1);
  EXPECT_EQ(Invoke({"solve", inst, "--cuts", "magic"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"solve", inst, "--mode", "tree"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"solve", inst, "--alpha", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"solve", inst, "--k", "9"}).code, kExitUsage);
}

TEST_F(CliTest, MalformedInstanceIsParseError) {
  const std::string path = Path("bad.rasc");
  std::ofstream(path) << "rasc 2 2\n0.1 0.2\n0.3 banana\n";
  const Outcome r = Invoke({"solve", path});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("parse error"), std::string::npos) << r.err;
}

TEST_F(CliTest, SolveReportsFields) {
  const std::string inst = MakeInstance(7, 6, 2);
  const std::string lp = Path("master.lp");
  const std::string trace = Path("trace.csv");
  const Outcome r = Invoke({"solve", inst, "--alpha", "0.1", "--k", "2",
                            "--cuts", "new,lifted", "--export-lp", lp,
                            "--trace", trace});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Field(r.out, "status"), "Optimal");
  EXPECT_EQ(Field(r.out, "cuts"), "new+lifted");
  EXPECT_FALSE(Field(r.out, "objective").empty());
  EXPECT_FALSE(Field(r.out, "support").empty());
  EXPECT_NE(ReadFile(lp).find("Maximize"), std::string::npos);
  EXPECT_EQ(ReadFile(trace).rfind("iteration,ub,lb,cuts,nodes,elapsed\n", 0), 0u);
}

TEST_F(CliTest, ModesAgree) {
  const std::string inst = MakeInstance(8, 6, 4);
  const Outcome loop = Invoke({"solve", inst, "--k", "3", "--alpha", "0.3"});
  const Outcome lazy =
      Invoke({"solve", inst, "--k", "3", "--alpha", "0.3", "--mode", "lazy"});
  ASSERT_EQ(loop.code, kExitOk);
  ASSERT_EQ(lazy.code, kExitOk);
  EXPECT_NEAR(std::stod(Field(loop.out, "objective")),
              std::stod(Field(lazy.out, "objective")), 1e-6);
}

TEST_F(CliTest, AlphaOneAccepted) {
  const std::string inst = MakeInstance(5, 5, 5);
  const Outcome r = Invoke({"solve", inst, "--alpha", "1", "--k", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Field(r.out, "status"), "Optimal");
}

TEST_F(CliTest, VerifyPassesAndDetectsFaults) {
  const Outcome ok = Invoke({"verify", "--instances", "5", "--max-n", "5",
                             "--max-m", "5"});
  EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);

  const Outcome shrink = Invoke({"verify", "--instances", "5", "--max-n", "5",
                                 "--max-m", "5", "--inject-fault",
                                 "shrink-new-cut"});
  EXPECT_EQ(shrink.code, kExitPropertyFailure);
  EXPECT_NE(shrink.err.find("violated property: cut-validity-new"),
            std::string::npos)
      << shrink.err;

  const Outcome skew = Invoke({"verify", "--instances", "5", "--max-n", "5",
                               "--max-m", "5", "--inject-fault", "skew-cvar"});
  EXPECT_EQ(skew.code, kExitPropertyFailure);
  EXPECT_NE(skew.err.find("violated property: cvar-closed-form-matches-eta-scan"),
            std::string::npos)
      << skew.err;

  EXPECT_EQ(Invoke({"verify", "--inject-fault", "gremlin"}).code, kExitUsage);
}

TEST_F(CliTest, VerifyIsDeterministic) {
  const Outcome a = Invoke({"verify", "--seed", "7", "--instances", "3",
                            "--max-n", "4", "--max-m", "4"});
  const Outcome b = Invoke({"verify", "--seed", "7", "--instances", "3",
                            "--max-n", "4", "--max-m", "4"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, SmallBench) {
  const std::string csv = Path("bench.csv");
  const Outcome r = Invoke({"bench", "--scale", "0.1", "--time-limit", "30",
                            "--out", csv});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(ReadFile(csv));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "# rasm-bench-csv v1");
  std::getline(lines, line);
  EXPECT_EQ(line, "v_total,alpha,k,family_config,time_s,cuts,nodes,status,objective");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  EXPECT_EQ(rows, 3 * 2 * 2 * 4);
}

}  // namespace
}  // namespace rasm::cli
