// Copyright 2026 The spinrel Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "spinrel");
  std::ostringstream out, err;
  int code = spinrel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("spinrel_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, ValidateShippedCorpus) {
  Outcome o = run({"validate", SPINREL_TEST_CORPUS});
  EXPECT_EQ(o.code, spinrel::cli::kExitOk) << o.err;
  EXPECT_NE(o.out.find("violations: 0"), std::string::npos);
  EXPECT_NE(o.out.find("B3 coefficient: -50176"), std::string::npos);
  EXPECT_NE(o.out.find("result: PASS"), std::string::npos);
}

TEST(Cli, ValidateStructuredIsStable) {
  Outcome a = run({"--format", "structured", "--threads", "1", "validate", SPINREL_TEST_CORPUS});
  Outcome b = run({"--format", "structured", "--threads", "3", "validate", SPINREL_TEST_CORPUS});
  EXPECT_EQ(a.code, 0);
  auto strip = [](std::string s) {
    auto at = s.find("\"seconds\"");
    if (at != std::string::npos) s.erase(at, s.find('\n', at) - at);
    return s;
  };
  EXPECT_EQ(strip(a.out), strip(b.out));
  EXPECT_NE(a.out.find("\"ok\": true"), std::string::npos);
}

TEST(Cli, ValidateFindsViolation) {
  std::string path = temp_file("bad.alg", "## grade 6\n-50176 * B3\n");
  Outcome o = run({"validate", path});
  EXPECT_EQ(o.code, spinrel::cli::kExitViolation);
  EXPECT_NE(o.out.find("block-marker"), std::string::npos);
}

TEST(Cli, ParseErrorExitsTwo) {
  std::string path = temp_file("broken.alg", "1 * com(T2,S1;9)\n");
  Outcome o = run({"validate", path});
  EXPECT_EQ(o.code, spinrel::cli::kExitError);
  EXPECT_NE(o.err.find("triangle"), std::string::npos);
}

TEST(Cli, Expand) {
  Outcome o = run({"expand", "com(S1,S1;0)"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "0\n");
  Outcome t = run({"expand", "com(T2,S1;3)", "--m", "3"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("T2[2]S1[1]"), std::string::npos);
  EXPECT_EQ(run({"expand", "J1", "--m", "4"}).code, spinrel::cli::kExitError);
}

TEST(Cli, Act) {
  Outcome o = run({"act", "J+", "acom(J1,J1;0)"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "0\n");
}

TEST(Cli, CgAndWitt) {
  EXPECT_EQ(run({"cg", "1", "1", "1", "-1", "0", "0"}).out, "1/3*sqrt(3)\n");
  EXPECT_EQ(run({"cg", "1", "1", "1", "-1", "0", "0", "--ladder"}).out, "1/3*sqrt(3)\n");
  Outcome half = run({"cg", "1/2", "1/2", "1/2", "-1/2", "0", "0"});
  EXPECT_EQ(half.code, spinrel::cli::kExitError);
  EXPECT_NE(half.err.find("half-integer"), std::string::npos);
  EXPECT_EQ(run({"witt", "2", "6"}).out, "9\n");
}

TEST(Cli, Enumerate) {
  Outcome o = run({"enumerate", "--grade", "2", "--spin", "0", "--parity", "+",
                   "--max-leaves", "1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\nB1\n"), std::string::npos);
}

TEST(Cli, SolveRankNullspace) {
  std::string sys = temp_file("sys.mat", "1 1\n0 0 2\nb 0 6 + 4*f\n");
  Outcome s = run({"solve", sys, "--oracle", "dense"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("3 + 2*f"), std::string::npos);

  std::string sing = temp_file("sing.mat", "2 2\n0 0 1\n0 1 sqrt(2)\n1 0 sqrt(2)\n1 1 2\n");
  Outcome r = run({"rank", "--matrix", sing, "--oracle", "dense"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1"), std::string::npos);
  Outcome n = run({"nullspace", sing});
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("-sqrt(2)"), std::string::npos);

  std::string bad = temp_file("param.mat", "1 1\n0 0 f\n");
  Outcome e = run({"solve", bad});
  EXPECT_EQ(e.code, spinrel::cli::kExitError);
  EXPECT_NE(e.err.find("parameter in matrix entry (0, 0)"), std::string::npos);
}

TEST(Cli, InconsistentSolveIsViolation) {
  std::string sys = temp_file("inc.mat", "2 1\n0 0 1\n1 0 1\nb 0 1\nb 1 2\n");
  Outcome o = run({"solve", sys});
  EXPECT_EQ(o.code, spinrel::cli::kExitViolation);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, spinrel::cli::kExitError);
  EXPECT_EQ(run({"bogus"}).code, spinrel::cli::kExitError);
  EXPECT_EQ(run({"--format", "xml", "witt", "2", "2"}).code, spinrel::cli::kExitError);
}

TEST(Cli, Help) {
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Selfcheck) {
  for (const auto& line : spinrel::cli::selfcheck(SPINREL_TEST_CORPUS, 0))
    EXPECT_TRUE(line.passed) << line.name << ": " << line.detail;
}

}  // namespace
