// Copyright 2026 The GORS Authors
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
#include <sstream>
#include <string>
#include <vector>

#include "gors/datasets.h"
#include "gors/io.h"
#include "gtest/gtest.h"

namespace gors::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "gors");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path TempDir() {
  const fs::path dir = fs::temp_directory_path() / "gors_cli_test";
  fs::create_directories(dir);
  return dir;
}

bool Contains(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliTest, SelectGors) {
  const Outcome r = RunArgs({"select", "example3", "--model", "gors", "--budget", "25"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Contains(r.out, "solution: {0,0,1,1}\n"));
  EXPECT_TRUE(Contains(r.out, "selected: {r3,r4}\n"));
  EXPECT_TRUE(Contains(r.out, "OV: 18.0000"));
}

TEST(CliTest, SelectBkpPcWithThreshold) {
  const Outcome r = RunArgs({"select", "example3", "--model", "bkp-pc", "--budget",
                             "35", "--threshold", "0.5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Contains(r.out, "threshold: 0.5"));
  EXPECT_TRUE(Contains(r.out, "selected: {r2,r4}\n"));
}

TEST(CliTest, Evaluate) {
  const Outcome r = RunArgs({"evaluate", "example3", "--select", "1010"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Contains(r.out, "AC: 25\n"));
  EXPECT_TRUE(Contains(r.out, "AV: 70.0000"));
  EXPECT_TRUE(Contains(r.out, "OV: 14.0000"));
}

TEST(CliTest, ClosureAndLoi) {
  const Outcome c = RunArgs({"closure", "example3"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_TRUE(Contains(c.out, "r2        0.2000  1.0000  0.2000  0.3000"));
  const Outcome l = RunArgs({"loi", "pms"});
  EXPECT_EQ(l.code, kExitOk);
  EXPECT_TRUE(Contains(l.out, "(113/506)"));
}

TEST(CliTest, Sdp) {
  const Outcome yes = RunArgs({"sdp", "example3", "--select", "0000", "--budget", "20"});
  EXPECT_EQ(yes.code, kExitOk);
  EXPECT_EQ(yes.out, "SDP: yes\nwitness: (r1,r3)\n");
  const Outcome no = RunArgs({"sdp", "example3", "--select", "1111", "--budget", "45"});
  EXPECT_EQ(no.out, "SDP: no\n");
  EXPECT_EQ(RunArgs({"sdp", "example3", "--select", "1111", "--budget", "10"}).code,
            kExitPrecondition);
}

TEST(CliTest, DatasetExportRoundTrips) {
  const fs::path path = TempDir() / "pms.json";
  ASSERT_EQ(RunArgs({"dataset", "pms", "--out", path.string()}).code, kExitOk);
  EXPECT_EQ(LoadFrig(path), PmsFrig());
}

TEST(CliTest, Sweep) {
  const fs::path path = TempDir() / "sweep.csv";
  const std::vector<std::string> args = {"sweep", "--dataset", "ran", "--seed", "9",
                                         "--loi-levels", "0,0.5", "--budgets",
                                         "1..3,99", "--replications", "2",
                                         "--out", path.string()};
  const Outcome r = RunArgs(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string first = ReadTextFile(path);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 1 + 2 * 2 * 4 * 3);
  ASSERT_EQ(RunArgs(args).code, kExitOk);
  EXPECT_EQ(ReadTextFile(path), first);
}

TEST(CliTest, Mine) {
  const fs::path path = TempDir() / "mined.json";
  const Outcome r = RunArgs({"mine", "--prefs", GORS_DATA_DIR "/prefs_example.csv",
                             "--catalog", "example3", "--mapping", "clipped:0.16,0.83",
                             "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Frig f = LoadFrig(path);
  EXPECT_NEAR(f.rho(0, 2), (2.0 / 3.0 - 0.16) / (0.83 - 0.16), 1e-12);
}

TEST(CliTest, ReproduceTables) {
  const fs::path dir = TempDir() / "tables";
  ASSERT_EQ(RunArgs({"reproduce-tables", "--out", dir.string()}).code, kExitOk);
  const std::string t2 = ReadTextFile(dir / "subsets.csv");
  EXPECT_EQ(std::count(t2.begin(), t2.end(), '\n'), 17);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"select", "example3", "--budget", "5"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"select", "example3", "--model", "gors", "--budget", "x"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"loi", "pms", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"--help"}).code, kExitOk);
}

TEST(CliTest, DataAndPreconditionErrors) {
  EXPECT_EQ(RunArgs({"closure", "/no/such/file.json"}).code, kExitInvalidData);
  EXPECT_EQ(RunArgs({"evaluate", "example3", "--select", "10"}).code, kExitInvalidData);
  EXPECT_EQ(RunArgs({"evaluate", "example3", "--select", "10x0"}).code,
            kExitInvalidData);
  EXPECT_EQ(RunArgs({"select", "example3", "--model", "lp", "--budget", "5"}).code,
            kExitPrecondition);
  EXPECT_EQ(RunArgs({"select", "example3", "--model", "bkp", "--budget", "-5"}).code,
            kExitPrecondition);
  EXPECT_EQ(RunArgs({"sweep", "--seed", "1", "--loi-levels", "2", "--out",
                     (TempDir() / "x.csv").string()})
                .code,
            kExitPrecondition);
  const Outcome bad = RunArgs({"mine", "--prefs", GORS_DATA_DIR "/prefs_example.csv",
                               "--catalog", "pms", "--out",
                               (TempDir() / "m.json").string()});
  EXPECT_EQ(bad.code, kExitInvalidData);
  EXPECT_TRUE(Contains(bad.err, "error: "));
}

}  // namespace
}  // namespace gors::cli
