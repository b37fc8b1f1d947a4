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

#include "gors/io.h"

#include <filesystem>
#include <random>

#include "gors/datasets.h"
#include "gors/errors.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace gors {
namespace {

namespace fs = std::filesystem;

fs::path TempPath(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gors_io_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string ErrorOf(std::string_view json) {
  try {
    ParseFrigJson(json);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

constexpr std::string_view kTwo =
    R"({"requirements": [{"id": 1, "value": 3, "cost": 2},
                         {"id": 2, "value": 4.5, "cost": 1}],
        "dependencies": [%]})";

std::string WithDeps(std::string_view deps) {
  std::string s(kTwo);
  s.replace(s.find('%'), 1, deps);
  return s;
}

TEST(FrigJsonTest, ParsesMinimalDocument) {
  const Frig f = ParseFrigJson(WithDeps(R"({"from": 2, "to": 1, "strength": 0.7})"));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_DOUBLE_EQ(f.requirements[1].value, 4.5);
  EXPECT_EQ(f.requirements[0].cost, 2);
  EXPECT_DOUBLE_EQ(f.rho(1, 0), 0.7);
  EXPECT_DOUBLE_EQ(f.rho(0, 1), 0.0);
}

TEST(FrigJsonTest, RequirementsMayAppearInAnyOrder) {
  const Frig f = ParseFrigJson(
      R"({"requirements": [{"id": 2, "value": 1, "cost": 1, "label": "b"},
                           {"id": 1, "value": 2, "cost": 3, "label": "a"}]})");
  EXPECT_EQ(f.requirements[0].label, "a");
  EXPECT_EQ(f.requirements[1].cost, 1);
}

TEST(FrigJsonTest, RoundTripsEveryDataset) {
  for (std::string_view id : DatasetIds()) {
    const Frig f = LoadDataset(id);
    EXPECT_EQ(ParseFrigJson(FrigToJson(f)), f) << id;
  }
}

TEST(FrigJsonTest, RoundTripsRandomGraphsThroughFiles) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Frig f = testing::RandomFrig(rng);
    // Strengths that are not short decimals still round-trip exactly.
    f.rho(0, 1) = 1.0 / 3.0;
    const fs::path path = TempPath("random.json");
    SaveFrig(f, path);
    EXPECT_EQ(LoadFrig(path), f);
  }
}

TEST(FrigJsonTest, ShippedFilesMatchEmbeddedData) {
  EXPECT_EQ(LoadFrig(GORS_DATA_DIR "/pms.json"), PmsFrig());
  EXPECT_EQ(LoadFrig(GORS_DATA_DIR "/example3.json"), Example3Frig());
  const Frig pms = LoadFrig(GORS_DATA_DIR "/pms.json");
  EXPECT_NEAR(Loi(pms), 113.0 / 506.0, 1e-12);
}

TEST(FrigJsonTest, ErrorsNameTheLocation) {
  EXPECT_NE(ErrorOf(WithDeps(R"({"from": 1, "to": 2, "strength": 1.5})"))
                .find("dependencies[0]: strength of (r1,r2) is 1.5"),
            std::string::npos);
  EXPECT_NE(ErrorOf(WithDeps(R"({"from": 1, "to": 2, "strength": 0.5},
                                {"from": 1, "to": 2, "strength": 0.6})"))
                .find("dependencies[1]: duplicate"),
            std::string::npos);
  EXPECT_NE(ErrorOf(WithDeps(R"({"from": 1, "to": 9, "strength": 0.5})"))
                .find("unknown requirement id 9"),
            std::string::npos);
  EXPECT_NE(ErrorOf(WithDeps(R"({"from": 2, "to": 2, "strength": 0.5})"))
                .find("self-dependency"),
            std::string::npos);
  EXPECT_NE(ErrorOf(WithDeps(R"({"from": 1, "to": 2})")).find("strength"),
            std::string::npos);
  EXPECT_NE(ErrorOf("{\"requirements\": [").find("malformed"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"requirements": [{"id": 1, "value": 1, "cost": 1.5}]})")
                .find("requirements[0]"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"requirements": [{"id": 1, "value": -1, "cost": 1}]})")
                .find("negative"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"requirements": [{"id": 1, "value": 1, "cost": 1},
                                         {"id": 1, "value": 1, "cost": 1}]})")
                .find("duplicate id"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"requirements": [{"id": 3, "value": 1, "cost": 1}]})")
                .find("contiguous"),
            std::string::npos);
  EXPECT_NE(ErrorOf("[]"), "");
}

TEST(FrigJsonTest, LoadErrorsIncludeThePath) {
  const fs::path path = TempPath("bad.json");
  WriteTextFile(path, WithDeps(R"({"from": 1, "to": 2, "strength": 2})"));
  try {
    LoadFrig(path);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(path.string()), std::string::npos);
  }
  EXPECT_THROW(LoadFrig(TempPath("missing.json")), ValidationError);
}

TEST(LoadFrigOrDatasetTest, ResolvesIdsAndFiles) {
  EXPECT_EQ(LoadFrigOrDataset("pms"), PmsFrig());
  const fs::path path = TempPath("ex3.json");
  SaveFrig(Example3Frig(), path);
  EXPECT_EQ(LoadFrigOrDataset(path.string()), Example3Frig());
  EXPECT_THROW(LoadFrigOrDataset("nope"), ValidationError);
}

TEST(PreferenceCsvTest, ParsesWithAndWithoutLabelCell) {
  const PreferenceMatrix a = ParsePreferenceCsv("req,u1,u2,u3\n1,1,0,1\n2,0,0,1\n");
  const PreferenceMatrix b = ParsePreferenceCsv("u1,u2,u3\n2,0,0,1\n1,1,0,1\n");
  for (const PreferenceMatrix* m : {&a, &b}) {
    ASSERT_EQ(m->requirements(), 2u);
    ASSERT_EQ(m->users(), 3u);
    EXPECT_TRUE(m->prefers(0, 0));
    EXPECT_FALSE(m->prefers(0, 1));
    EXPECT_TRUE(m->prefers(1, 2));
    EXPECT_FALSE(m->prefers(1, 0));
  }
}

TEST(PreferenceCsvTest, RejectsMalformedInput) {
  EXPECT_THROW(ParsePreferenceCsv("u1,u2\n"), ValidationError);
  EXPECT_THROW(ParsePreferenceCsv("u1,u2\n1,1,2\n"), ValidationError);
  EXPECT_THROW(ParsePreferenceCsv("u1,u2\n1,1,0\n2,1\n"), ValidationError);
  EXPECT_THROW(ParsePreferenceCsv("u1,u2\n1,1,0\n1,0,1\n"), ValidationError);
  EXPECT_THROW(ParsePreferenceCsv("u1,u2\n3,1,0\n"), ValidationError);
  EXPECT_THROW(ParsePreferenceCsv("u1,u2,u3,u4\n1,1,0\n"), ValidationError);
}

TEST(TextFileTest, WriteFailureIsPrecondition) {
  EXPECT_THROW(WriteTextFile("/nonexistent-dir/x/y.txt", "x"), PreconditionError);
}

}  // namespace
}  // namespace gors
