// Copyright 2026 The extform Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace extform::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "extform");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return std::string(EXTFORM_DATA_DIR) + "/" + name;
}

std::string FirstLine(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliTest, GomoryHuOnPath) {
  Invocation r = Invoke({"gomory-hu", Data("path3.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(FirstLine(r.out), "optimum 3 (3.000000); tree {a-b,b-c}; GH check: pass");
}

TEST(CliTest, TCutOnPath) {
  Invocation r = Invoke({"tcut", Data("path3.json"), "--T", "a,c"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(FirstLine(r.out),
            "optimum 1 (1.000000); cut δ({c}); oracle: 1 (1.000000); pass");
}

TEST(CliTest, SteinerOnStar) {
  for (const char* backend : {"split", "arborescence", "eq10", "eq11"}) {
    Invocation r = Invoke({"steiner", Data("star.json"), "--S", "s1,s2,s3", "--backend", backend});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("Steiner opt 3 (3.000000)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("ratio bound 4 ≤ 6: pass"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.rfind("LP 4 (4.000000)", 0), 0u) << r.out;
  }
}

TEST(CliTest, MstOnCycle) {
  Invocation r = Invoke({"mst", Data("c4.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(FirstLine(r.out),
            "optimum 3 (3.000000) [split]; tree {a-b,b-c,c-d}; Kruskal: 3 (3.000000); pass");
}

TEST(CliTest, HullExample) {
  Invocation r = Invoke({"hull", Data("hull.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("optimum 4 (4.000000); active polyhedron k = 2"),
            std::string::npos)
      << r.out;
}

TEST(CliTest, RationalsPrintedExactlyWithDecimal) {
  const std::string path = WriteTemp(
      "extform_cli_half.json",
      R"({"nodes":["a","b"],"edges":[{"u":"a","v":"b","c":"3/2"}]})");
  Invocation r = Invoke({"gomory-hu", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(FirstLine(r.out), "optimum 3/2 (1.500000); tree {a-b}; GH check: pass");
}

TEST(CliTest, OutputIsDeterministic) {
  Invocation a = Invoke({"tcut", Data("c4.json"), "--T", "a,b,c,d", "--json", "-"});
  Invocation b = Invoke({"tcut", Data("c4.json"), "--T", "a,b,c,d", "--json", "-"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, JsonReportParses) {
  Invocation r = Invoke({"gomory-hu", Data("path3.json"), "--json", "-"});
  ASSERT_EQ(r.code, kExitOk);
  const std::string json = r.out.substr(r.out.find("result: pass\n") + 13);
  nlohmann::json doc = nlohmann::json::parse(json);
  EXPECT_TRUE(doc.at("passed").get<bool>());
}

TEST(CliTest, DumpWritesLpAndBlockIndex) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "extform_cli_dump.lp").string();
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".blocks.json");
  Invocation r = Invoke({"mst", Data("path3.json"), "--dump", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  ASSERT_TRUE(std::filesystem::exists(path));
  std::ifstream blocks(path + ".blocks.json");
  nlohmann::json doc = nlohmann::json::parse(blocks);
  EXPECT_EQ(doc.at("blocks").at(0).at("symbol"), "lambda");
}

TEST(CliTest, NoDumpWithoutFlag) {
  Invocation r = Invoke({"tcut", Data("path3.json"), "--T", "a,c"});
  EXPECT_EQ(r.out.find("lp written"), std::string::npos);
}

TEST(CliTest, DumpLpToStdout) {
  Invocation r = Invoke({"dump-lp", Data("path3.json"), "--formulation", "shortest-path",
                  "--source", "a", "--sink", "c"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("\\ extform lp v1\n", 0), 0u);
}

TEST(CliTest, VerifySingleSuite) {
  Invocation r = Invoke({"verify", "--suite", "hull", "--seed", "7"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("result: pass (1 suites)"), std::string::npos);
}

TEST(CliTest, ErrorExitCodesAreDistinct) {
  const std::string malformed = WriteTemp("extform_cli_bad.json", "{\"nodes\": [");
  const std::string disconnected = WriteTemp(
      "extform_cli_disc.json",
      R"({"nodes":["a","b","c"],"edges":[{"u":"a","v":"b","c":1}]})");
  EXPECT_EQ(Invoke({"mst", malformed}).code, kExitMalformedInput);
  EXPECT_EQ(Invoke({"tcut", Data("path3.json"), "--T", "a"}).code, kExitOddTerminalSet);
  EXPECT_EQ(Invoke({"mst", disconnected}).code, kExitDisconnected);
  EXPECT_EQ(Invoke({"tcut", Data("c4.json"), "--T", "a,b", "--max-nodes", "3"}).code,
            kExitSizeCap);
  EXPECT_EQ(Invoke({"tcut", Data("c4.json"), "--T", "a,b", "--pivot-cap", "1"}).code,
            kExitAborted);
  EXPECT_EQ(Invoke({"tcut", Data("path3.json"), "--T", "a,zz"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"mst"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"mst", Data("c4.json"), "--backend", "other"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"mst", Data("c4.json"), "--pivot-cap", "0"}).code, kExitUsage);
}

TEST(CliTest, ExitCodeMapping) {
  EXPECT_EQ(ExitCodeFor(ErrorCode::kParse), kExitMalformedInput);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kOddTerminalSet), kExitOddTerminalSet);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kDisconnected), kExitDisconnected);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kSizeCapExceeded), kExitSizeCap);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kInternal), kExitInternal);
}

}  // namespace
}  // namespace extform::cli
