// Copyright 2026 The wcore Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "commands.hpp"

namespace wcore::cli {
namespace {

using nlohmann::json;

std::string doc(const char* entries, const char* domain = "gaussian_rationals") {
  return json{{"domain", domain}, {"rows", 2}, {"cols", 2}, {"entries", json::parse(entries)}}.dump();
}

const std::string kA = doc(R"([["1","1"],["0","0"]])");
const std::string kB1 = doc(R"([["1","1"],["2","-2"]])");
const std::string kW1 = doc(R"([["1","0"],["1","0"]])");

TEST(Cli, ComputeWCoreFromFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "wcore_cli_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "a.json") << kA;
  std::ofstream(dir / "w.json") << kW1;
  const auto r = cmd_compute({"wcore", (dir / "a.json").string(), (dir / "w.json").string(), std::nullopt});
  ASSERT_TRUE(r.ok) << r.to_json().dump();
  EXPECT_EQ(r.payload["value"]["entries"], json::parse(R"([["1/2","0"],["0","0"]])"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ComputeErrors) {
  auto r = cmd_compute({"core", doc("[[0,1],[0,0]]"), std::nullopt, std::nullopt});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.payload["error"], "NotCoreInvertible");
  r = cmd_compute({"wcore", kA, std::nullopt, std::nullopt});
  EXPECT_EQ(r.payload["error"], "ConfigError");
  r = cmd_compute({"drazin", kA, std::nullopt, std::nullopt});
  EXPECT_EQ(r.payload["error"], "UnknownKind");
  r = cmd_compute({"mp", "/nonexistent/a.json", std::nullopt, std::nullopt});
  EXPECT_EQ(r.payload["error"], "ParseError");
  r = cmd_compute({"mp", R"({"rows":2,"cols":2,"entries":[["1","1"]]})", std::nullopt, std::string("rationals")});
  EXPECT_EQ(r.payload["error"], "ShapeError");
}

TEST(Cli, ComputeIdentity) {
  const auto r = cmd_compute({"mp", doc("[[1,0],[0,1]]", "rationals"), std::nullopt, std::nullopt});
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.payload["value"]["entries"], json::parse(R"([["1","0"],["0","1"]])"));
}

TEST(Cli, Order) {
  OrderArgs args{"wcore", kA, kB1, kW1, "relaxed", std::nullopt};
  auto r = cmd_order(args);
  ASSERT_TRUE(r.ok) << r.to_json().dump();
  EXPECT_TRUE(r.payload["holds"]);
  EXPECT_EQ(r.payload["characterizations"].size(), 12u);

  args.mode = "strict";
  r = cmd_order(args);
  EXPECT_EQ(r.payload["error"], "PreconditionUnmet");

  r = cmd_order({"core", kA, kB1, std::nullopt, "strict", std::nullopt});
  ASSERT_TRUE(r.ok);
  EXPECT_FALSE(r.payload["holds"]);
  EXPECT_EQ(r.payload["failed_condition"], "aa^⊕=ba^⊕");

  r = cmd_order({"star", kB1, kB1, std::nullopt, "strict", std::nullopt});
  EXPECT_TRUE(r.payload["holds"]);
}

TEST(Cli, Verify) {
  VerifyArgs args;
  args.ids = {"THM_WCORE_12WAY"};
  args.trials = 30;
  auto r = cmd_verify(args);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.payload["summary"]["passed"], true);

  args.ids = {"NOPE"};
  r = cmd_verify(args);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.payload["error"], "UnknownProperty");

  args.ids = {"THM_WCORE_12WAY"};
  args.exhaustive = true;
  r = cmd_verify(args);
  EXPECT_EQ(r.payload["error"], "ConfigError");

  args = VerifyArgs{};
  args.ids = {"THM_WCORE_12WAY"};
  args.trials = 5;
  args.min_applicable = 50;
  r = cmd_verify(args);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.diagnostics.size(), 1u);
}

TEST(Cli, Examples) {
  const auto r = cmd_examples();
  EXPECT_TRUE(r.ok);
  EXPECT_GT(r.payload["checks"].size(), 10u);
}

TEST(Cli, Enumerate) {
  auto r = cmd_enumerate({"mod_p:3", 2, std::nullopt, std::nullopt, std::nullopt, false});
  EXPECT_EQ(r.payload["count"], 81);
  r = cmd_enumerate({"mod_p:2", 2, std::nullopt, std::nullopt, std::nullopt, true});
  EXPECT_EQ(r.payload["matrices"].size(), 16u);
  r = cmd_enumerate({"mod_p:2", 2, std::string("one3"), doc("[[1,1],[1,1]]", "mod_p:2"), std::nullopt, false});
  EXPECT_EQ(r.payload["count"], 0);
  r = cmd_enumerate({"rationals", 2, std::nullopt, std::nullopt, std::nullopt, false});
  EXPECT_EQ(r.payload["error"], "ConfigError");
}

TEST(Cli, Envelope) {
  CommandResult r;
  EXPECT_FALSE(r.to_json().contains("timestamp"));
  r.timestamp = utc_timestamp();
  const auto j = r.to_json();
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["timestamp"].get<std::string>().size(), 20u);
}

}  // namespace
}  // namespace wcore::cli
