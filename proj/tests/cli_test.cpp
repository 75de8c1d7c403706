// Copyright 2026 The Amity Authors
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

#include "amity/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "amity/generators.hpp"
#include "amity/io.hpp"
#include "oracles.hpp"

namespace amity {
namespace {

using json = nlohmann::json;

struct Run {
  int code;
  json report;
};

Run run(const std::vector<std::string>& args) {
  auto result = run_command(args);
  return {result.exit_code, json::parse(result.out)};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, SeparateTriangleIsInseparable) {
  auto path = temp_file("amity_cli_k3.txt", serialize_edge_list(complete_digraph(3)));
  auto r = run({"separate", "--graph", path, "--set", "0,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report["results"]["result"], "inseparable");
  EXPECT_EQ(r.report["command"], "separate");
  EXPECT_EQ(r.report["input_digest"], digest(complete_digraph(3)));
}

TEST(CliTest, SeparateFindsFriendlyPartition) {
  auto r = run({"separate", "--graph", "complete(4)", "--set", "0,1"});
  ASSERT_EQ(r.code, 0);
  Partition p = parse_partition([&] {
    std::string text;
    for (char c : r.report["results"]["partition"].get<std::string>()) text += std::string(1, c) + "\n";
    return text;
  }());
  EXPECT_TRUE(p.separates(0, 1));
  EXPECT_TRUE(oracle::separable(complete_digraph(4), 0, 1));
}

TEST(CliTest, EnumerateOppositeOrientation) {
  auto r = run({"enumerate", "--graph", "lemma46_right", "--nontrivial"});
  EXPECT_EQ(r.code, 0);
  EXPECT_GE(r.report["results"]["count"].get<int>(), 2);
  std::size_t expected = oracle::friendly_masks(dominated_cubic_opposite_orientation(), 1).size() - 1;
  EXPECT_EQ(r.report["results"]["count"].get<std::size_t>(), expected);
}

TEST(CliTest, EnumerateCountsTrivialUnlessAsked) {
  auto all = run({"enumerate", "--graph", "cycle(6)"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.report["results"]["count"], 1);
  auto nontrivial = run({"enumerate", "--graph", "cycle(6)", "--nontrivial"});
  EXPECT_EQ(nontrivial.code, 1);
  EXPECT_EQ(nontrivial.report["results"]["count"], 0);
}

TEST(CliTest, CheckMatchesIsFriendly) {
  Digraph g = complete_digraph(4);
  auto graph = temp_file("amity_cli_k4.txt", serialize_edge_list(g));
  auto good = temp_file("amity_cli_good.txt", serialize_partition(Partition::from_mask(4, 0b0011)));
  auto bad = temp_file("amity_cli_bad.txt", serialize_partition(Partition::from_mask(4, 0b0001)));
  auto r = run({"check", "--graph", graph, "--partition", good, "--r", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.report["results"]["friendly"].get<bool>());
  r = run({"check", "--graph", graph, "--partition", bad, "--r", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report["results"]["violations"], json::array({0}));
  r = run({"check", "--graph", graph, "--partition", "0011", "--r", "2"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliTest, ErrorsAreMachineReadable) {
  auto r = run({"separate", "--graph", "cycle(", "--set", "0,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["error"]["code"], "parse_error");
  r = run({"separate", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["error"]["code"], "usage");
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  r = run({"enumerate", "--graph", "cycle(30)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["error"]["code"], "cap_exceeded");
  r = run({"separate", "--graph", "cycle(4)", "--set", "0,9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["error"]["code"], "precondition");
}

TEST(CliTest, CapFlagBeatsEnvironment) {
  ::setenv("AMITY_CAP", "30", 1);
  EXPECT_EQ(run({"enumerate", "--graph", "cycle(26)"}).code, 0);
  EXPECT_EQ(run({"enumerate", "--graph", "cycle(26)", "--cap", "20"}).code, 2);
  ::setenv("AMITY_CAP", "abc", 1);
  EXPECT_EQ(run({"enumerate", "--graph", "cycle(6)"}).code, 2);
  ::unsetenv("AMITY_CAP");
}

TEST(CliTest, ReportShape) {
  auto r = run({"lll-separate", "--graph", "random_regular(40,9)", "--set", "0,1", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  for (const char* key : {"command", "input_digest", "seed", "results", "version"}) {
    EXPECT_TRUE(r.report.contains(key)) << key;
  }
  EXPECT_EQ(r.report["seed"], 3);
  EXPECT_TRUE(r.report["results"]["success"].get<bool>());
  auto text = run_command({"lll-separate", "--graph", "random_regular(40,9)", "--set", "0,1", "--seed", "3"}).out;
  EXPECT_EQ(text, r.report.dump(2) + "\n");
}

TEST(CliTest, RationalsAreStrings) {
  auto r = run({"extract-subdigraph", "--graph", "random_d_out(200,10)", "--r", "2", "--trials", "5"});
  EXPECT_TRUE(r.report["results"]["mean_fraction"].is_string());
  EXPECT_EQ(r.report["results"]["expectation_bound"], "26851/59049");
  EXPECT_EQ(r.report["results"]["d_r"], 10);
}

TEST(CliTest, GenerateMatchesLibrary) {
  auto r = run({"generate", "--kind", "random_d_out", "--params", "12,3", "--seed", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_edge_list(r.report["results"]["edge_list"].get<std::string>()), random_d_out(12, 3, 9));
  EXPECT_EQ(run({"generate", "--kind", "lemma46_left"}).report["results"]["n"], 8);
}

TEST(CliTest, OtherCommandsRun) {
  EXPECT_EQ(run({"compress", "--graph", "lemma46_left"}).code, 0);
  EXPECT_EQ(run({"cycles", "--graph", "complete(5)", "--k", "3"}).code, 1);
  EXPECT_EQ(run({"cycles", "--graph", "complete(5)", "--k", "2"}).code, 0);
  EXPECT_EQ(run({"separable-vertex", "--graph", "complete(6)"}).code, 0);
  EXPECT_EQ(run({"reduce-scc", "--graph", "disjoint_union(complete(4),complete(4))", "--set", "0,4"}).code, 0);
  auto t = run({"transitive-analyze", "--graph", "circulant(7,1,2,3)"});
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(t.report["results"]["prime_all_singletons"].get<bool>());
  auto s = run({"scan", "--d", "2", "--n-min", "3", "--n-max", "3"});
  EXPECT_EQ(s.code, 1);
  EXPECT_EQ(s.report["results"]["total_hits"], 1);
  EXPECT_EQ(run({"verify-theorems", "--only", "3,4"}).code, 0);
  EXPECT_EQ(run({"verify-theorems", "--only", "13"}).code, 2);
}

}  // namespace
}  // namespace amity
