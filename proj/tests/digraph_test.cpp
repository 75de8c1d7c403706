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

#include "amity/digraph.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "amity/errors.hpp"
#include "amity/generators.hpp"
#include "oracles.hpp"

namespace amity {
namespace {

using Adj = std::vector<std::vector<VertexId>>;

TEST(DigraphTest, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(Digraph(Adj{{0}}), PreconditionError);
  EXPECT_THROW(Digraph(Adj{{1, 1}, {}}), PreconditionError);
  EXPECT_THROW(Digraph(Adj{{2}, {}}), PreconditionError);
  EXPECT_NO_THROW(Digraph(Adj{{1}, {0}}));
}

TEST(DigraphTest, SimplifiedDropsLoopsAndRepeats) {
  auto g = Digraph::simplified({{0, 1, 1, 2}, {1, 0}, {}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 0}}));
}

TEST(DigraphTest, DegreeSumsMatchEdgeCount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_d_out(15, 4, seed);
    std::size_t out_sum = 0, in_sum = 0;
    for (VertexId v = 0; v < g.size(); ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
    }
    EXPECT_EQ(out_sum, g.edge_count());
    EXPECT_EQ(in_sum, g.edge_count());
  }
}

TEST(DigraphTest, MinOutDegree) {
  EXPECT_EQ(min_out_degree(directed_cycle(6)), 1U);
  EXPECT_EQ(min_out_degree(complete_digraph(3)), 2U);
  EXPECT_EQ(min_out_degree(complete_digraph(5)), 4U);
  EXPECT_THROW(min_out_degree(Digraph()), PreconditionError);
}

TEST(DigraphTest, PartitionBasics) {
  auto p = Partition::from_block_one(4, std::vector<VertexId>{1, 2});
  EXPECT_EQ(p.to_string(), "0110");
  EXPECT_EQ(p.mask(), 6U);
  EXPECT_TRUE(p.separates(0, 1));
  EXPECT_FALSE(p.separates(1, 2));
  EXPECT_EQ(p.swapped().to_string(), "1001");
  EXPECT_EQ(p.swapped().canonical(), p);
  EXPECT_FALSE(p.is_trivial());
  EXPECT_TRUE(Partition::trivial(3).is_trivial());
  EXPECT_THROW(Partition(std::vector<std::uint8_t>{0, 2}), PreconditionError);
}

TEST(SccTest, CycleIsOneComponent) {
  auto comps = strongly_connected_components(directed_cycle(6));
  ASSERT_EQ(comps.size(), 1U);
  EXPECT_EQ(comps[0].size(), 6U);
  EXPECT_EQ(strongly_connected_components(complete_digraph(5)).size(), 1U);
}

TEST(SccTest, TwoTrianglesWithBridgeSinkLast) {
  auto g = Digraph(Adj{{1}, {2}, {0, 3}, {4}, {5}, {3}});
  auto comps = strongly_connected_components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4, 5}));
  EXPECT_EQ(sink_components(g), (std::vector<VertexSet>{{3, 4, 5}}));
}

TEST(SccTest, CondensationIsTopological) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_layered(14, 2, 3, seed);
    auto comps = strongly_connected_components(g);
    std::vector<std::size_t> owner(g.size(), g.size());
    std::size_t covered = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (VertexId v : comps[c]) {
        EXPECT_EQ(owner[v], g.size());
        owner[v] = c;
        ++covered;
      }
    }
    EXPECT_EQ(covered, g.size());
    for (const auto& [u, v] : g.edges()) EXPECT_LE(owner[u], owner[v]);
  }
}

TEST(FindCycleTest, Examples) {
  auto cycle = find_cycle(directed_cycle(6));
  ASSERT_TRUE(cycle);
  EXPECT_EQ(cycle->size(), 6U);
  EXPECT_FALSE(find_cycle(Digraph(Adj{{1}, {2}, {}})));
  auto k3 = complete_digraph(3);
  auto two = find_cycle(k3, std::vector<VertexId>{0, 1});
  ASSERT_TRUE(two);
  EXPECT_EQ(*two, (std::vector<VertexId>{0, 1}));
}

TEST(FindCycleTest, AlwaysFindsOneWhenInducedOutDegreePositive) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = random_d_out(12, 3, seed);
    std::vector<VertexId> within;
    for (VertexId v = 0; v < g.size(); ++v) {
      if ((seed >> (v % 8)) & 1U || v % 3 == 0) within.push_back(v);
    }
    auto inside = membership(g.size(), within);
    bool positive = std::all_of(within.begin(), within.end(), [&](VertexId v) {
      auto out = g.out(v);
      return std::any_of(out.begin(), out.end(), [&](VertexId w) { return inside[w]; });
    });
    auto c = find_cycle(g, within);
    if (positive) {
      ASSERT_TRUE(c);
    }
    if (c) {
      EXPECT_TRUE(is_directed_cycle(g, *c));
      for (VertexId x : *c) EXPECT_TRUE(inside[x]);
    }
  }
}

TEST(MengerTest, ParallelPaths) {
  // 0->2->4, 1->3->5
  Digraph g({{2}, {3}, {4}, {5}, {}, {}});
  auto result = vertex_disjoint_paths_and_separator(g, std::vector<VertexId>{0, 1},
                                                    std::vector<VertexId>{4, 5});
  EXPECT_EQ(result.paths.size(), 2U);
  EXPECT_EQ(result.separator.size(), 2U);
}

TEST(MengerTest, CutVertex) {
  // 0,1 -> 2 -> 3,4
  Digraph g({{2}, {2}, {3, 4}, {}, {}});
  auto result = vertex_disjoint_paths_and_separator(g, std::vector<VertexId>{0, 1},
                                                    std::vector<VertexId>{3, 4});
  EXPECT_EQ(result.paths.size(), 1U);
  EXPECT_EQ(result.separator, (VertexSet{2}));
}

TEST(MengerTest, MatchesExhaustiveSeparatorOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_d_out(10, 3, seed);
    std::vector<VertexId> sources{seed % 10, (seed + 3) % 10};
    std::vector<VertexId> targets{(seed + 5) % 10, (seed + 7) % 10};
    auto result = vertex_disjoint_paths_and_separator(g, sources, targets);
    EXPECT_EQ(result.paths.size(), result.separator.size());
    EXPECT_EQ(result.separator.size(), oracle::min_separator_size(g, sources, targets));

    auto cut = membership(g.size(), result.separator);
    std::vector<char> used(g.size(), 0);
    for (const auto& path : result.paths) {
      ASSERT_FALSE(path.empty());
      EXPECT_TRUE(std::find(sources.begin(), sources.end(), path.front()) != sources.end());
      EXPECT_TRUE(std::find(targets.begin(), targets.end(), path.back()) != targets.end());
      std::size_t owned = 0;
      for (std::size_t i = 0; i < path.size(); ++i) {
        EXPECT_FALSE(used[path[i]]);
        used[path[i]] = 1;
        owned += cut[path[i]] ? 1 : 0;
        if (i + 1 < path.size()) EXPECT_TRUE(g.has_edge(path[i], path[i + 1]));
      }
      EXPECT_EQ(owned, 1U);
    }
  }
}

TEST(SubgraphTest, InducedAndRemoval) {
  auto g = complete_digraph(4);
  auto sub = remove_vertex(g, 1);
  EXPECT_EQ(sub.to_original, (std::vector<VertexId>{0, 2, 3}));
  EXPECT_EQ(sub.graph, complete_digraph(3));
  auto rev = reverse(Digraph(Adj{{1}, {2}, {}}));
  EXPECT_EQ(rev.edges(), (std::vector<Edge>{{1, 0}, {2, 1}}));
}

}  // namespace
}  // namespace amity
