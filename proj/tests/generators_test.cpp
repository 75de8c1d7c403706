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

#include "amity/generators.hpp"

#include <gtest/gtest.h>

#include "amity/cycles.hpp"
#include "amity/errors.hpp"

namespace amity {
namespace {

TEST(GeneratorsTest, NamedFamilies) {
  EXPECT_EQ(directed_cycle(6).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  EXPECT_EQ(complete_digraph(5).edge_count(), 20U);
  std::vector<std::size_t> offsets{1, 2, 3};
  auto c = circulant(7, offsets);
  EXPECT_EQ(c.edge_count(), 21U);
  EXPECT_TRUE(c.has_edge(6, 2));
  EXPECT_THROW(circulant(5, std::vector<std::size_t>{5}), PreconditionError);
  EXPECT_THROW(random_d_out(4, 4, 1), PreconditionError);
}

TEST(GeneratorsTest, RandomDOutIsDeterministicAndExact) {
  auto a = random_d_out(30, 5, 42);
  EXPECT_EQ(a, random_d_out(30, 5, 42));
  EXPECT_FALSE(a == random_d_out(30, 5, 43));
  for (VertexId v = 0; v < a.size(); ++v) EXPECT_EQ(a.out_degree(v), 5U);
}

TEST(GeneratorsTest, RandomRegularDegrees) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = random_regular(60, 9, seed);
    for (VertexId v = 0; v < g.size(); ++v) {
      EXPECT_EQ(g.out_degree(v), 9U);
      EXPECT_EQ(g.in_degree(v), 9U);
    }
    std::vector<std::size_t> offsets{1, 2, 3, 4, 5, 6, 7, 8, 9};
    EXPECT_FALSE(g == circulant(60, offsets));
  }
}

TEST(GeneratorsTest, LayeredHasSeveralComponents) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_layered(15, 3, 3, seed);
    EXPECT_GE(strongly_connected_components(g).size(), 3U);
    EXPECT_EQ(min_out_degree(g), 3U);
  }
}

TEST(GeneratorsTest, DominatedCubicReconstruction) {
  for (bool same : {true, false}) {
    auto seeds = dominated_cubic_seeds(same);
    auto found = complete_dominated_cubic(same ? 8 : 7, seeds);
    ASSERT_EQ(found.size(), 1U);
    const auto& g = found.front();
    for (VertexId v = 0; v < g.size(); ++v) EXPECT_EQ(g.out_degree(v), 3U);
    for (const auto& [a, b] : g.edges()) {
      EXPECT_FALSE(g.has_edge(b, a));
      EXPECT_TRUE(is_dominated(g, a, b));
    }
  }
  // Edge lists derived by hand from the neighborhood argument.
  auto right = dominated_cubic_opposite_orientation();
  EXPECT_EQ(right.adjacency(), (std::vector<std::vector<VertexId>>{
                                   {4, 5, 6}, {0, 2, 4}, {0, 3, 6}, {0, 1, 5}, {5, 2, 3}, {6, 1, 2}, {4, 1, 3}}));
  auto left = dominated_cubic_same_orientation();
  EXPECT_EQ(left.adjacency(), (std::vector<std::vector<VertexId>>{{4, 5, 6},
                                                                  {0, 2, 4},
                                                                  {0, 3, 5},
                                                                  {0, 1, 6},
                                                                  {5, 2, 7},
                                                                  {6, 3, 7},
                                                                  {4, 1, 7},
                                                                  {1, 2, 3}}));
}

TEST(GeneratorsTest, OutDegreeProductIndexing) {
  OutDegreeProduct five(5, 3);
  EXPECT_EQ(five.count(), 1024U);
  OutDegreeProduct six(6, 3);
  EXPECT_EQ(six.count(), 1000000U);
  EXPECT_EQ(OutDegreeProduct(4, 3).count(), 1U);
  for (std::uint64_t i : {0ULL, 1ULL, 517ULL, 999999ULL}) {
    auto g = six.at(i);
    EXPECT_EQ(six.index_of(g), i);
    EXPECT_EQ(min_out_degree(g), 3U);
  }
  EXPECT_THROW(six.at(1000000), PreconditionError);
}

}  // namespace
}  // namespace amity
