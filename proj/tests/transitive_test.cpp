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

#include "amity/transitive.hpp"

#include <gtest/gtest.h>

#include <set>

#include "amity/errors.hpp"
#include "amity/generators.hpp"
#include "oracles.hpp"

namespace amity {
namespace {

using Adj = std::vector<std::vector<VertexId>>;

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

// Classes of `m` vertices, `c` of them in a ring. Each class is a directed
// cycle and every vertex of class i sends d-1 edges into class i+1.
Digraph class_ring(std::size_t c, std::size_t m, std::size_t d) {
  Adj adjacency(c * m);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      VertexId x = i * m + j;
      adjacency[x].push_back(i * m + (j + 1) % m);
      for (std::size_t s = 0; s + 1 < d; ++s) adjacency[x].push_back(((i + 1) % c) * m + (j + s) % m);
    }
  }
  return Digraph(adjacency);
}

TEST(AutomorphismTest, DirectedCycleHasRotationsOnly) {
  auto set = automorphisms(directed_cycle(6));
  EXPECT_EQ(set.permutations.size(), 6u);
  EXPECT_TRUE(set.transitive);
}

TEST(AutomorphismTest, CompleteDigraphOnThree) {
  auto set = automorphisms(complete_digraph(3));
  EXPECT_EQ(set.permutations.size(), 6u);
}

TEST(AutomorphismTest, CirculantContainsRotations) {
  Digraph g = circulant(7, {1, 2, 3});
  auto set = automorphisms(g);
  EXPECT_TRUE(set.transitive);
  std::set<Permutation> all(set.permutations.begin(), set.permutations.end());
  for (std::size_t k = 0; k < 7; ++k) {
    Permutation rotation(7);
    for (std::size_t i = 0; i < 7; ++i) rotation[i] = (i + k) % 7;
    for (const auto& [u, v] : g.edges()) EXPECT_TRUE(g.has_edge(rotation[u], rotation[v]));
    EXPECT_TRUE(all.count(rotation));
  }
}

TEST(AutomorphismTest, ClosedUnderComposition) {
  for (const Digraph& g : {circulant(8, {1, 3, 4}), complete_digraph(4), dominated_cubic_opposite_orientation()}) {
    auto set = automorphisms(g);
    std::set<Permutation> all(set.permutations.begin(), set.permutations.end());
    for (const auto& a : set.permutations) {
      EXPECT_TRUE(is_automorphism(g, a));
      for (const auto& b : set.permutations) EXPECT_TRUE(all.count(compose(a, b)));
    }
  }
}

TEST(AutomorphismTest, TruncationAndCap) {
  auto set = automorphisms(complete_digraph(6), 12, 50);
  EXPECT_TRUE(set.truncated);
  EXPECT_EQ(set.permutations.size(), 50u);
  EXPECT_TRUE(set.transitive);
  EXPECT_THROW(automorphisms(directed_cycle(13)), CapExceededError);
}

TEST(AutomorphismTest, NonTransitive) {
  Digraph g(Adj{{1, 2}, {2, 0}, {0, 1}, {0, 1}});
  EXPECT_FALSE(automorphisms(g).transitive);
  EXPECT_FALSE(is_vertex_transitive(g));
  EXPECT_TRUE(is_vertex_transitive(circulant(20, {1, 5, 7})));
}

TEST(ClassStructureTest, PrimeCirculantHasSingletons) {
  auto verdict = check_class_structure(circulant(7, {1, 2, 3}));
  EXPECT_TRUE(verdict.holds());
  EXPECT_EQ(verdict.classes.size(), 7u);
  EXPECT_TRUE(verdict.counterexample.empty());
}

TEST(ClassStructureTest, CompleteDigraphOnFour) {
  Digraph g = complete_digraph(4);
  auto verdict = check_class_structure(g);
  auto report = separation_report(g, 1);
  EXPECT_EQ(verdict.classes, report.classes);
  EXPECT_TRUE(verdict.holds());
}

TEST(ClassStructureTest, CirculantZooEqualSizes) {
  for (std::size_t n : {6u, 8u, 9u}) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<std::size_t> offsets;
      for (std::size_t s = 1; s < n; ++s) {
        if (mask >> (s - 1) & 1) offsets.push_back(s);
      }
      if (offsets.size() < 3) continue;
      Digraph g = circulant(n, offsets);
      auto verdict = check_class_structure(g);
      EXPECT_TRUE(verdict.equal_class_sizes) << "n " << n << " mask " << mask;
      EXPECT_TRUE(verdict.holds()) << verdict.counterexample;
    }
  }
}

TEST(ClassStructureTest, DominatedCubicDigraphsAreTransitive) {
  for (const Digraph& g : {dominated_cubic_same_orientation(), dominated_cubic_opposite_orientation()}) {
    for (VertexId v = 0; v < g.size(); ++v) {
      auto tau = find_automorphism(g, 0, v);
      ASSERT_TRUE(tau.has_value());
      EXPECT_TRUE(is_automorphism(g, *tau));
    }
    auto verdict = check_class_structure(g);
    EXPECT_TRUE(verdict.holds());
    EXPECT_EQ(verdict.classes.size(), g.size());
  }
}

TEST(ClassStructureTest, RejectsNonTransitive) {
  EXPECT_THROW(check_class_structure(random_d_out(8, 3, 1)), PreconditionError);
  EXPECT_THROW(check_class_structure(directed_cycle(5)), PreconditionError);
}

TEST(PrimeTest, SmallCirculants) {
  EXPECT_TRUE(prime_separability(circulant(5, {1, 2, 3})).all_singletons);
  EXPECT_TRUE(prime_separability(circulant(7, {1, 2, 4})).all_singletons);
  EXPECT_THROW(prime_separability(circulant(6, {1, 2, 3})), PreconditionError);
}

TEST(PrimeTest, IsPrime) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(11));
  EXPECT_FALSE(is_prime(9));
}

TEST(SingletonWalkTest, ZeroStepWalk) {
  Digraph g = complete_digraph(5);
  Partition p = Partition::from_mask(5, 0b11000);
  auto walk = singleton_walk(g, p, 0);
  EXPECT_EQ(walk.outcome, WalkOutcome::kFound);
  ASSERT_TRUE(walk.singleton.has_value());
  EXPECT_EQ(*walk.singleton, 0u);
  EXPECT_EQ(walk.trail, (std::vector<VertexId>{0}));
}

TEST(SingletonWalkTest, FoundVertexIsMovableAndSingleton) {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Digraph g = random_d_out(10, 3, seed);
    auto report = separation_report(g, 1);
    for (const auto& p : report.partitions) {
      for (VertexId v0 = 0; v0 < g.size(); ++v0) {
        std::size_t zero = 0, one = 0;
        for (VertexId y : g.out(v0)) (p.block(y) == 0 ? zero : one)++;
        if (p.block(v0) != 0 || zero < 2 || one < 1) continue;
        auto walk = singleton_walk(g, p, v0);
        EXPECT_EQ(walk.trail.front(), v0);
        EXPECT_EQ(std::set<VertexId>(walk.trail.begin(), walk.trail.end()).size(), walk.trail.size());
        if (walk.outcome != WalkOutcome::kFound) continue;
        ++found;
        VertexId w = *walk.singleton;
        std::vector<std::uint8_t> blocks(g.size());
        for (VertexId x = 0; x < g.size(); ++x) blocks[x] = static_cast<std::uint8_t>(p.block(x));
        blocks[w] = 1;
        EXPECT_TRUE(is_friendly(g, Partition(blocks), 1));
        EXPECT_EQ(report.classes[report.class_of()[w]].size(), 1u);
      }
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(SingletonWalkTest, StuckIsReported) {
  // 1 depends on 0 alone and has no block-1 out-neighbor.
  Digraph g(Adj{{1, 2, 3}, {0}, {0}, {4}, {3}});
  Partition p = Partition::from_mask(5, 0b11000);
  ASSERT_TRUE(is_friendly(g, p, 1));
  auto walk = singleton_walk(g, p, 0);
  EXPECT_EQ(walk.outcome, WalkOutcome::kStuck);
  EXPECT_EQ(walk.trail, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(to_string(walk.outcome), "hypothesis_violated_stuck");
}

TEST(SingletonWalkTest, RejectsBadStart) {
  Digraph g = complete_digraph(5);
  EXPECT_THROW(singleton_walk(g, Partition::from_mask(5, 0b11000), 3), PreconditionError);
  EXPECT_THROW(singleton_walk(g, Partition::from_mask(5, 0b00001), 1), PreconditionError);
}

TEST(QuotientTest, SingletonsKeepEdges) {
  Digraph g = circulant(5, {1, 2});
  std::vector<VertexSet> classes;
  for (VertexId v = 0; v < 5; ++v) classes.push_back({v});
  auto q = quotient(g, classes).graph;
  EXPECT_EQ(q.edge_count(), g.edge_count());
  for (const auto& [u, v] : g.edges()) EXPECT_TRUE(q.has_edge(u, v));
}

TEST(QuotientTest, OneClassIsOneVertex) {
  auto q = quotient(complete_digraph(4), {{0, 1, 2, 3}});
  EXPECT_EQ(q.graph.size(), 1u);
  EXPECT_EQ(q.graph.edge_count(), 0u);
}

TEST(QuotientTest, TwoTrianglesOneCrossDirection) {
  Digraph g(Adj{{1, 3}, {2, 4}, {0, 5}, {4}, {5}, {3}});
  auto q = quotient(g, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(q.graph.edge_count(), 1u);
  EXPECT_TRUE(q.graph.has_edge(0, 1));
}

TEST(QuotientTest, RejectsMalformedClasses) {
  Digraph g = complete_digraph(3);
  EXPECT_THROW(quotient(g, {{0, 1}}), PreconditionError);
  EXPECT_THROW(quotient(g, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(quotient(g, {{0, 1, 2}, {}}), PreconditionError);
}

TEST(HallTest, SingletonPair) {
  Digraph g(Adj{{1}, {0}});
  auto result = hall_matching_contract(g, {0}, {1});
  EXPECT_EQ(result.graph.size(), 1u);
  EXPECT_EQ(result.matching, (std::vector<VertexId>{1}));
  EXPECT_EQ(result.trace.merges.size(), 1u);
}

TEST(HallTest, ThreeRegularBipartiteHasPerfectMatching) {
  Digraph g = class_ring(3, 3, 4);
  auto result = hall_matching_contract(g, {0, 1, 2}, {3, 4, 5});
  std::set<VertexId> partners(result.matching.begin(), result.matching.end());
  EXPECT_EQ(partners.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(g.has_edge(i, result.matching[i]));
}

TEST(HallTest, DegreesStayRegular) {
  for (std::size_t c : {3u, 4u}) {
    for (std::size_t m : {3u, 4u, 5u}) {
      for (std::size_t d = 2; d <= m + 1; ++d) {
        Digraph g = class_ring(c, m, d);
        VertexSet k, l;
        for (VertexId j = 0; j < m; ++j) {
          k.push_back(j);
          l.push_back(m + j);
        }
        auto result = hall_matching_contract(g, k, l);
        ASSERT_EQ(result.graph.size(), g.size() - m);
        for (VertexId x = 0; x < result.graph.size(); ++x) {
          EXPECT_EQ(result.graph.out_degree(x), d) << "c " << c << " m " << m << " d " << d;
          EXPECT_EQ(result.graph.in_degree(x), d);
        }
      }
    }
  }
}

TEST(HallTest, NoMatchingThrows) {
  // Both K vertices only reach the same L vertex.
  Digraph g(Adj{{2}, {2}, {0}, {0}});
  EXPECT_THROW(hall_matching_contract(g, {0, 1}, {2, 3}), PreconditionError);
  EXPECT_THROW(hall_matching_contract(g, {0}, {2, 3}), PreconditionError);
}

TEST(HallTest, HopcroftKarpMaximum) {
  auto match = hopcroft_karp({{0, 1}, {0}, {1, 2}}, 3);
  std::set<std::size_t> used;
  for (std::size_t m : match) {
    ASSERT_NE(m, SIZE_MAX);
    used.insert(m);
  }
  EXPECT_EQ(used.size(), 3u);
}

}  // namespace
}  // namespace amity
