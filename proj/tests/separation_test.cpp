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

#include "amity/separation.hpp"

#include <gtest/gtest.h>

#include "amity/errors.hpp"
#include "amity/generators.hpp"
#include "oracles.hpp"

namespace amity {
namespace {

bool oracle_has_separable_vertex(const Digraph& g) {
  for (VertexId u = 0; u < g.size(); ++u) {
    bool all = true;
    for (VertexId w = 0; w < g.size() && all; ++w) {
      if (w != u && !oracle::separable(g, u, w)) all = false;
    }
    if (all) return true;
  }
  return false;
}

TEST(FindSeparableVertexTest, DirectedCycleHasNone) {
  EXPECT_FALSE(find_separable_vertex(directed_cycle(6)).has_value());
}

TEST(FindSeparableVertexTest, AgreesWithOracleOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph g = random_d_out(9, 2 + seed % 3, seed);
    auto found = find_separable_vertex(g);
    ASSERT_EQ(found.has_value(), oracle_has_separable_vertex(g)) << "seed " << seed;
    if (found) {
      EXPECT_TRUE(certifies_separable_vertex(g, found->certificate));
      EXPECT_EQ(found->certificate.subject, found->vertex);
      for (VertexId w = 0; w < g.size(); ++w) {
        if (w != found->vertex) EXPECT_TRUE(oracle::separable(g, found->vertex, w));
      }
    }
  }
}

TEST(FindSeparableVertexTest, HighDegreeDigraphHasOne) {
  Digraph g = random_d_out(16, 15, 7);
  auto found = find_separable_vertex(g);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(certifies_separable_vertex(g, found->certificate));
}

TEST(FindSeparableVertexTest, CapIsEnforced) {
  EXPECT_THROW(find_separable_vertex(directed_cycle(30), 24), CapExceededError);
}

TEST(FindSeparableVertexTest, CandidatesListEveryVertexOnce) {
  Digraph g = random_d_out(12, 3, 4);
  auto order = separable_vertex_candidates(g);
  std::sort(order.begin(), order.end());
  ASSERT_EQ(order.size(), g.size());
  for (VertexId v = 0; v < g.size(); ++v) EXPECT_EQ(order[v], v);
}

TEST(VerifyCertificateTest, RejectsWrongClaims) {
  Digraph g = complete_digraph(4);
  SeparationCertificate bad{0, {{{1}, Partition::trivial(4)}}};
  EXPECT_FALSE(verify_certificate(g, bad));
  SeparationCertificate good{0, {{{2}, Partition::from_mask(4, 0b0101)}}};
  EXPECT_FALSE(verify_certificate(g, good));
  good.witnesses[0].partition = Partition::from_mask(4, 0b1100);
  EXPECT_TRUE(verify_certificate(g, good));
  EXPECT_FALSE(certifies_separable_vertex(g, good));
}

TEST(KSeparableTest, DirectedCycleGivesPartialZero) {
  auto result = find_k_separable_vertices(directed_cycle(6), 1);
  EXPECT_FALSE(result.complete);
  EXPECT_TRUE(result.found.empty());
}

TEST(KSeparableTest, SingleStepMatchesFinder) {
  Digraph g = random_d_out(10, 4, 3);
  auto one = find_k_separable_vertices(g, 1);
  auto direct = find_separable_vertex(g);
  ASSERT_EQ(one.found.size(), direct ? 1u : 0u);
  if (direct) EXPECT_EQ(one.found[0].vertex, direct->vertex);
}

TEST(KSeparableTest, CertificatesHoldOnInputDigraph) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Digraph g = random_d_out(12, 5, seed);
    auto result = find_k_separable_vertices(g, 3);
    for (const auto& item : result.found) {
      EXPECT_TRUE(certifies_separable_vertex(g, item.certificate)) << "seed " << seed;
      for (VertexId w = 0; w < g.size(); ++w) {
        if (w != item.vertex) EXPECT_TRUE(oracle::separable(g, item.vertex, w));
      }
    }
    EXPECT_EQ(result.complete, result.found.size() == 3);
    EXPECT_EQ(result.min_out_degree_per_step.front(), min_out_degree(g));
  }
}

TEST(SeparatorCycleTest, CompleteDigraphOnFourWithTwoTargets) {
  Digraph g = complete_digraph(4);
  std::vector<VertexId> targets{0, 1};
  auto result = attach_separator_cycle(g, targets, 4);
  EXPECT_EQ(result.extended.size(), 8u);
  for (VertexId x : result.new_vertices) EXPECT_EQ(result.extended.out_degree(x), 3u);
  EXPECT_EQ(min_out_degree(result.extended), 3u);
  EXPECT_TRUE(result.degree_preserved);
}

TEST(SeparatorCycleTest, TwoCycle) {
  std::vector<VertexId> targets{0};
  auto result = attach_separator_cycle(directed_cycle(3), targets, 2);
  EXPECT_TRUE(result.extended.has_edge(3, 4));
  EXPECT_TRUE(result.extended.has_edge(4, 3));
}

TEST(SeparatorCycleTest, WarnsWhenDegreeDrops) {
  std::vector<VertexId> targets{0};
  auto result = attach_separator_cycle(complete_digraph(5), targets, 3);
  EXPECT_FALSE(result.degree_preserved);
  EXPECT_FALSE(result.warning.empty());
}

TEST(SeparatorCycleTest, SplittingCycleSplitsTargets) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph g = random_d_out(7, 2, seed);
    std::vector<VertexId> targets(g.size());
    for (VertexId v = 0; v < g.size(); ++v) targets[v] = v;
    if (seed % 2) targets = {0, 2, 5};
    auto result = attach_separator_cycle(g, targets, 3);
    std::uint64_t cycle_mask = 0, target_mask = 0;
    for (VertexId x : result.new_vertices) cycle_mask |= std::uint64_t{1} << x;
    for (VertexId x : targets) target_mask |= std::uint64_t{1} << x;
    for (std::uint64_t mask : oracle::friendly_masks(result.extended, 1)) {
      bool cycle_split = (mask & cycle_mask) != 0 && (mask & cycle_mask) != cycle_mask;
      bool target_split = (mask & target_mask) != 0 && (mask & target_mask) != target_mask;
      if (cycle_split) EXPECT_TRUE(target_split) << "seed " << seed;
    }
  }
}

TEST(SeparatorCycleTest, RejectsBadArguments) {
  std::vector<VertexId> none;
  std::vector<VertexId> one{0};
  EXPECT_THROW(attach_separator_cycle(directed_cycle(3), none, 3), PreconditionError);
  EXPECT_THROW(attach_separator_cycle(directed_cycle(3), one, 1), PreconditionError);
}

TEST(PendantTest, ZeroPendantsIsIdentity) {
  Digraph g = complete_digraph(4);
  std::vector<VertexId> targets{0, 1, 2};
  EXPECT_EQ(attach_pendants(g, targets, 4).extended, g);
}

TEST(PendantTest, PendantsHaveInDegreeZero) {
  Digraph g = complete_digraph(4);
  std::vector<VertexId> targets{0, 1, 2};
  auto result = attach_pendants(g, targets, 9);
  ASSERT_EQ(result.new_vertices.size(), 5u);
  for (VertexId x : result.new_vertices) {
    EXPECT_EQ(result.extended.in_degree(x), 0u);
    EXPECT_EQ(result.extended.out_degree(x), 3u);
  }
}

TEST(PendantTest, PreservesCountForInseparableTargets) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Digraph g = random_d_out(8, 2, seed);
    // Pick two targets with no friendly partition separating them.
    std::optional<std::pair<VertexId, VertexId>> pair;
    for (VertexId a = 0; a < g.size() && !pair; ++a) {
      for (VertexId b = a + 1; b < g.size() && !pair; ++b) {
        if (!oracle::separable(g, a, b)) pair = {a, b};
      }
    }
    if (!pair) continue;
    std::vector<VertexId> targets{pair->first, pair->second};
    auto result = attach_pendants(g, targets, g.size() + 5);
    EXPECT_EQ(oracle::friendly_masks(result.extended, 1).size(), oracle::friendly_masks(g, 1).size())
        << "seed " << seed;
    EXPECT_EQ(enumerate_friendly(result.extended, 1, true).size(), enumerate_friendly(g, 1, true).size());
  }
}

TEST(PendantTest, RejectsTooFewTargets) {
  std::vector<VertexId> targets{0};
  EXPECT_THROW(attach_pendants(complete_digraph(4), targets, 6), PreconditionError);
  EXPECT_THROW(attach_pendants(complete_digraph(4), targets, 3), PreconditionError);
}

TEST(DeletionTest, OutputIsFriendlyAndSeparates) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = random_d_out(12, 4, seed);
    VertexId u = seed % 12;
    VertexId v = (seed * 5 + 1) % 12;
    if (u == v) continue;
    auto p = separate_pair_via_deletion(g, u, v);
    auto direct = can_separate(g, std::vector<VertexId>{u, v}, 1);
    if (p) {
      EXPECT_TRUE(is_friendly(g, *p, 1));
      EXPECT_TRUE(p->separates(u, v));
      EXPECT_TRUE(direct.has_value());
    }
    auto rest = remove_vertex(g, u);
    std::vector<VertexId> nbhd;
    for (VertexId w : g.out(u)) nbhd.push_back(w < u ? w : w - 1);
    EXPECT_EQ(p.has_value(), can_separate(rest.graph, nbhd, 1).has_value());
  }
}

TEST(DeletionTest, AbsentWhenNeighborhoodInseparable) {
  // Deleting a vertex of K3 leaves a 2-cycle, which has no split.
  Digraph g = complete_digraph(3);
  EXPECT_FALSE(separate_pair_via_deletion(g, 0, 1).has_value());
}

TEST(DeletionTest, RejectsLowDegree) {
  EXPECT_THROW(separate_pair_via_deletion(directed_cycle(4), 0, 1), PreconditionError);
  EXPECT_THROW(separate_pair_via_deletion(complete_digraph(4), 2, 2), PreconditionError);
}

}  // namespace
}  // namespace amity
