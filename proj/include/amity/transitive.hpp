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

// Vertex-transitive digraphs and the structure of their inseparability
// classes.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amity/cycles.hpp"
#include "amity/digraph.hpp"
#include "amity/partition.hpp"

namespace amity {

using Permutation = std::vector<VertexId>;

inline constexpr std::size_t kDefaultAutomorphismCap = 12;
inline constexpr std::size_t kDefaultAutomorphismLimit = 100000;

struct AutomorphismSet {
  // All automorphisms in lexicographic order, unless truncated.
  std::vector<Permutation> permutations;
  bool truncated = false;
  // Some automorphism maps vertex 0 to every vertex.
  bool transitive = false;
};

bool is_automorphism(const Digraph& g, const Permutation& p);

// Backtracking with degree and adjacency-consistency pruning. Throws
// CapExceededError when n > cap. Listing stops after `limit` permutations;
// transitivity is decided separately and is exact either way.
AutomorphismSet automorphisms(const Digraph& g, std::size_t cap = kDefaultAutomorphismCap,
                              std::size_t limit = kDefaultAutomorphismLimit);

// Some automorphism with p[from] = to.
std::optional<Permutation> find_automorphism(const Digraph& g, VertexId from, VertexId to);

// i -> i + 1 mod n preserves edges.
bool is_rotation_invariant(const Digraph& g);

// Rotation invariance, else exact search under the cap.
bool is_vertex_transitive(const Digraph& g, std::size_t cap = kDefaultAutomorphismCap);

struct ClassStructureVerdict {
  std::vector<VertexSet> classes;
  bool classes_independent = true;
  // Fewest distinct classes met by one vertex's out-neighbors.
  std::size_t min_class_spread = 0;
  bool spread_at_least_three = true;
  bool equal_class_sizes = true;
  bool holds() const { return classes_independent && spread_at_least_three && equal_class_sizes; }
  // Empty when the verdict holds; otherwise an edge-list document.
  std::string counterexample;
};

// Requires a vertex-transitive g with min out-degree >= 3 and n <= cap.
ClassStructureVerdict check_class_structure(const Digraph& g, std::size_t cap = kDefaultExhaustiveCap);

struct PrimeVerdict {
  std::vector<VertexSet> classes;
  bool all_singletons = false;
  std::string counterexample;
};

// Requires n prime, vertex-transitive, min out-degree >= 3 and n <= cap.
PrimeVerdict prime_separability(const Digraph& g, std::size_t cap = kDefaultExhaustiveCap);

bool is_prime(std::size_t n);

enum class WalkOutcome {
  kFound,          // current vertex can move to block 1 on its own
  kRepeat,         // the walk came back to a visited vertex
  kStuck,          // no block-1 out-neighbor and no critical in-neighbor
};

std::string_view to_string(WalkOutcome outcome);

struct WalkResult {
  WalkOutcome outcome = WalkOutcome::kStuck;
  std::optional<VertexId> singleton;
  // Visited vertices in order, starting at v0.
  std::vector<VertexId> trail;
};

// Walks from v0 through critical in-neighbors (block-0 in-neighbors whose
// only block-0 out-neighbor is the current vertex) until reaching a vertex
// with a block-1 out-neighbor and no critical in-neighbor. Requires p
// friendly and v0 in block 0 with >= 2 block-0 and >= 1 block-1
// out-neighbors.
WalkResult singleton_walk(const Digraph& g, const Partition& p, VertexId v0);

struct QuotientDigraph {
  std::vector<VertexSet> classes;
  // Adjacency over class indices; no loops.
  Digraph graph;
};

// `classes` must partition V; class order is kept.
QuotientDigraph quotient(const Digraph& g, const std::vector<VertexSet>& classes);

struct MatchingContraction {
  Digraph graph;
  ContractionTrace trace;
  // matching[i] is the L vertex matched to k_class[i] (sorted order).
  std::vector<VertexId> matching;
};

// Perfect matching of K -> L edges by Hopcroft-Karp; drops the other K -> L
// edges and all edges inside K, then contracts each matched k into its l.
// Throws PreconditionError when the sizes differ or no perfect matching
// exists.
MatchingContraction hall_matching_contract(const Digraph& g, const VertexSet& k_class, const VertexSet& l_class);

// Maximum matching of a bipartite graph given as left -> right adjacency.
// Returns the right partner of each left vertex, SIZE_MAX when unmatched.
std::vector<std::size_t> hopcroft_karp(const std::vector<std::vector<std::size_t>>& left_adjacency,
                                       std::size_t right_size);

}  // namespace amity
