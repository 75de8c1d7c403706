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

// Dominated edges, edge contraction to a compressed digraph, and the cycle
// finders (disjoint families, intersecting pairs) built on top of it.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "amity/digraph.hpp"

namespace amity {

// Some w has edges w->u and w->v. Throws PreconditionError if u->v is absent.
bool is_dominated(const Digraph& g, VertexId u, VertexId v);

// u->v can be contracted: it is an edge, not dominated, and v->u is absent.
bool is_contractible(const Digraph& g, VertexId u, VertexId v);

// Every edge is dominated or lies in a 2-cycle.
bool is_compressed(const Digraph& g);

struct Merge {
  VertexId deleted;        // original id of the tail that disappeared
  VertexId absorbed_into;  // original id of the surviving head
};

struct ContractionTrace {
  std::size_t original_size = 0;
  std::vector<Merge> merges;
  // Original vertex -> compressed vertex. Compressed vertices are the
  // surviving originals renumbered in ascending order.
  std::vector<VertexId> final_map;
  // Compressed vertex -> surviving original vertex.
  std::vector<VertexId> representative;

  std::size_t compressed_size() const noexcept { return representative.size(); }
  // Original vertices mapped to compressed vertex c, ascending.
  VertexSet preimage(VertexId c) const;
};

struct Compression {
  Digraph graph;
  ContractionTrace trace;
};

// Contracts the first contractible edge in (source, position) order until
// none is left. Requires min out-degree >= 1.
Compression compress(const Digraph& g);

// Re-applies the merge log to g from scratch; equals compress(g).graph for the
// trace compress produced.
Digraph replay_contraction(const Digraph& g, const ContractionTrace& trace);

// Each original vertex gets the block of its image. Throws PreconditionError
// on a size mismatch.
Partition decompress_partition(const ContractionTrace& trace, const Partition& p);

// Lifts a cycle of the compressed digraph to a cycle of the original that
// stays inside the preimages of its vertices. Disjoint compressed cycles lift
// to disjoint cycles; cycles sharing a vertex lift to cycles sharing its
// representative.
std::vector<VertexId> lift_cycle(const Digraph& original, const ContractionTrace& trace,
                                 const std::vector<VertexId>& cycle);
CycleSet lift_cycle_set(const Digraph& original, const ContractionTrace& trace, const CycleSet& set);

// A cycle among the in-neighbors of v. Requires g compressed and v on no
// 2-cycle; violations throw PreconditionError naming the offending edge.
std::vector<VertexId> in_neighborhood_cycle(const Digraph& g, VertexId v);

// Induced (chord-free) cycles, each listed once starting at its smallest
// vertex, ordered by length then lexicographically. max_length 0 = no bound.
std::vector<std::vector<VertexId>> chordless_cycles(const Digraph& g, std::size_t max_length = 0);

struct DisjointCycleOptions {
  // Cycle length bound for the search on digraphs larger than
  // exhaustive_limit; 0 = unbounded.
  std::size_t max_cycle_length = 0;
  std::size_t exhaustive_limit = 24;
  bool compress_first = true;
};

// k pairwise disjoint cycles, or nullopt if none exist (exact whenever the
// search is unbounded).
std::optional<CycleSet> find_disjoint_cycles(const Digraph& g, std::size_t k,
                                             const DisjointCycleOptions& options = {});

// Two distinct cycles sharing a vertex, or nullopt if g has none.
std::optional<CycleSet> find_two_intersecting_cycles(const Digraph& g);

// Two intersecting cycles plus a third disjoint from both, or nullopt.
std::optional<CycleSet> find_intersecting_pair_plus_disjoint(const Digraph& g);

}  // namespace amity
