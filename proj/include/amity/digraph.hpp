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

// Core value types: the simple digraph, two-block partitions and cycle sets,
// plus the structural queries every other module builds on (strongly
// connected components, cycle search, Menger paths/separators).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace amity {

using VertexId = std::size_t;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

// Simple digraph on vertices [0, n). Out-neighbor order is preserved exactly
// as given; it drives every deterministic tie-break in the library.
//
// Invariants: no self-loops, no parallel edges. 2-cycles are allowed.
// Immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  // Throws PreconditionError on self-loops, duplicates or out-of-range heads.
  explicit Digraph(const std::vector<std::vector<VertexId>>& out_adjacency);

  // Same validation as the constructor; edges are grouped by source in input
  // order.
  static Digraph from_edges(std::size_t n, std::span<const Edge> edges);

  // For transformations: drops self-loops and repeated heads silently
  // (keeping first occurrence) instead of throwing.
  static Digraph simplified(const std::vector<std::vector<VertexId>>& out_adjacency);

  std::size_t size() const noexcept { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  std::span<const VertexId> out(VertexId v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in(VertexId v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

  bool has_edge(VertexId u, VertexId v) const noexcept;

  std::vector<Edge> edges() const;
  std::vector<std::vector<VertexId>> adjacency() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    if (a.size() != b.size()) return false;
    return a.size() == 0 || (a.out_offsets_ == b.out_offsets_ && a.out_targets_ == b.out_targets_);
  }

 private:
  void build(const std::vector<std::vector<VertexId>>& out_adjacency);

  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<VertexId> sorted_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_sources_;
};

// Two-block labeling of the vertex set; block ids are 0 and 1.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint8_t> blocks);

  static Partition trivial(std::size_t n) { return Partition(std::vector<std::uint8_t>(n, 0)); }
  // Bit v of `mask` is the block of v. Requires n <= 64.
  static Partition from_mask(std::size_t n, std::uint64_t mask);
  // Vertices of `block_one` go to block 1, all others to block 0.
  static Partition from_block_one(std::size_t n, std::span<const VertexId> block_one);

  std::size_t size() const noexcept { return blocks_.size(); }
  int block(VertexId v) const noexcept { return blocks_[v]; }
  const std::vector<std::uint8_t>& blocks() const noexcept { return blocks_; }

  // One block empty.
  bool is_trivial() const noexcept;
  VertexSet members(int block) const;
  Partition swapped() const;
  // Representative with vertex 0 in block 0.
  Partition canonical() const;
  std::uint64_t mask() const;

  bool separates(VertexId a, VertexId b) const noexcept { return blocks_[a] != blocks_[b]; }
  // True iff `s` meets both blocks.
  bool splits(std::span<const VertexId> s) const noexcept;

  // "0110..." with character i = block of vertex i.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint8_t> blocks_;
};

enum class CycleRelation {
  kAllDisjoint,
  // cycles[0] and cycles[1] share a vertex; cycles[2], when present, is
  // disjoint from both.
  kFirstTwoIntersectThirdDisjoint,
};

struct CycleSet {
  std::vector<std::vector<VertexId>> cycles;
  CycleRelation relation = CycleRelation::kAllDisjoint;
};

// Sequence is a directed cycle of g: consecutive pairs and the wrap-around
// are edges and no vertex repeats. Length-1 sequences are never cycles.
bool is_directed_cycle(const Digraph& g, std::span<const VertexId> cycle);

// Every member is a directed cycle and the relation tag holds.
bool verify_cycle_set(const Digraph& g, const CycleSet& set);

// Throws PreconditionError for the empty digraph.
std::size_t min_out_degree(const Digraph& g);
std::size_t max_in_degree(const Digraph& g);

Digraph reverse(const Digraph& g);

struct InducedSubgraph {
  Digraph graph;
  // graph vertex i is original vertex to_original[i].
  std::vector<VertexId> to_original;
};

// `vertices` need not be sorted; subgraph vertex order follows it.
InducedSubgraph induced_subgraph(const Digraph& g, std::span<const VertexId> vertices);

// Removes one vertex; remaining vertices keep their relative order.
InducedSubgraph remove_vertex(const Digraph& g, VertexId v);

// Maximal strongly connected sets, listed in a topological order of the
// condensation: every edge between components goes from an earlier to a
// later one, so sink components come last.
std::vector<VertexSet> strongly_connected_components(const Digraph& g);

// Components with no edge leaving them.
std::vector<VertexSet> sink_components(const Digraph& g);

// A directed cycle inside the subgraph induced by `within`, or nullopt when
// that subgraph is acyclic. Iterative DFS; deterministic.
std::optional<std::vector<VertexId>> find_cycle(const Digraph& g, std::span<const VertexId> within);
std::optional<std::vector<VertexId>> find_cycle(const Digraph& g);

struct DisjointPaths {
  // Pairwise vertex-disjoint source-to-target paths (a source that is also a
  // target yields a one-vertex path).
  std::vector<std::vector<VertexId>> paths;
  // Meets every source-to-target path; contains exactly one vertex of each
  // returned path.
  VertexSet separator;
};

// Maximum family of vertex-disjoint paths and a minimum separating vertex set,
// from unit vertex-capacity max flow on the split digraph.
DisjointPaths vertex_disjoint_paths_and_separator(const Digraph& g,
                                                  std::span<const VertexId> sources,
                                                  std::span<const VertexId> targets);

// Vertices reachable from `from` (inclusive) without entering `blocked`.
std::vector<char> reachable_from(const Digraph& g, std::span<const VertexId> from,
                                 const std::vector<char>* blocked = nullptr);

// Shortest path (by BFS) from `from` to any vertex flagged in `target`, whose
// interior avoids `target`; empty if none.
std::vector<VertexId> shortest_path_to(const Digraph& g, VertexId from,
                                       const std::vector<char>& target);

VertexSet to_vertex_set(std::vector<VertexId> vertices);
std::vector<char> membership(std::size_t n, std::span<const VertexId> vertices);

}  // namespace amity
