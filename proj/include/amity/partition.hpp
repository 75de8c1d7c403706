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

// Exact friendly-partition machinery: the friendliness test, the
// path-extension construction, exhaustive enumeration and separation queries.
//
// The exhaustive routines work on 64-bit vertex masks, so the cap can never
// exceed 64 regardless of configuration.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amity/digraph.hpp"

namespace amity {

inline constexpr std::size_t kDefaultExhaustiveCap = 24;
inline constexpr std::size_t kMaxExhaustiveCap = 64;

// Every vertex has at least r out-neighbors in its own block. Throws
// PreconditionError for r < 1 or a size mismatch.
bool is_friendly(const Digraph& g, const Partition& p, std::size_t r);

// Block 0 = u_set plus every vertex with a path into u_set avoiding w_set;
// block 1 = the rest. Requires min out-degree >= 1 and u_set, w_set disjoint,
// nonempty and each internally 1-friendly.
Partition extend_friendly_sets(const Digraph& g, std::span<const VertexId> u_set,
                               std::span<const VertexId> w_set);

// All r-friendly partitions with vertex 0 in block 0, sorted by mask. The
// trivial partition is listed only when include_trivial is set and it is
// friendly.
std::vector<Partition> enumerate_friendly(const Digraph& g, std::size_t r, bool include_trivial,
                                          std::size_t cap = kDefaultExhaustiveCap);

// An r-friendly partition meeting s in both blocks, if any. |s| >= 2.
std::optional<Partition> can_separate(const Digraph& g, std::span<const VertexId> s, std::size_t r,
                                      std::size_t cap = kDefaultExhaustiveCap);

struct SeparationReport {
  // Nontrivial friendly partitions, one per complementary pair.
  std::size_t partition_count = 0;
  bool trivial_friendly = false;
  // partition_count plus one when the trivial partition is friendly.
  std::size_t total_count = 0;
  std::vector<Partition> partitions;
  // Character i of codes[v] is the block of v in partitions[i].
  std::vector<std::string> codes;
  // Vertices with equal codes; ordered by smallest member.
  std::vector<VertexSet> classes;

  // Index into classes for each vertex.
  std::vector<std::size_t> class_of() const;
};

SeparationReport separation_report(const Digraph& g, std::size_t r,
                                   std::size_t cap = kDefaultExhaustiveCap);

}  // namespace amity
