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

// Reduction of pair separation in an arbitrary digraph to pair separation in
// a strongly connected one. The plan is plain data: a case tag, the
// sub-instance to solve and how to lift its answer.
//
// Notation: S is the union of the sink strongly connected components.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "amity/digraph.hpp"
#include "amity/partition.hpp"

namespace amity {

enum class ReductionCase {
  kBothInSinks,      // u, v in S
  kPathToOtherSink,  // one in S; the other reaches S at a different vertex
  kSoleSinkEntry,    // one in S; every path from the other enters S at it
  kDisjointPaths,    // neither in S; disjoint paths into S exist
  kCutVertex,        // neither in S; one vertex t separates {u, v} from S
};

std::string_view to_string(ReductionCase c);

struct SubInstance {
  Digraph graph;
  std::vector<VertexId> to_original;
  // Local ids of the pair that must be separated.
  VertexId first = 0;
  VertexId second = 0;
};

// Original vertices that join the lifted block of a sub-instance vertex.
struct Attachment {
  VertexId anchor = 0;  // local id in the sub-instance
  std::vector<VertexId> vertices;
};

struct ReductionPlan {
  ReductionCase kind = ReductionCase::kBothInSinks;
  VertexId u = 0;
  VertexId v = 0;
  VertexSet sinks;
  // Absent only for kSoleSinkEntry, which needs no sub-separation.
  std::optional<SubInstance> sub;
  std::vector<Attachment> attachments;
  // kSoleSinkEntry: seed sets for the final extension (block 0 holds the
  // vertex outside S).
  VertexSet seed_zero;
  VertexSet seed_one;
  // kCutVertex: the separating vertex, its path into S (starting at t) and
  // the digraph with t's out-edges rewired toward u and v.
  std::optional<VertexId> cut_vertex;
  std::vector<VertexId> cut_path;
  std::optional<Digraph> rewired;
};

// Requires min out-degree >= 3 and u != v.
ReductionPlan reduce_to_strongly_connected(const Digraph& g, VertexId u, VertexId v);

// Lifts a friendly partition of plan.sub separating its pair to a friendly
// partition of g separating u and v. For kSoleSinkEntry pass nullopt.
Partition lift_reduction(const Digraph& g, const ReductionPlan& plan, const std::optional<Partition>& sub_partition);

// Solves the sub-instance exhaustively and lifts the answer.
std::optional<Partition> separate_via_reduction(const Digraph& g, VertexId u, VertexId v,
                                                std::size_t cap = kDefaultExhaustiveCap);

}  // namespace amity
