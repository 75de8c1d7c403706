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

// Separable vertices with re-checkable certificates, the two gadget
// constructions that attach new vertices to a target set, and separation of a
// pair by deleting one of its vertices.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amity/digraph.hpp"
#include "amity/partition.hpp"

namespace amity {

struct SeparationWitness {
  // Every vertex here is separated from the certificate subject by partition.
  VertexSet others;
  Partition partition;
};

struct SeparationCertificate {
  VertexId subject = 0;
  std::vector<SeparationWitness> witnesses;

  // Union of all witnesses' others.
  VertexSet covered() const;
};

// Every witness partition is r-friendly on g and puts each of its others in
// the block opposite the subject.
bool verify_certificate(const Digraph& g, const SeparationCertificate& certificate, std::size_t r = 1);

// Same as verify_certificate and additionally every other vertex is covered.
bool certifies_separable_vertex(const Digraph& g, const SeparationCertificate& certificate);

struct SeparableVertex {
  VertexId vertex = 0;
  SeparationCertificate certificate;
};

// A vertex separable from every other vertex, with one witness partition per
// group of others it separates. Vertices on an intersecting cycle pair that
// has a disjoint third cycle are tried first, then the remaining ones in index
// order.
std::optional<SeparableVertex> find_separable_vertex(const Digraph& g,
                                                     std::size_t cap = kDefaultExhaustiveCap);

// Order in which find_separable_vertex tries candidates.
std::vector<VertexId> separable_vertex_candidates(const Digraph& g);

struct KSeparableResult {
  std::size_t requested = 0;
  // Vertices in discovery order; certificates refer to the input digraph.
  std::vector<SeparableVertex> found;
  bool complete = false;
  // Min out-degree of the digraph searched at each step.
  std::vector<std::size_t> min_out_degree_per_step;
};

// Repeatedly finds a separable vertex and deletes it. Partitions found after
// deletions are lifted back by returning each deleted vertex to the block of
// its first out-neighbor, so every certificate holds in g itself.
KSeparableResult find_k_separable_vertices(const Digraph& g, std::size_t k,
                                           std::size_t cap = kDefaultExhaustiveCap);

struct GadgetResult {
  Digraph extended;
  VertexSet new_vertices;
  // Old vertex i is extended vertex original_map[i] (the identity).
  std::vector<VertexId> original_map;
  bool degree_preserved = true;
  std::string warning;
};

// Adds an s-cycle of new vertices, each also pointing at every target. When
// 1 + |targets| is below the min out-degree of g the result is still built
// and degree_preserved is false.
GadgetResult attach_separator_cycle(const Digraph& g, std::span<const VertexId> targets, std::size_t s);

// Adds total_n - n new in-degree-0 vertices pointing at every target.
// total_n == n returns g unchanged. Throws if |targets| < min out-degree.
GadgetResult attach_pendants(const Digraph& g, std::span<const VertexId> targets, std::size_t total_n);

// Deletes u, separates u's out-neighborhood in the rest, then returns u to
// the block of one of its out-neighbors that does not hold v. Requires min
// out-degree >= 2 and u != v.
std::optional<Partition> separate_pair_via_deletion(const Digraph& g, VertexId u, VertexId v,
                                                    std::size_t cap = kDefaultExhaustiveCap);

}  // namespace amity
