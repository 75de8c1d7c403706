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

// Text formats and generator specs.
//
// Edge list: first line "n m", then m lines "u v" (0-based). Lines starting
// with '#' are comments; "# key: value" comments carry document metadata.
// Partition file: n lines, line i is the block (0 or 1) of vertex i.
// Generator spec: kind(args...), e.g. "cycle(6)", "circulant(7,1,2,3)",
// "disjoint_union(cycle(3),complete(3))".

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amity/digraph.hpp"

namespace amity {

struct GraphDocument {
  std::string name;
  Digraph graph;
  // In file order, excluding "name".
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Canonical text: header plus edges grouped by source in adjacency order.
std::string serialize_edge_list(const Digraph& g);
std::string serialize_document(const GraphDocument& doc);

// Throws ParseError with the 1-based line of the first problem: malformed
// line, vertex out of range, self-loop, duplicate edge, edge count mismatch.
Digraph parse_edge_list(std::string_view text);
GraphDocument parse_document(std::string_view text);

// Input-only DOT subset: one `digraph [name] { ... }` block whose statements
// are node ids and `a -> b [-> c ...]` chains separated by ';' or newlines.
// Ids that are all non-negative integers keep their values; otherwise ids
// are numbered in order of first appearance.
Digraph parse_dot(std::string_view text);

std::string serialize_partition(const Partition& p);
// Optional `n` checks the line count.
Partition parse_partition(std::string_view text, std::optional<std::size_t> n = std::nullopt);

// "0,3,5" -> {0, 3, 5}. Throws ParseError on anything else.
std::vector<VertexId> parse_vertex_list(std::string_view text);

// Builds a digraph from a generator spec; random kinds draw from `seed`.
Digraph generate(std::string_view spec, std::uint64_t seed);

// Generator kinds accepted by generate().
std::vector<std::string> generator_kinds();

// A path to an edge-list or DOT file, or else a generator spec.
Digraph load_graph(const std::string& source, std::uint64_t seed);

std::string read_file(const std::string& path);

// FNV-1a 64 of the canonical edge list, as 16 hex digits.
std::string digest(const Digraph& g);

}  // namespace amity
