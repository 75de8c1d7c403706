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

// Search for digraphs with an inseparable set or with few friendly
// partitions. Small families are walked exhaustively, larger ones sampled.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amity/digraph.hpp"
#include "amity/partition.hpp"

namespace amity {

enum class ScanMode {
  kPairSeparability,  // hit: some ~-class has at least s vertices
  kPartitionCount,    // hit: friendly partitions, trivial included, < threshold
};

std::string_view to_string(ScanMode mode);
std::optional<ScanMode> parse_scan_mode(std::string_view text);

struct ScanConfig {
  std::size_t d = 3;
  std::size_t r = 1;
  std::size_t n_min = 4;
  std::size_t n_max = 5;
  ScanMode mode = ScanMode::kPairSeparability;
  std::size_t s = 2;
  std::size_t count_threshold = 2;
  std::uint64_t seed = 1;
  // Families up to this size are walked exhaustively.
  std::uint64_t exhaustive_limit = 2'000'000;
  // Digraphs drawn per n when sampling.
  std::size_t samples = 1000;
  std::size_t max_hits = 50;
  std::size_t threads = 1;
  std::size_t cap = kDefaultExhaustiveCap;
};

struct ScanHit {
  std::size_t n = 0;
  bool exhaustive = false;
  // Family index when exhaustive, sample seed otherwise.
  std::uint64_t index = 0;
  Digraph graph;
  std::size_t total_count = 0;
  // Smallest members of the largest ~-class.
  VertexSet inseparable;
  // Second, independent check with can_separate or a recount.
  bool reverified = false;
  // Edge-list document carrying n, d, index or seed.
  std::string encoding;
};

struct ScanLayer {
  std::size_t n = 0;
  bool exhaustive = false;
  std::uint64_t examined = 0;
  std::uint64_t hits = 0;
};

struct ScanReport {
  std::vector<ScanLayer> layers;
  // Ordered by (n, index); at most max_hits.
  std::vector<ScanHit> hits;
  std::uint64_t total_hits = 0;
};

// Number of digraphs with out-degree exactly d on n vertices, or nullopt on
// 64-bit overflow.
std::optional<std::uint64_t> out_degree_family_size(std::size_t n, std::size_t d);

// Every digraph in [n_min, n_max] must fit the exhaustive cap.
ScanReport scan_for_counterexamples(const ScanConfig& cfg);

// Calls `visit(index, g)` for every index in [begin, end) of the out-degree
// family, split into contiguous shards across `threads` workers. `visit`
// must be thread-safe.
void for_each_in_family(std::size_t n, std::size_t d, std::uint64_t begin, std::uint64_t end, std::size_t threads,
                        const std::function<void(std::size_t worker, std::uint64_t index, const Digraph& g)>& visit);

}  // namespace amity
