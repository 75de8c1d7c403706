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

// Randomized separation by resampling and random extraction of a small
// subdigraph with large min out-degree.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "amity/digraph.hpp"

namespace amity {

using Rational = boost::multiprecision::cpp_rational;

struct ResampleConfig {
  std::uint64_t seed = 0;
  std::size_t max_rounds = 1000;
  // 0 picks the method's default target.
  std::size_t r = 0;
};

struct ResampleResult {
  std::optional<Partition> partition;
  // Resampling steps taken (0 if the first draw was already good).
  std::size_t rounds = 0;
  // Out-degree every vertex was trimmed to.
  std::size_t d = 0;
  // Friendliness target that was used.
  std::size_t r = 0;
};

// Every vertex keeps its first d out-neighbors (d = min out-degree); v1 is
// pinned to block 0 and v2 to block 1, the rest drawn uniformly. While some
// vertex has fewer than r same-block kept out-neighbors, the lowest such
// vertex and its kept out-neighbors (minus v1, v2) are redrawn. A returned
// partition is r-friendly in g and separates v1, v2.
ResampleResult resample_separate(const Digraph& g, VertexId v1, VertexId v2, const ResampleConfig& cfg,
                                 std::size_t r);

// r = 1 (cfg.r ignored).
ResampleResult lll_separate(const Digraph& g, VertexId v1, VertexId v2, const ResampleConfig& cfg);

// r = floor((d - 1) / 4) + 1 unless cfg.r is set.
ResampleResult chernoff_r_separate(const Digraph& g, VertexId v1, VertexId v2, const ResampleConfig& cfg);

std::size_t chernoff_target(std::size_t d);

// Largest max in-degree for which resampling is guaranteed, as doubles:
// (2^(d-1) - e) / (e d) and e^((d-1)/16 - 1) / d.
double lll_degree_bound(std::size_t d);
double chernoff_degree_bound(std::size_t d);

struct ExtractConfig {
  std::uint64_t seed = 0;
  std::size_t max_trials = 100;
  // Stop at the first Y with |Y| < n/2.
  bool stop_on_success = true;
};

struct SubdigraphSample {
  // First successful Y, or the smallest one seen if none succeeded.
  VertexSet y_set;
  bool success = false;
  std::size_t trial_count = 0;
  std::vector<std::size_t> sizes;
  // Min out-degree of the digraph induced by each trial's Y.
  std::vector<std::size_t> induced_min_out_degree;

  double mean_fraction(std::size_t n) const;
};

// Each trial draws X with every vertex included with probability 1/3, then
// for every vertex with k < r out-neighbors in X adds its first r - k
// out-neighbors outside X. Requires min out-degree >= compute_dr(r).
SubdigraphSample extract_small_subdigraph(const Digraph& g, std::size_t r, const ExtractConfig& cfg);

// 1/3 + sum_{k=0..r} (r - k) C(d, k) (1/3)^k (2/3)^(d - k): the expected
// |Y| / n bound for out-degree d.
Rational extraction_expectation(std::size_t r, std::size_t d);

// Smallest d with extraction_expectation(r, d) < 1/2. Requires r >= 1.
std::size_t compute_dr(std::size_t r);

std::string to_string(const Rational& q);

}  // namespace amity
