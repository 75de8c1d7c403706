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

// Named and random digraph families. Random families are deterministic per
// seed. Infeasible parameters throw PreconditionError.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "amity/digraph.hpp"

namespace amity {

// i -> i+1 mod n. n >= 2.
Digraph directed_cycle(std::size_t n);

// Every ordered pair of distinct vertices. n >= 1.
Digraph complete_digraph(std::size_t n);

// i -> i+s mod n for each offset s in [1, n), in the given order.
Digraph circulant(std::size_t n, std::span<const std::size_t> offsets);
inline Digraph circulant(std::size_t n, std::initializer_list<std::size_t> offsets) {
  return circulant(n, std::span<const std::size_t>(offsets.begin(), offsets.size()));
}

// Each vertex gets d distinct uniform out-neighbors other than itself.
Digraph random_d_out(std::size_t n, std::size_t d, std::uint64_t seed);

// In-degree and out-degree exactly d everywhere: a circulant randomized by
// degree-preserving edge switches.
Digraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

// Vertices split into `layers` consecutive groups; a vertex draws its d
// out-neighbors uniformly from its own group and later ones, so the digraph
// has at least `layers` strongly connected components. The last group must
// have more than d vertices.
Digraph random_layered(std::size_t n, std::size_t d, std::size_t layers, std::uint64_t seed);

// b's vertices are shifted by a.size().
Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Completions of a partial cubic digraph: every vertex is given out-degree
// exactly 3 (seed edges kept first) such that there is no 2-cycle, every edge
// is dominated and the underlying graph is connected. All completions are
// returned in lexicographic order.
std::vector<Digraph> complete_dominated_cubic(std::size_t n, std::span<const Edge> seeds);

// The two cubic digraphs with every edge dominated and no 2-cycle, rebuilt
// from the neighborhood of a vertex v. Vertex order:
// v, u1, u2, u3, w1, w2, w3 (and x for the same-orientation digraph), where
// u1..u3 are the in-neighbors and w1..w3 the out-neighbors of v.
Digraph dominated_cubic_same_orientation();      // 8 vertices
Digraph dominated_cubic_opposite_orientation();  // 7 vertices
std::vector<std::string> dominated_cubic_labels(std::size_t n);

// Seed edges used by the two reconstructions.
std::vector<Edge> dominated_cubic_seeds(bool same_orientation);

// All digraphs on n vertices with every out-degree exactly d, indexed by a
// mixed-radix number whose digit v selects v's out-neighborhood among the
// C(n-1, d) subsets of the other vertices in lexicographic order.
class OutDegreeProduct {
 public:
  OutDegreeProduct(std::size_t n, std::size_t d);

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  std::uint64_t count() const noexcept { return count_; }
  Digraph at(std::uint64_t index) const;
  // Inverse of at() for digraphs in the family.
  std::uint64_t index_of(const Digraph& g) const;

 private:
  std::size_t n_;
  std::size_t d_;
  std::uint64_t count_ = 1;
  // choices_[v][i] = i-th out-neighborhood of v.
  std::vector<std::vector<std::vector<VertexId>>> choices_;
};

}  // namespace amity
