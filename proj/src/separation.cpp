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

#include "amity/separation.hpp"

#include <algorithm>

#include "amity/cycles.hpp"
#include "amity/errors.hpp"

namespace amity {

VertexSet SeparationCertificate::covered() const {
  std::vector<VertexId> all;
  for (const auto& w : witnesses) all.insert(all.end(), w.others.begin(), w.others.end());
  return to_vertex_set(std::move(all));
}

bool verify_certificate(const Digraph& g, const SeparationCertificate& certificate, std::size_t r) {
  if (certificate.subject >= g.size()) return false;
  for (const auto& w : certificate.witnesses) {
    if (w.partition.size() != g.size() || !is_friendly(g, w.partition, r)) return false;
    for (VertexId x : w.others) {
      if (x >= g.size() || !w.partition.separates(certificate.subject, x)) return false;
    }
  }
  return true;
}

bool certifies_separable_vertex(const Digraph& g, const SeparationCertificate& certificate) {
  if (!verify_certificate(g, certificate, 1)) return false;
  return certificate.covered().size() + 1 == g.size();
}

std::vector<VertexId> separable_vertex_candidates(const Digraph& g) {
  std::vector<VertexId> order;
  std::vector<char> listed(g.size(), 0);
  if (auto triple = find_intersecting_pair_plus_disjoint(g)) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (VertexId x : triple->cycles[i]) {
        if (!listed[x]) {
          listed[x] = 1;
          order.push_back(x);
        }
      }
    }
  }
  for (VertexId v = 0; v < g.size(); ++v) {
    if (!listed[v]) order.push_back(v);
  }
  return order;
}

namespace {

std::optional<SeparationCertificate> certify(const Digraph& g, VertexId u, std::size_t cap) {
  SeparationCertificate certificate{u, {}};
  std::vector<char> covered(g.size(), 0);
  covered[u] = 1;
  for (VertexId w = 0; w < g.size(); ++w) {
    if (covered[w]) continue;
    auto p = can_separate(g, std::vector<VertexId>{u, w}, 1, cap);
    if (!p) return std::nullopt;
    SeparationWitness witness{{}, *p};
    for (VertexId x = w; x < g.size(); ++x) {
      if (!covered[x] && p->separates(u, x)) {
        covered[x] = 1;
        witness.others.push_back(x);
      }
    }
    certificate.witnesses.push_back(std::move(witness));
  }
  return certificate;
}

}  // namespace

std::optional<SeparableVertex> find_separable_vertex(const Digraph& g, std::size_t cap) {
  if (g.size() == 0) return std::nullopt;
  if (g.size() > std::min(cap, kMaxExhaustiveCap)) throw CapExceededError(g.size(), std::min(cap, kMaxExhaustiveCap));
  for (VertexId u : separable_vertex_candidates(g)) {
    if (auto certificate = certify(g, u, cap)) return SeparableVertex{u, std::move(*certificate)};
  }
  return std::nullopt;
}

KSeparableResult find_k_separable_vertices(const Digraph& g, std::size_t k, std::size_t cap) {
  KSeparableResult result;
  result.requested = k;
  std::vector<VertexId> alive(g.size());
  for (VertexId v = 0; v < g.size(); ++v) alive[v] = v;
  std::vector<VertexId> deleted;

  // Extends a partition of the current subdigraph to g by re-adding deleted
  // vertices, latest first, into the block of their first placed out-neighbor.
  auto lift = [&](const Partition& local, const std::vector<VertexId>& to_original) {
    std::vector<std::uint8_t> blocks(g.size(), 0);
    std::vector<char> placed(g.size(), 0);
    for (VertexId i = 0; i < to_original.size(); ++i) {
      blocks[to_original[i]] = static_cast<std::uint8_t>(local.block(i));
      placed[to_original[i]] = 1;
    }
    for (auto it = deleted.rbegin(); it != deleted.rend(); ++it) {
      auto out = g.out(*it);
      auto target = std::find_if(out.begin(), out.end(), [&](VertexId w) { return placed[w]; });
      if (target == out.end()) throw PreconditionError("deleted vertex has no remaining out-neighbor");
      blocks[*it] = blocks[*target];
      placed[*it] = 1;
    }
    return Partition(std::move(blocks));
  };

  while (result.found.size() < k && !alive.empty()) {
    auto sub = induced_subgraph(g, alive);
    result.min_out_degree_per_step.push_back(min_out_degree(sub.graph));
    if (sub.graph.size() > 1 && result.min_out_degree_per_step.back() == 0) break;
    auto local = find_separable_vertex(sub.graph, cap);
    if (!local) break;

    VertexId u = sub.to_original[local->vertex];
    SeparationCertificate certificate{u, {}};
    for (const auto& w : local->certificate.witnesses) {
      VertexSet others;
      for (VertexId x : w.others) others.push_back(sub.to_original[x]);
      certificate.witnesses.push_back({to_vertex_set(std::move(others)), lift(w.partition, sub.to_original)});
    }
    for (const auto& earlier : result.found) {
      for (const auto& w : earlier.certificate.witnesses) {
        if (std::binary_search(w.others.begin(), w.others.end(), u)) {
          certificate.witnesses.push_back({{earlier.vertex}, w.partition});
          break;
        }
      }
    }
    result.found.push_back({u, std::move(certificate)});
    deleted.push_back(u);
    alive.erase(std::find(alive.begin(), alive.end(), u));
  }
  result.complete = result.found.size() == k;
  return result;
}

GadgetResult attach_separator_cycle(const Digraph& g, std::span<const VertexId> targets, std::size_t s) {
  if (targets.empty()) throw PreconditionError("separator cycle needs at least one target");
  if (s < 2) throw PreconditionError("separator cycle needs s >= 2");
  VertexSet target_set = to_vertex_set({targets.begin(), targets.end()});
  if (target_set.back() >= g.size()) throw PreconditionError("target out of range");

  const std::size_t n = g.size();
  auto adjacency = g.adjacency();
  GadgetResult result;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<VertexId> row{n + (i + 1) % s};
    row.insert(row.end(), target_set.begin(), target_set.end());
    adjacency.push_back(std::move(row));
    result.new_vertices.push_back(n + i);
  }
  result.extended = Digraph(adjacency);
  result.original_map.resize(n);
  for (VertexId v = 0; v < n; ++v) result.original_map[v] = v;
  std::size_t degree = n == 0 ? 0 : min_out_degree(g);
  if (1 + target_set.size() < degree) {
    result.degree_preserved = false;
    result.warning = "new vertices have out-degree " + std::to_string(1 + target_set.size()) +
                     ", below the original min out-degree " + std::to_string(degree);
  }
  return result;
}

GadgetResult attach_pendants(const Digraph& g, std::span<const VertexId> targets, std::size_t total_n) {
  const std::size_t n = g.size();
  if (total_n < n) throw PreconditionError("total_n is smaller than the digraph");
  VertexSet target_set = to_vertex_set({targets.begin(), targets.end()});
  if (!target_set.empty() && target_set.back() >= n) throw PreconditionError("target out of range");
  std::size_t degree = n == 0 ? 0 : min_out_degree(g);
  if (total_n > n && target_set.size() < degree) {
    throw PreconditionError("pendants would have out-degree " + std::to_string(target_set.size()) +
                            ", below the min out-degree " + std::to_string(degree));
  }
  auto adjacency = g.adjacency();
  GadgetResult result;
  for (VertexId p = n; p < total_n; ++p) {
    adjacency.push_back(target_set);
    result.new_vertices.push_back(p);
  }
  result.extended = Digraph(adjacency);
  result.original_map.resize(n);
  for (VertexId v = 0; v < n; ++v) result.original_map[v] = v;
  return result;
}

std::optional<Partition> separate_pair_via_deletion(const Digraph& g, VertexId u, VertexId v,
                                                    std::size_t cap) {
  if (u >= g.size() || v >= g.size()) throw PreconditionError("vertex out of range");
  if (u == v) throw PreconditionError("u and v must differ");
  if (min_out_degree(g) < 2) throw PreconditionError("deletion argument needs min out-degree >= 2");

  auto rest = remove_vertex(g, u);
  auto local = [&](VertexId x) { return x < u ? x : x - 1; };
  std::vector<VertexId> neighborhood;
  for (VertexId w : g.out(u)) neighborhood.push_back(local(w));
  if (neighborhood.size() < 2) throw PreconditionError("out-neighborhood of u has fewer than 2 vertices");

  auto p = can_separate(rest.graph, neighborhood, 1, cap);
  if (!p) return std::nullopt;
  std::vector<std::uint8_t> blocks(g.size());
  for (VertexId i = 0; i < rest.graph.size(); ++i) blocks[rest.to_original[i]] = static_cast<std::uint8_t>(p->block(i));
  // Both blocks hold an out-neighbor of u, so the block without v works.
  blocks[u] = static_cast<std::uint8_t>(1 - blocks[v]);
  return Partition(std::move(blocks));
}

}  // namespace amity
