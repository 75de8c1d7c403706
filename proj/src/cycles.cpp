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

#include "amity/cycles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "amity/errors.hpp"

namespace amity {

namespace {

std::string edge_text(VertexId u, VertexId v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

bool contains(const std::vector<VertexId>& list, VertexId x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

void erase_value(std::vector<VertexId>& list, VertexId x) {
  list.erase(std::remove(list.begin(), list.end(), x), list.end());
}

// Mutable adjacency over original vertex ids used while contracting.
struct WorkGraph {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::vector<VertexId>> in;
  std::vector<char> alive;

  explicit WorkGraph(const Digraph& g) : out(g.adjacency()), in(g.size()), alive(g.size(), 1) {
    for (VertexId v = 0; v < g.size(); ++v) in[v].assign(g.in(v).begin(), g.in(v).end());
  }

  bool dominated(VertexId u, VertexId v) const {
    for (VertexId w : in[u]) {
      if (contains(in[v], w)) return true;
    }
    return false;
  }

  void contract(VertexId u, VertexId v) {
    for (VertexId x : out[u]) erase_value(in[x], u);
    out[u].clear();
    for (VertexId w : in[u]) {
      auto& row = out[w];
      auto it = std::find(row.begin(), row.end(), u);
      if (contains(row, v) || w == v) {
        row.erase(it);
      } else {
        *it = v;
        in[v].push_back(w);
      }
    }
    in[u].clear();
    alive[u] = 0;
  }
};

std::vector<VertexId> resolve_final_map(std::size_t n, const std::vector<Merge>& merges,
                                        std::vector<VertexId>& representative) {
  std::vector<VertexId> parent(n);
  for (VertexId v = 0; v < n; ++v) parent[v] = v;
  for (const auto& m : merges) parent[m.deleted] = m.absorbed_into;
  std::vector<VertexId> compressed_id(n, std::numeric_limits<VertexId>::max());
  representative.clear();
  for (VertexId v = 0; v < n; ++v) {
    if (parent[v] == v) {
      compressed_id[v] = representative.size();
      representative.push_back(v);
    }
  }
  std::vector<VertexId> final_map(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexId root = v;
    while (parent[root] != root) root = parent[root];
    final_map[v] = compressed_id[root];
  }
  return final_map;
}

Digraph relabel(const std::vector<std::vector<VertexId>>& out, const ContractionTrace& trace) {
  std::vector<std::vector<VertexId>> adjacency(trace.compressed_size());
  for (VertexId c = 0; c < trace.compressed_size(); ++c) {
    for (VertexId w : out[trace.representative[c]]) adjacency[c].push_back(trace.final_map[w]);
  }
  return Digraph(adjacency);
}

}  // namespace

bool is_dominated(const Digraph& g, VertexId u, VertexId v) {
  if (u >= g.size() || v >= g.size() || !g.has_edge(u, v)) {
    throw PreconditionError(edge_text(u, v) + " is not an edge");
  }
  for (VertexId w : g.in(u)) {
    if (g.has_edge(w, v)) return true;
  }
  return false;
}

bool is_contractible(const Digraph& g, VertexId u, VertexId v) {
  return g.has_edge(u, v) && !g.has_edge(v, u) && !is_dominated(g, u, v);
}

bool is_compressed(const Digraph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (is_contractible(g, u, v)) return false;
  }
  return true;
}

VertexSet ContractionTrace::preimage(VertexId c) const {
  VertexSet result;
  for (VertexId v = 0; v < final_map.size(); ++v) {
    if (final_map[v] == c) result.push_back(v);
  }
  return result;
}

Compression compress(const Digraph& g) {
  if (g.size() == 0 || min_out_degree(g) < 1) {
    throw PreconditionError("compress requires min out-degree >= 1");
  }
  WorkGraph work(g);
  ContractionTrace trace;
  trace.original_size = g.size();

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId u = 0; u < g.size() && !changed; ++u) {
      if (!work.alive[u]) continue;
      for (VertexId v : work.out[u]) {
        if (contains(work.out[v], u) || work.dominated(u, v)) continue;
        work.contract(u, v);
        trace.merges.push_back({u, v});
        changed = true;
        break;
      }
    }
  }
  trace.final_map = resolve_final_map(g.size(), trace.merges, trace.representative);
  return {relabel(work.out, trace), std::move(trace)};
}

Digraph replay_contraction(const Digraph& g, const ContractionTrace& trace) {
  if (trace.original_size != g.size()) throw PreconditionError("trace does not match digraph size");
  auto out = g.adjacency();
  for (const auto& [u, v] : trace.merges) {
    out[u].clear();
    for (auto& row : out) {
      std::vector<VertexId> next;
      std::set<VertexId> seen;
      for (VertexId w : row) {
        VertexId head = (w == u) ? v : w;
        if (&row == &out[head] || !seen.insert(head).second) continue;
        next.push_back(head);
      }
      row = std::move(next);
    }
  }
  return relabel(out, trace);
}

Partition decompress_partition(const ContractionTrace& trace, const Partition& p) {
  if (p.size() != trace.compressed_size()) {
    throw PreconditionError("partition has " + std::to_string(p.size()) +
                            " entries, compressed digraph has " +
                            std::to_string(trace.compressed_size()));
  }
  std::vector<std::uint8_t> blocks(trace.original_size);
  for (VertexId v = 0; v < trace.original_size; ++v) {
    blocks[v] = static_cast<std::uint8_t>(p.block(trace.final_map[v]));
  }
  return Partition(std::move(blocks));
}

std::vector<VertexId> lift_cycle(const Digraph& original, const ContractionTrace& trace,
                                 const std::vector<VertexId>& cycle) {
  constexpr auto kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> lifted;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    VertexId tail = trace.representative[cycle[i]];
    VertexId head_class = cycle[(i + 1) % cycle.size()];
    VertexId target = trace.representative[head_class];
    lifted.push_back(tail);

    VertexId entry = kNone;
    for (VertexId y : original.out(tail)) {
      if (trace.final_map[y] == head_class) {
        entry = y;
        break;
      }
    }
    if (entry == kNone) throw PreconditionError("cycle edge has no preimage in the original digraph");

    // BFS inside the preimage of head_class from entry to its representative.
    std::vector<VertexId> parent(original.size(), kNone);
    std::deque<VertexId> queue{entry};
    parent[entry] = entry;
    while (!queue.empty() && parent[target] == kNone) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : original.out(x)) {
        if (trace.final_map[y] != head_class || parent[y] != kNone) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    if (parent[target] == kNone) throw PreconditionError("contracted class is not reachable internally");
    std::vector<VertexId> segment;
    for (VertexId x = target; x != entry; x = parent[x]) segment.push_back(x);
    segment.push_back(entry);
    std::reverse(segment.begin(), segment.end());
    segment.pop_back();  // the representative starts the next segment
    lifted.insert(lifted.end(), segment.begin(), segment.end());
  }
  return lifted;
}

CycleSet lift_cycle_set(const Digraph& original, const ContractionTrace& trace, const CycleSet& set) {
  CycleSet lifted{{}, set.relation};
  for (const auto& c : set.cycles) lifted.cycles.push_back(lift_cycle(original, trace, c));
  return lifted;
}

std::vector<VertexId> in_neighborhood_cycle(const Digraph& g, VertexId v) {
  if (v >= g.size()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  for (VertexId w : g.out(v)) {
    if (g.has_edge(w, v)) throw PreconditionError("vertex lies on 2-cycle " + edge_text(v, w) + "->" + std::to_string(v));
  }
  for (const auto& [a, b] : g.edges()) {
    if (is_contractible(g, a, b)) {
      throw PreconditionError("digraph is not compressed: edge " + edge_text(a, b) +
                              " is neither dominated nor on a 2-cycle");
    }
  }
  auto cycle = find_cycle(g, g.in(v));
  if (!cycle) throw PreconditionError("in-neighborhood of " + std::to_string(v) + " is acyclic");
  return *cycle;
}

std::vector<std::vector<VertexId>> chordless_cycles(const Digraph& g, std::size_t max_length) {
  const std::size_t n = g.size();
  const std::size_t bound = max_length == 0 ? n : std::min(max_length, n);
  std::vector<std::vector<VertexId>> found;
  std::vector<VertexId> path;
  std::vector<char> on_path(n, 0);

  std::function<void()> extend = [&]() {
    const std::size_t j = path.size();
    for (VertexId x : g.out(path.back())) {
      if (x <= path.front() || on_path[x]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 2 <= j && !chord; ++i) chord = g.has_edge(path[i], x);
      for (std::size_t i = 1; i < j && !chord; ++i) chord = g.has_edge(x, path[i]);
      if (chord) continue;
      path.push_back(x);
      if (g.has_edge(x, path.front())) {
        found.push_back(path);
      } else if (path.size() < bound) {
        on_path[x] = 1;
        extend();
        on_path[x] = 0;
      }
      path.pop_back();
    }
  };

  for (VertexId start = 0; start < n; ++start) {
    path.assign(1, start);
    on_path[start] = 1;
    extend();
    on_path[start] = 0;
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

namespace {

std::optional<CycleSet> search_disjoint(const Digraph& g, std::size_t k, std::size_t max_length) {
  auto cycles = chordless_cycles(g, max_length);
  std::vector<std::size_t> chosen;
  std::vector<char> used(g.size(), 0);

  std::function<bool(std::size_t)> pick = [&](std::size_t from) {
    if (chosen.size() == k) return true;
    for (std::size_t i = from; i < cycles.size(); ++i) {
      const auto& c = cycles[i];
      if (std::any_of(c.begin(), c.end(), [&](VertexId x) { return used[x]; })) continue;
      for (VertexId x : c) used[x] = 1;
      chosen.push_back(i);
      if (pick(i + 1)) return true;
      chosen.pop_back();
      for (VertexId x : c) used[x] = 0;
    }
    return false;
  };
  if (!pick(0)) return std::nullopt;
  CycleSet set{{}, CycleRelation::kAllDisjoint};
  for (std::size_t i : chosen) set.cycles.push_back(cycles[i]);
  return set;
}

}  // namespace

std::optional<CycleSet> find_disjoint_cycles(const Digraph& g, std::size_t k,
                                             const DisjointCycleOptions& options) {
  if (k == 0) throw PreconditionError("k must be positive");
  if (g.size() == 0) return std::nullopt;
  auto bound_for = [&](const Digraph& h) {
    return h.size() > options.exhaustive_limit ? options.max_cycle_length : 0;
  };

  if (options.compress_first && min_out_degree(g) >= 1) {
    auto compressed = compress(g);
    if (auto set = search_disjoint(compressed.graph, k, bound_for(compressed.graph))) {
      return lift_cycle_set(g, compressed.trace, *set);
    }
    if (compressed.trace.merges.empty()) return std::nullopt;
  }
  // Contraction can merge disjoint cycles together; search the original too.
  return search_disjoint(g, k, bound_for(g));
}

namespace {

std::vector<Edge> cycle_edges(const std::vector<VertexId>& c) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c.size(); ++i) edges.emplace_back(c[i], c[(i + 1) % c.size()]);
  return edges;
}

std::optional<CycleSet> intersecting_by_family(const Digraph& g) {
  std::vector<std::vector<VertexId>> family;
  std::vector<char> unused(g.size(), 1);
  while (true) {
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (unused[v]) pool.push_back(v);
    }
    auto c = find_cycle(g, pool);
    if (!c) break;
    for (VertexId x : *c) unused[x] = 0;
    family.push_back(std::move(*c));
  }
  if (family.empty()) return std::nullopt;

  std::set<Edge> removed;
  for (const auto& c : family) {
    for (const auto& e : cycle_edges(c)) removed.insert(e);
  }
  auto adjacency = g.adjacency();
  for (VertexId u = 0; u < g.size(); ++u) {
    erase_if(adjacency[u], [&](VertexId v) { return removed.count({u, v}) > 0; });
  }
  auto other = find_cycle(Digraph(adjacency));
  if (!other) return std::nullopt;
  for (const auto& c : family) {
    if (std::any_of(other->begin(), other->end(), [&](VertexId x) { return contains(c, x); })) {
      return CycleSet{{c, *other}, CycleRelation::kFirstTwoIntersectThirdDisjoint};
    }
  }
  return std::nullopt;  // unreachable: the family is maximal
}

std::optional<CycleSet> intersecting_by_components(const Digraph& g) {
  for (const auto& component : strongly_connected_components(g)) {
    if (component.size() < 2) continue;
    auto inside = membership(g.size(), component);
    std::size_t internal = 0;
    for (VertexId v : component) {
      for (VertexId w : g.out(v)) internal += inside[w] ? 1 : 0;
    }
    if (internal <= component.size()) continue;

    auto base = *find_cycle(g, component);
    std::set<Edge> on_base;
    for (const auto& e : cycle_edges(base)) on_base.insert(e);
    auto on_cycle = membership(g.size(), base);
    for (std::size_t pos = 0; pos < base.size(); ++pos) {
      VertexId a = base[pos];
      for (VertexId b : g.out(a)) {
        if (!inside[b] || on_base.count({a, b})) continue;
        // Walk from b inside the component until the base cycle is reached,
        // then close along the base cycle back to a.
        std::vector<char> blocked(g.size(), 0);
        for (VertexId x = 0; x < g.size(); ++x) blocked[x] = !inside[x];
        std::vector<VertexId> path;
        if (on_cycle[b]) {
          path = {b};
        } else {
          std::vector<VertexId> parent(g.size(), std::numeric_limits<VertexId>::max());
          std::deque<VertexId> queue{b};
          parent[b] = b;
          VertexId hit = std::numeric_limits<VertexId>::max();
          while (!queue.empty() && hit == std::numeric_limits<VertexId>::max()) {
            VertexId x = queue.front();
            queue.pop_front();
            for (VertexId y : g.out(x)) {
              if (blocked[y] || parent[y] != std::numeric_limits<VertexId>::max()) continue;
              parent[y] = x;
              if (on_cycle[y]) {
                hit = y;
                break;
              }
              queue.push_back(y);
            }
          }
          for (VertexId x = hit; x != b; x = parent[x]) path.push_back(x);
          path.push_back(b);
          std::reverse(path.begin(), path.end());
        }
        std::vector<VertexId> second{a};
        second.insert(second.end(), path.begin(), path.end() - 1);
        std::size_t at = static_cast<std::size_t>(std::find(base.begin(), base.end(), path.back()) - base.begin());
        while (base[at] != a) {
          second.push_back(base[at]);
          at = (at + 1) % base.size();
        }
        return CycleSet{{base, second}, CycleRelation::kFirstTwoIntersectThirdDisjoint};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycleSet> find_two_intersecting_cycles(const Digraph& g) {
  if (g.size() < 2) return std::nullopt;
  if (auto set = intersecting_by_family(g)) return set;
  return intersecting_by_components(g);
}

std::optional<CycleSet> find_intersecting_pair_plus_disjoint(const Digraph& g) {
  if (g.size() < 3) return std::nullopt;
  for (const auto& third : chordless_cycles(g)) {
    auto taken = membership(g.size(), third);
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (!taken[v]) rest.push_back(v);
    }
    auto sub = induced_subgraph(g, rest);
    auto pair = find_two_intersecting_cycles(sub.graph);
    if (!pair) continue;
    CycleSet set{{}, CycleRelation::kFirstTwoIntersectThirdDisjoint};
    for (const auto& c : pair->cycles) {
      std::vector<VertexId> mapped;
      for (VertexId x : c) mapped.push_back(sub.to_original[x]);
      set.cycles.push_back(std::move(mapped));
    }
    set.cycles.push_back(third);
    return set;
  }
  return std::nullopt;
}

}  // namespace amity
