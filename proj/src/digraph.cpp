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

#include "amity/digraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "amity/errors.hpp"

namespace amity {

namespace {

std::string edge_text(VertexId u, VertexId v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

}  // namespace

Digraph::Digraph(const std::vector<std::vector<VertexId>>& out_adjacency) {
  const std::size_t n = out_adjacency.size();
  std::vector<VertexId> scratch;
  for (VertexId u = 0; u < n; ++u) {
    scratch.assign(out_adjacency[u].begin(), out_adjacency[u].end());
    for (VertexId v : scratch) {
      if (v >= n) throw PreconditionError("edge " + edge_text(u, v) + " has head out of range");
      if (v == u) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    std::sort(scratch.begin(), scratch.end());
    auto dup = std::adjacent_find(scratch.begin(), scratch.end());
    if (dup != scratch.end()) throw PreconditionError("duplicate edge " + edge_text(u, *dup));
  }
  build(out_adjacency);
}

Digraph Digraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u >= n) throw PreconditionError("edge " + edge_text(u, v) + " has tail out of range");
    adjacency[u].push_back(v);
  }
  return Digraph(adjacency);
}

Digraph Digraph::simplified(const std::vector<std::vector<VertexId>>& out_adjacency) {
  const std::size_t n = out_adjacency.size();
  std::vector<std::vector<VertexId>> clean(n);
  std::vector<std::size_t> seen(n, std::numeric_limits<std::size_t>::max());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : out_adjacency[u]) {
      if (v >= n) throw PreconditionError("edge " + edge_text(u, v) + " has head out of range");
      if (v == u || seen[v] == u) continue;
      seen[v] = u;
      clean[u].push_back(v);
    }
  }
  Digraph g;
  g.build(clean);
  return g;
}

void Digraph::build(const std::vector<std::vector<VertexId>>& out_adjacency) {
  const std::size_t n = out_adjacency.size();
  out_offsets_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) out_offsets_[u + 1] = out_offsets_[u] + out_adjacency[u].size();
  out_targets_.clear();
  out_targets_.reserve(out_offsets_[n]);
  for (const auto& row : out_adjacency) out_targets_.insert(out_targets_.end(), row.begin(), row.end());

  sorted_targets_ = out_targets_;
  for (VertexId u = 0; u < n; ++u) {
    std::sort(sorted_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u]),
              sorted_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u + 1]));
  }

  in_offsets_.assign(n + 1, 0);
  for (VertexId v : out_targets_) ++in_offsets_[v + 1];
  for (VertexId v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];
  in_sources_.assign(out_targets_.size(), 0);
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (VertexId u = 0; u < n; ++u) {
    for (std::size_t i = out_offsets_[u]; i < out_offsets_[u + 1]; ++i) {
      in_sources_[cursor[out_targets_[i]]++] = u;
    }
  }
}

bool Digraph::has_edge(VertexId u, VertexId v) const noexcept {
  auto first = sorted_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u]);
  auto last = sorted_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u + 1]);
  return std::binary_search(first, last, v);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v : out(u)) result.emplace_back(u, v);
  }
  return result;
}

std::vector<std::vector<VertexId>> Digraph::adjacency() const {
  std::vector<std::vector<VertexId>> result(size());
  for (VertexId u = 0; u < size(); ++u) result[u].assign(out(u).begin(), out(u).end());
  return result;
}

// --- Partition ---------------------------------------------------------------

Partition::Partition(std::vector<std::uint8_t> blocks) : blocks_(std::move(blocks)) {
  for (std::uint8_t b : blocks_) {
    if (b > 1) throw PreconditionError("partition labels must be 0 or 1");
  }
}

Partition Partition::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw PreconditionError("mask partitions support at most 64 vertices");
  std::vector<std::uint8_t> blocks(n);
  for (std::size_t v = 0; v < n; ++v) blocks[v] = static_cast<std::uint8_t>((mask >> v) & 1U);
  return Partition(std::move(blocks));
}

Partition Partition::from_block_one(std::size_t n, std::span<const VertexId> block_one) {
  std::vector<std::uint8_t> blocks(n, 0);
  for (VertexId v : block_one) {
    if (v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    blocks[v] = 1;
  }
  return Partition(std::move(blocks));
}

bool Partition::is_trivial() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](std::uint8_t b) { return b == blocks_.front(); });
}

VertexSet Partition::members(int block) const {
  VertexSet result;
  for (VertexId v = 0; v < blocks_.size(); ++v) {
    if (blocks_[v] == block) result.push_back(v);
  }
  return result;
}

Partition Partition::swapped() const {
  Partition p = *this;
  for (auto& b : p.blocks_) b ^= 1U;
  return p;
}

Partition Partition::canonical() const {
  return (!blocks_.empty() && blocks_[0] == 1) ? swapped() : *this;
}

std::uint64_t Partition::mask() const {
  if (blocks_.size() > 64) throw PreconditionError("mask partitions support at most 64 vertices");
  std::uint64_t m = 0;
  for (std::size_t v = 0; v < blocks_.size(); ++v) m |= static_cast<std::uint64_t>(blocks_[v]) << v;
  return m;
}

bool Partition::splits(std::span<const VertexId> s) const noexcept {
  bool zero = false;
  bool one = false;
  for (VertexId v : s) (blocks_[v] ? one : zero) = true;
  return zero && one;
}

std::string Partition::to_string() const {
  std::string text(blocks_.size(), '0');
  for (std::size_t v = 0; v < blocks_.size(); ++v) text[v] = static_cast<char>('0' + blocks_[v]);
  return text;
}

// --- cycles ------------------------------------------------------------------

bool is_directed_cycle(const Digraph& g, std::span<const VertexId> cycle) {
  if (cycle.size() < 2) return false;
  std::vector<VertexId> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

namespace {

bool intersects(std::span<const VertexId> a, std::span<const VertexId> b) {
  return std::any_of(a.begin(), a.end(),
                     [&](VertexId x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

}  // namespace

bool verify_cycle_set(const Digraph& g, const CycleSet& set) {
  for (const auto& c : set.cycles) {
    if (!is_directed_cycle(g, c)) return false;
  }
  const auto& cs = set.cycles;
  switch (set.relation) {
    case CycleRelation::kAllDisjoint:
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          if (intersects(cs[i], cs[j])) return false;
        }
      }
      return true;
    case CycleRelation::kFirstTwoIntersectThirdDisjoint:
      if (cs.size() < 2 || cs.size() > 3) return false;
      if (cs[0] == cs[1] || !intersects(cs[0], cs[1])) return false;
      if (cs.size() == 3 && (intersects(cs[2], cs[0]) || intersects(cs[2], cs[1]))) return false;
      return true;
  }
  return false;
}

// --- degrees and subgraphs ---------------------------------------------------

std::size_t min_out_degree(const Digraph& g) {
  if (g.size() == 0) throw PreconditionError("min_out_degree of the empty digraph");
  std::size_t best = g.out_degree(0);
  for (VertexId v = 1; v < g.size(); ++v) best = std::min(best, g.out_degree(v));
  return best;
}

std::size_t max_in_degree(const Digraph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.size(); ++v) best = std::max(best, g.in_degree(v));
  return best;
}

Digraph reverse(const Digraph& g) {
  std::vector<std::vector<VertexId>> adjacency(g.size());
  for (VertexId v = 0; v < g.size(); ++v) adjacency[v].assign(g.in(v).begin(), g.in(v).end());
  return Digraph(adjacency);
}

InducedSubgraph induced_subgraph(const Digraph& g, std::span<const VertexId> vertices) {
  constexpr auto kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> local(g.size(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.size()) throw PreconditionError("vertex out of range in induced_subgraph");
    if (local[vertices[i]] != kAbsent) throw PreconditionError("repeated vertex in induced_subgraph");
    local[vertices[i]] = i;
  }
  std::vector<std::vector<VertexId>> adjacency(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.out(vertices[i])) {
      if (local[w] != kAbsent) adjacency[i].push_back(local[w]);
    }
  }
  return {Digraph(adjacency), std::vector<VertexId>(vertices.begin(), vertices.end())};
}

InducedSubgraph remove_vertex(const Digraph& g, VertexId v) {
  std::vector<VertexId> keep;
  keep.reserve(g.size());
  for (VertexId u = 0; u < g.size(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

VertexSet to_vertex_set(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::vector<char> membership(std::size_t n, std::span<const VertexId> vertices) {
  std::vector<char> flags(n, 0);
  for (VertexId v : vertices) {
    if (v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    flags[v] = 1;
  }
  return flags;
}

// --- strongly connected components (iterative Tarjan) ------------------------

std::vector<VertexSet> strongly_connected_components(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;
  std::vector<VertexSet> components;
  std::size_t counter = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      auto succ = g.out(v);
      if (next < succ.size()) {
        VertexId w = succ[next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      VertexId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        VertexSet component;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  // Tarjan emits a component only after everything it reaches; reversing
  // yields a topological order of the condensation.
  std::reverse(components.begin(), components.end());
  return components;
}

std::vector<VertexSet> sink_components(const Digraph& g) {
  auto components = strongly_connected_components(g);
  std::vector<std::size_t> owner(g.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (VertexId v : components[c]) owner[v] = c;
  }
  std::vector<VertexSet> sinks;
  for (std::size_t c = 0; c < components.size(); ++c) {
    bool closed = true;
    for (VertexId v : components[c]) {
      for (VertexId w : g.out(v)) closed = closed && owner[w] == c;
    }
    if (closed) sinks.push_back(components[c]);
  }
  return sinks;
}

// --- cycle search ------------------------------------------------------------

std::optional<std::vector<VertexId>> find_cycle(const Digraph& g, std::span<const VertexId> within) {
  const std::size_t n = g.size();
  std::vector<char> inside = membership(n, within);
  // 0 = unseen, 1 = on the DFS stack, 2 = finished.
  std::vector<char> color(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<std::pair<VertexId, std::size_t>> stack;

  VertexSet roots = to_vertex_set(std::vector<VertexId>(within.begin(), within.end()));
  for (VertexId root : roots) {
    if (color[root] != 0) continue;
    color[root] = 1;
    depth[root] = 0;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto succ = g.out(v);
      if (next == succ.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      VertexId w = succ[next++];
      if (!inside[w]) continue;
      if (color[w] == 1) {
        std::vector<VertexId> cycle;
        for (std::size_t i = depth[w]; i < stack.size(); ++i) cycle.push_back(stack[i].first);
        return cycle;
      }
      if (color[w] == 0) {
        color[w] = 1;
        depth[w] = stack.size();
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<VertexId>> find_cycle(const Digraph& g) {
  std::vector<VertexId> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return find_cycle(g, all);
}

// --- reachability ------------------------------------------------------------

std::vector<char> reachable_from(const Digraph& g, std::span<const VertexId> from,
                                 const std::vector<char>* blocked) {
  std::vector<char> seen(g.size(), 0);
  std::deque<VertexId> queue;
  for (VertexId v : from) {
    if (blocked && (*blocked)[v]) continue;
    if (!seen[v]) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.out(v)) {
      if (seen[w] || (blocked && (*blocked)[w])) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  return seen;
}

std::vector<VertexId> shortest_path_to(const Digraph& g, VertexId from, const std::vector<char>& target) {
  constexpr auto kNone = std::numeric_limits<VertexId>::max();
  if (target[from]) return {from};
  std::vector<VertexId> parent(g.size(), kNone);
  std::deque<VertexId> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.out(v)) {
      if (parent[w] != kNone) continue;
      parent[w] = v;
      if (target[w]) {
        std::vector<VertexId> path{w};
        while (path.back() != from) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return {};
}

// --- Menger paths via unit vertex-capacity max flow --------------------------

namespace {

struct FlowNetwork {
  struct Arc {
    std::size_t head;
    std::size_t capacity;
    std::size_t flow;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> incident;

  explicit FlowNetwork(std::size_t nodes) : incident(nodes) {}

  void add(std::size_t from, std::size_t to, std::size_t capacity) {
    incident[from].push_back(arcs.size());
    arcs.push_back({to, capacity, 0});
    incident[to].push_back(arcs.size());
    arcs.push_back({from, 0, 0});
  }
  std::size_t residual(std::size_t arc) const { return arcs[arc].capacity - arcs[arc].flow; }
  void push(std::size_t arc) {
    ++arcs[arc].flow;
    --arcs[arc ^ 1U].flow;  // paired arc; flow stored modulo wraparound
  }
};

}  // namespace

DisjointPaths vertex_disjoint_paths_and_separator(const Digraph& g,
                                                  std::span<const VertexId> sources,
                                                  std::span<const VertexId> targets) {
  const std::size_t n = g.size();
  if (sources.empty() || targets.empty()) {
    throw PreconditionError("sources and targets must be nonempty");
  }
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  const std::size_t unbounded = n + 1;
  auto in_node = [](VertexId v) { return 2 * v; };
  auto out_node = [](VertexId v) { return 2 * v + 1; };

  // Reverse arcs hold "negative" flow via unsigned wraparound; residual of a
  // reverse arc is then 0 - flow, i.e. the forward flow.
  FlowNetwork net(2 * n + 2);
  std::vector<std::size_t> vertex_arc(n);
  for (VertexId v = 0; v < n; ++v) {
    vertex_arc[v] = net.arcs.size();
    net.add(in_node(v), out_node(v), 1);
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.out(u)) net.add(out_node(u), in_node(v), unbounded);
  }
  for (VertexId s : to_vertex_set({sources.begin(), sources.end()})) net.add(source, in_node(s), unbounded);
  for (VertexId t : to_vertex_set({targets.begin(), targets.end()})) net.add(out_node(t), sink, unbounded);

  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> via(net.incident.size());
  auto bfs = [&]() {
    std::fill(via.begin(), via.end(), kNone);
    std::deque<std::size_t> queue{source};
    via[source] = kNone - 1;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t arc : net.incident[x]) {
        std::size_t y = net.arcs[arc].head;
        if (via[y] != kNone || net.residual(arc) == 0) continue;
        via[y] = arc;
        if (y == sink) return true;
        queue.push_back(y);
      }
    }
    return false;
  };
  while (bfs()) {
    for (std::size_t y = sink; y != source;) {
      std::size_t arc = via[y];
      net.push(arc);
      y = net.arcs[arc ^ 1U].head;
    }
  }

  DisjointPaths result;
  // Min cut: vertex arcs leaving the residual-reachable side.
  for (VertexId v = 0; v < n; ++v) {
    if (via[in_node(v)] != kNone && via[out_node(v)] == kNone) result.separator.push_back(v);
  }

  auto positive = [&](std::size_t arc) {
    return (arc % 2 == 0) && net.arcs[arc].flow > 0 && net.arcs[arc].flow <= unbounded;
  };
  for (std::size_t arc : net.incident[source]) {
    if (!positive(arc)) continue;
    VertexId v = net.arcs[arc].head / 2;
    std::vector<VertexId> path{v};
    std::size_t node = out_node(v);
    while (true) {
      std::size_t next = kNone;
      for (std::size_t a : net.incident[node]) {
        if (positive(a)) {
          next = a;
          break;
        }
      }
      --net.arcs[next].flow;
      std::size_t head = net.arcs[next].head;
      if (head == sink) break;
      VertexId w = head / 2;
      path.push_back(w);
      node = out_node(w);
    }
    result.paths.push_back(std::move(path));
  }
  return result;
}

}  // namespace amity
