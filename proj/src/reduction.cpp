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

#include "amity/reduction.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "amity/errors.hpp"

namespace amity {

std::string_view to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::kBothInSinks: return "both_in_sinks";
    case ReductionCase::kPathToOtherSink: return "path_to_other_sink";
    case ReductionCase::kSoleSinkEntry: return "sole_sink_entry";
    case ReductionCase::kDisjointPaths: return "disjoint_paths";
    case ReductionCase::kCutVertex: return "cut_vertex";
  }
  return "unknown";
}

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

VertexId local_id(const std::vector<VertexId>& to_original, VertexId original) {
  auto it = std::find(to_original.begin(), to_original.end(), original);
  if (it == to_original.end()) throw Error("internal", "vertex missing from sub-instance");
  return static_cast<VertexId>(it - to_original.begin());
}

// BFS from `from` that never expands S vertices and never enters `blocked`;
// returns the path to the first S vertex reached, or empty.
std::vector<VertexId> path_into_sinks(const Digraph& g, VertexId from, const std::vector<char>& in_s,
                                      VertexId blocked) {
  std::vector<VertexId> parent(g.size(), kNone);
  std::deque<VertexId> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (in_s[x]) {
      std::vector<VertexId> path;
      for (VertexId y = x; y != from; y = parent[y]) path.push_back(y);
      path.push_back(from);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (VertexId y : g.out(x)) {
      if (y == blocked || parent[y] != kNone) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return {};
}

std::vector<VertexId> truncate_at_sinks(const std::vector<VertexId>& path, const std::vector<char>& in_s) {
  std::vector<VertexId> prefix;
  for (VertexId x : path) {
    prefix.push_back(x);
    if (in_s[x]) break;
  }
  return prefix;
}

}  // namespace

ReductionPlan reduce_to_strongly_connected(const Digraph& g, VertexId u, VertexId v) {
  if (u >= g.size() || v >= g.size()) throw PreconditionError("vertex out of range");
  if (u == v) throw PreconditionError("u and v must differ");
  const std::size_t d = min_out_degree(g);
  if (d < 3) throw PreconditionError("reduction needs min out-degree >= 3");

  ReductionPlan plan;
  plan.u = u;
  plan.v = v;
  auto sinks = sink_components(g);
  std::vector<std::size_t> component(g.size(), kNone);
  for (std::size_t c = 0; c < sinks.size(); ++c) {
    for (VertexId x : sinks[c]) {
      component[x] = c;
      plan.sinks.push_back(x);
    }
  }
  std::sort(plan.sinks.begin(), plan.sinks.end());
  std::vector<char> in_s = membership(g.size(), plan.sinks);

  // Union of the sink components holding a and b, with the pair (a, b).
  auto sink_sub = [&](VertexId a, VertexId b) {
    std::vector<VertexId> vertices = sinks[component[a]];
    if (component[b] != component[a]) {
      vertices.insert(vertices.end(), sinks[component[b]].begin(), sinks[component[b]].end());
    }
    vertices = to_vertex_set(std::move(vertices));
    auto induced = induced_subgraph(g, vertices);
    SubInstance sub{std::move(induced.graph), std::move(induced.to_original), 0, 0};
    sub.first = local_id(sub.to_original, a);
    sub.second = local_id(sub.to_original, b);
    return sub;
  };

  if (in_s[u] && in_s[v]) {
    plan.kind = ReductionCase::kBothInSinks;
    plan.sub = sink_sub(u, v);
    return plan;
  }

  if (in_s[u] != in_s[v]) {
    VertexId outside = in_s[u] ? v : u;
    VertexId inside = in_s[u] ? u : v;
    auto path = path_into_sinks(g, outside, in_s, inside);
    if (!path.empty()) {
      plan.kind = ReductionCase::kPathToOtherSink;
      VertexId entry = path.back();
      plan.sub = sink_sub(entry, inside);
      path.pop_back();
      plan.attachments.push_back({plan.sub->first, path});
      return plan;
    }
    plan.kind = ReductionCase::kSoleSinkEntry;
    auto reach = reachable_from(g, std::vector<VertexId>{outside});
    for (VertexId x = 0; x < g.size(); ++x) {
      if (reach[x] && !in_s[x]) plan.seed_zero.push_back(x);
    }
    plan.seed_one = plan.sinks;
    return plan;
  }

  auto menger = vertex_disjoint_paths_and_separator(g, std::vector<VertexId>{u, v}, plan.sinks);
  if (menger.paths.size() >= 2) {
    plan.kind = ReductionCase::kDisjointPaths;
    auto first = truncate_at_sinks(menger.paths[0], in_s);
    auto second = truncate_at_sinks(menger.paths[1], in_s);
    if (first.front() != u) std::swap(first, second);
    plan.sub = sink_sub(first.back(), second.back());
    first.pop_back();
    second.pop_back();
    plan.attachments.push_back({plan.sub->first, first});
    plan.attachments.push_back({plan.sub->second, second});
    return plan;
  }

  plan.kind = ReductionCase::kCutVertex;
  const VertexId t = menger.separator.at(0);
  plan.cut_vertex = t;

  std::vector<VertexId> row;
  auto add_from = [&](VertexId source, std::size_t wanted) {
    for (VertexId w : g.out(source)) {
      if (row.size() >= wanted) break;
      if (w == t || w == u || w == v || std::find(row.begin(), row.end(), w) != row.end()) continue;
      row.push_back(w);
    }
  };
  if (t == u || t == v) {
    VertexId other = t == u ? v : u;
    row.push_back(other);
    add_from(other, d);
  } else {
    row = {u, v};
    add_from(u, d);
    add_from(v, d);
  }
  auto adjacency = g.adjacency();
  adjacency[t] = row;
  plan.rewired = Digraph(adjacency);

  auto reach = reachable_from(*plan.rewired, std::vector<VertexId>{u, v});
  std::vector<VertexId> kept;
  for (VertexId x = 0; x < g.size(); ++x) {
    if (reach[x]) kept.push_back(x);
  }
  auto induced = induced_subgraph(*plan.rewired, kept);
  SubInstance sub{std::move(induced.graph), std::move(induced.to_original), 0, 0};
  sub.first = local_id(sub.to_original, u);
  sub.second = local_id(sub.to_original, v);

  plan.cut_path = in_s[t] ? std::vector<VertexId>{t} : path_into_sinks(g, t, in_s, kNone);
  std::vector<VertexId> attached(plan.cut_path.begin() + 1, plan.cut_path.end());
  for (VertexId x : plan.sinks) {
    if (x != t) attached.push_back(x);
  }
  attached = to_vertex_set(std::move(attached));
  for (VertexId x : attached) {
    if (reach[x]) throw Error("internal", "cut path meets the rewired component");
  }
  plan.attachments.push_back({local_id(sub.to_original, t), attached});
  plan.sub = std::move(sub);
  return plan;
}

Partition lift_reduction(const Digraph& g, const ReductionPlan& plan,
                         const std::optional<Partition>& sub_partition) {
  if (!plan.sub) return extend_friendly_sets(g, plan.seed_zero, plan.seed_one);
  if (!sub_partition) throw PreconditionError("plan needs a sub-instance partition");
  const auto& sub = *plan.sub;
  const auto& p = *sub_partition;
  if (p.size() != sub.graph.size() || !is_friendly(sub.graph, p, 1) || !p.separates(sub.first, sub.second)) {
    throw PreconditionError("sub-instance partition is not friendly or does not separate the pair");
  }
  std::vector<int> block(g.size(), -1);
  for (VertexId i = 0; i < sub.graph.size(); ++i) block[sub.to_original[i]] = p.block(i);
  for (const auto& a : plan.attachments) {
    for (VertexId x : a.vertices) block[x] = p.block(a.anchor);
  }
  VertexSet zero, one;
  for (VertexId x = 0; x < g.size(); ++x) {
    if (block[x] == 0) zero.push_back(x);
    if (block[x] == 1) one.push_back(x);
  }
  return extend_friendly_sets(g, zero, one);
}

std::optional<Partition> separate_via_reduction(const Digraph& g, VertexId u, VertexId v, std::size_t cap) {
  auto plan = reduce_to_strongly_connected(g, u, v);
  if (!plan.sub) return lift_reduction(g, plan, std::nullopt);
  auto p = can_separate(plan.sub->graph, std::vector<VertexId>{plan.sub->first, plan.sub->second}, 1, cap);
  if (!p) return std::nullopt;
  return lift_reduction(g, plan, p);
}

}  // namespace amity
