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

#include "amity/transitive.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <set>

#include "amity/errors.hpp"
#include "amity/io.hpp"

namespace amity {

bool is_automorphism(const Digraph& g, const Permutation& p) {
  if (p.size() != g.size()) return false;
  std::vector<char> hit(g.size(), 0);
  for (VertexId x : p) {
    if (x >= g.size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(p[u], p[v])) return false;
  }
  return true;
}

namespace {

// Visit order: BFS over the underlying undirected graph, `first` first.
std::vector<VertexId> search_order(const Digraph& g, VertexId first) {
  std::vector<VertexId> order;
  std::vector<char> seen(g.size(), 0);
  auto bfs = [&](VertexId root) {
    std::deque<VertexId> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (auto span : {g.out(x), g.in(x)}) {
        for (VertexId y : span) {
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
  };
  if (g.size() > 0) bfs(first);
  for (VertexId v = 0; v < g.size(); ++v) {
    if (!seen[v]) bfs(v);
  }
  return order;
}

// Calls `found` for every automorphism consistent with the pins; stops when
// it returns false.
void search_automorphisms(const Digraph& g, VertexId first, std::optional<VertexId> first_image,
                          const std::function<bool(const Permutation&)>& found) {
  const std::size_t n = g.size();
  constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();
  auto order = search_order(g, first);
  Permutation image(n, kUnset);
  std::vector<char> used(n, 0);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return found(image);
    VertexId x = order[depth];
    for (VertexId y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (depth == 0 && first_image && y != *first_image) continue;
      if (g.out_degree(x) != g.out_degree(y) || g.in_degree(x) != g.in_degree(y)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        VertexId z = order[i];
        if (g.has_edge(x, z) != g.has_edge(y, image[z]) || g.has_edge(z, x) != g.has_edge(image[z], y)) {
          consistent = false;
        }
      }
      if (!consistent) continue;
      image[x] = y;
      used[y] = 1;
      bool go_on = extend(depth + 1);
      used[y] = 0;
      image[x] = kUnset;
      if (!go_on) return false;
    }
    return true;
  };
  if (n > 0) extend(0);
}

}  // namespace

std::optional<Permutation> find_automorphism(const Digraph& g, VertexId from, VertexId to) {
  if (from >= g.size() || to >= g.size()) throw PreconditionError("vertex out of range");
  std::optional<Permutation> result;
  search_automorphisms(g, from, to, [&](const Permutation& p) {
    result = p;
    return false;
  });
  return result;
}

bool is_rotation_invariant(const Digraph& g) {
  const std::size_t n = g.size();
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge((u + 1) % n, (v + 1) % n)) return false;
  }
  return true;
}

AutomorphismSet automorphisms(const Digraph& g, std::size_t cap, std::size_t limit) {
  if (g.size() > cap) throw CapExceededError(g.size(), cap);
  AutomorphismSet result;
  search_automorphisms(g, 0, std::nullopt, [&](const Permutation& p) {
    if (result.permutations.size() == limit) {
      result.truncated = true;
      return false;
    }
    result.permutations.push_back(p);
    return true;
  });
  std::sort(result.permutations.begin(), result.permutations.end());
  result.transitive = true;
  for (VertexId v = 1; v < g.size() && result.transitive; ++v) {
    if (!find_automorphism(g, 0, v)) result.transitive = false;
  }
  return result;
}

bool is_vertex_transitive(const Digraph& g, std::size_t cap) {
  if (g.size() == 0 || is_rotation_invariant(g)) return true;
  if (g.size() > cap) throw CapExceededError(g.size(), cap);
  for (VertexId v = 1; v < g.size(); ++v) {
    if (!find_automorphism(g, 0, v)) return false;
  }
  return true;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

namespace {

void require_transitive_instance(const Digraph& g) {
  if (g.size() == 0) throw PreconditionError("empty digraph");
  if (min_out_degree(g) < 3) throw PreconditionError("needs min out-degree >= 3");
  if (!is_vertex_transitive(g, std::max(kDefaultAutomorphismCap, g.size()))) {
    throw PreconditionError("digraph is not vertex-transitive");
  }
}

std::string dump(const Digraph& g, const std::string& property, const std::string& detail) {
  GraphDocument doc{"", g, {{"counterexample", property}, {"detail", detail}}};
  return serialize_document(doc);
}

}  // namespace

ClassStructureVerdict check_class_structure(const Digraph& g, std::size_t cap) {
  require_transitive_instance(g);
  auto report = separation_report(g, 1, cap);
  ClassStructureVerdict verdict;
  verdict.classes = report.classes;
  std::vector<std::size_t> class_of(g.size());
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    for (VertexId x : report.classes[c]) class_of[x] = c;
  }
  std::string detail;
  for (const auto& [u, v] : g.edges()) {
    if (class_of[u] == class_of[v]) {
      verdict.classes_independent = false;
      if (detail.empty()) detail = "edge " + std::to_string(u) + "->" + std::to_string(v) + " inside one class";
    }
  }
  verdict.min_class_spread = std::numeric_limits<std::size_t>::max();
  for (VertexId x = 0; x < g.size(); ++x) {
    std::set<std::size_t> met;
    for (VertexId y : g.out(x)) met.insert(class_of[y]);
    if (met.size() < verdict.min_class_spread) verdict.min_class_spread = met.size();
    if (met.size() < 3) {
      verdict.spread_at_least_three = false;
      if (detail.empty()) detail = "vertex " + std::to_string(x) + " meets " + std::to_string(met.size()) + " classes";
    }
  }
  for (const auto& c : report.classes) {
    if (c.size() != report.classes.front().size()) {
      verdict.equal_class_sizes = false;
      if (detail.empty()) detail = "class sizes differ";
    }
  }
  if (!verdict.holds()) verdict.counterexample = dump(g, "class_structure", detail);
  return verdict;
}

PrimeVerdict prime_separability(const Digraph& g, std::size_t cap) {
  if (!is_prime(g.size())) throw PreconditionError("vertex count " + std::to_string(g.size()) + " is not prime");
  require_transitive_instance(g);
  auto report = separation_report(g, 1, cap);
  PrimeVerdict verdict;
  verdict.classes = report.classes;
  verdict.all_singletons = report.classes.size() == g.size();
  if (!verdict.all_singletons) {
    verdict.counterexample = dump(g, "prime_separability", std::to_string(report.classes.size()) + " classes");
  }
  return verdict;
}

std::string_view to_string(WalkOutcome outcome) {
  switch (outcome) {
    case WalkOutcome::kFound: return "found";
    case WalkOutcome::kRepeat: return "hypothesis_violated_repeat";
    case WalkOutcome::kStuck: return "hypothesis_violated_stuck";
  }
  return "unknown";
}

WalkResult singleton_walk(const Digraph& g, const Partition& p, VertexId v0) {
  if (v0 >= g.size() || p.size() != g.size()) throw PreconditionError("vertex or partition size mismatch");
  if (!is_friendly(g, p, 1)) throw PreconditionError("partition is not friendly");
  auto same_block_out = [&](VertexId x, int b) {
    auto out = g.out(x);
    return static_cast<std::size_t>(std::count_if(out.begin(), out.end(), [&](VertexId y) { return p.block(y) == b; }));
  };
  if (p.block(v0) != 0 || same_block_out(v0, 0) < 2 || same_block_out(v0, 1) < 1) {
    throw PreconditionError("v0 needs block 0, two block-0 and one block-1 out-neighbors");
  }

  WalkResult result;
  std::vector<char> visited(g.size(), 0);
  VertexId current = v0;
  while (true) {
    result.trail.push_back(current);
    visited[current] = 1;
    std::optional<VertexId> critical;
    for (VertexId w : g.in(current)) {
      if (p.block(w) == 0 && same_block_out(w, 0) == 1) {
        critical = w;
        break;
      }
    }
    if (!critical) {
      if (same_block_out(current, 1) > 0) {
        result.outcome = WalkOutcome::kFound;
        result.singleton = current;
      } else {
        result.outcome = WalkOutcome::kStuck;
      }
      return result;
    }
    if (visited[*critical]) {
      result.trail.push_back(*critical);
      result.outcome = WalkOutcome::kRepeat;
      return result;
    }
    current = *critical;
  }
}

QuotientDigraph quotient(const Digraph& g, const std::vector<VertexSet>& classes) {
  std::vector<std::size_t> class_of(g.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw PreconditionError("empty class");
    for (VertexId x : classes[c]) {
      if (x >= g.size()) throw PreconditionError("class vertex out of range");
      if (class_of[x] != std::numeric_limits<std::size_t>::max()) throw PreconditionError("classes overlap");
      class_of[x] = c;
    }
  }
  for (VertexId x = 0; x < g.size(); ++x) {
    if (class_of[x] == std::numeric_limits<std::size_t>::max()) throw PreconditionError("classes do not cover V");
  }
  std::vector<std::vector<VertexId>> adjacency(classes.size());
  for (const auto& [u, v] : g.edges()) {
    if (class_of[u] != class_of[v]) adjacency[class_of[u]].push_back(class_of[v]);
  }
  for (auto& row : adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return {classes, Digraph(adjacency)};
}

std::vector<std::size_t> hopcroft_karp(const std::vector<std::vector<std::size_t>>& left_adjacency,
                                       std::size_t right_size) {
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  const std::size_t left_size = left_adjacency.size();
  std::vector<std::size_t> match_left(left_size, kFree), match_right(right_size, kFree), dist(left_size);

  auto bfs = [&]() {
    std::deque<std::size_t> queue;
    bool reachable_free = false;
    for (std::size_t a = 0; a < left_size; ++a) {
      if (match_left[a] == kFree) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kFree;
      }
    }
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b : left_adjacency[a]) {
        std::size_t next = match_right[b];
        if (next == kFree) {
          reachable_free = true;
        } else if (dist[next] == kFree) {
          dist[next] = dist[a] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t a) {
    for (std::size_t b : left_adjacency[a]) {
      std::size_t next = match_right[b];
      if (next == kFree || (dist[next] == dist[a] + 1 && dfs(next))) {
        match_left[a] = b;
        match_right[b] = a;
        return true;
      }
    }
    dist[a] = kFree;
    return false;
  };
  while (bfs()) {
    for (std::size_t a = 0; a < left_size; ++a) {
      if (match_left[a] == kFree) dfs(a);
    }
  }
  return match_left;
}

MatchingContraction hall_matching_contract(const Digraph& g, const VertexSet& k_class, const VertexSet& l_class) {
  VertexSet k_set = to_vertex_set(std::vector<VertexId>(k_class.begin(), k_class.end()));
  VertexSet l_set = to_vertex_set(std::vector<VertexId>(l_class.begin(), l_class.end()));
  if (k_set.size() != l_set.size() || k_set.empty()) throw PreconditionError("K and L must be nonempty and equal-sized");
  for (VertexId x : k_set) {
    if (x >= g.size() || std::binary_search(l_set.begin(), l_set.end(), x)) {
      throw PreconditionError("K and L must be disjoint vertex sets of g");
    }
  }
  if (l_set.back() >= g.size()) throw PreconditionError("L vertex out of range");

  std::vector<std::vector<std::size_t>> left(k_set.size());
  for (std::size_t i = 0; i < k_set.size(); ++i) {
    for (VertexId y : g.out(k_set[i])) {
      auto it = std::lower_bound(l_set.begin(), l_set.end(), y);
      if (it != l_set.end() && *it == y) left[i].push_back(static_cast<std::size_t>(it - l_set.begin()));
    }
  }
  auto match = hopcroft_karp(left, l_set.size());
  MatchingContraction result;
  for (std::size_t i = 0; i < k_set.size(); ++i) {
    if (match[i] == std::numeric_limits<std::size_t>::max()) throw PreconditionError("no perfect matching from K to L");
    result.matching.push_back(l_set[match[i]]);
  }

  // Original vertex -> the original vertex it becomes.
  const std::size_t n = g.size();
  std::vector<VertexId> target(n);
  for (VertexId x = 0; x < n; ++x) target[x] = x;
  std::vector<char> in_k = membership(n, k_set), in_l = membership(n, l_set);
  for (std::size_t i = 0; i < k_set.size(); ++i) target[k_set[i]] = result.matching[i];

  auto& trace = result.trace;
  trace.original_size = n;
  for (std::size_t i = 0; i < k_set.size(); ++i) trace.merges.push_back({k_set[i], result.matching[i]});
  trace.final_map.assign(n, 0);
  for (VertexId x = 0; x < n; ++x) {
    if (!in_k[x]) {
      trace.final_map[x] = trace.representative.size();
      trace.representative.push_back(x);
    }
  }
  for (VertexId x : k_set) trace.final_map[x] = trace.final_map[target[x]];

  std::vector<std::vector<VertexId>> adjacency(trace.representative.size());
  for (const auto& [u, v] : g.edges()) {
    if (in_k[u] && in_k[v]) continue;
    if (in_k[u] && in_l[v] && target[u] != v) continue;
    VertexId a = trace.final_map[u];
    VertexId b = trace.final_map[v];
    if (a != b) adjacency[a].push_back(b);
  }
  for (auto& row : adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  result.graph = Digraph(adjacency);
  return result;
}

}  // namespace amity
