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

#include "amity/generators.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "amity/cycles.hpp"
#include "amity/detail/random.hpp"
#include "amity/errors.hpp"

namespace amity {

namespace {

std::string count_text(std::size_t x) { return std::to_string(x); }

// d distinct values from `pool` (partial Fisher-Yates), in draw order.
std::vector<VertexId> draw(detail::Rng& rng, std::vector<VertexId> pool, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j = i + detail::uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(d);
  return pool;
}

void combinations(std::size_t k, const std::vector<VertexId>& pool, std::size_t from,
                  std::vector<VertexId>& current, std::vector<std::vector<VertexId>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i + (k - current.size()) <= pool.size(); ++i) {
    current.push_back(pool[i]);
    combinations(k, pool, i + 1, current, out);
    current.pop_back();
  }
}

bool weakly_connected(const Digraph& g) {
  if (g.size() == 0) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto visit = [&](VertexId w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    };
    for (VertexId w : g.out(v)) visit(w);
    for (VertexId w : g.in(v)) visit(w);
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw PreconditionError("cycle needs at least 2 vertices");
  std::vector<std::vector<VertexId>> adjacency(n);
  for (VertexId v = 0; v < n; ++v) adjacency[v] = {(v + 1) % n};
  return Digraph(adjacency);
}

Digraph complete_digraph(std::size_t n) {
  if (n < 1) throw PreconditionError("complete digraph needs at least 1 vertex");
  std::vector<std::vector<VertexId>> adjacency(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      if (w != v) adjacency[v].push_back(w);
    }
  }
  return Digraph(adjacency);
}

Digraph circulant(std::size_t n, std::span<const std::size_t> offsets) {
  if (n < 2) throw PreconditionError("circulant needs at least 2 vertices");
  for (std::size_t s : offsets) {
    if (s == 0 || s >= n) throw PreconditionError("circulant offset " + count_text(s) + " outside [1, n)");
  }
  std::vector<std::vector<VertexId>> adjacency(n);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t s : offsets) adjacency[v].push_back((v + s) % n);
  }
  return Digraph(adjacency);
}

Digraph random_d_out(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d > n - 1) {
    throw PreconditionError("random_d_out needs d <= n - 1 (n=" + count_text(n) + ", d=" + count_text(d) + ")");
  }
  detail::Rng rng(seed);
  std::vector<std::vector<VertexId>> adjacency(n);
  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v) {
    others.clear();
    for (VertexId w = 0; w < n; ++w) {
      if (w != v) others.push_back(w);
    }
    adjacency[v] = draw(rng, others, d);
  }
  return Digraph(adjacency);
}

Digraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d > n - 1) {
    throw PreconditionError("random_regular needs d <= n - 1 (n=" + count_text(n) + ", d=" + count_text(d) + ")");
  }
  std::vector<std::vector<VertexId>> out(n);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t s = 1; s <= d; ++s) out[v].push_back((v + s) % n);
  }
  if (d == 0 || d == n - 1) return Digraph(out);

  auto has = [&](VertexId a, VertexId b) { return std::find(out[a].begin(), out[a].end(), b) != out[a].end(); };
  detail::Rng rng(seed);
  const std::size_t target = 10 * n * d;
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < target && attempt < 20 * target; ++attempt) {
    VertexId a = detail::uniform_below(rng, n);
    VertexId c = detail::uniform_below(rng, n);
    std::size_t i = detail::uniform_below(rng, d);
    std::size_t j = detail::uniform_below(rng, d);
    VertexId b = out[a][i];
    VertexId e = out[c][j];
    if (a == c || b == e || a == e || c == b || has(a, e) || has(c, b)) continue;
    out[a][i] = e;
    out[c][j] = b;
    ++done;
  }
  return Digraph(out);
}

Digraph random_layered(std::size_t n, std::size_t d, std::size_t layers, std::uint64_t seed) {
  if (layers == 0 || n < layers) throw PreconditionError("random_layered needs 1 <= layers <= n");
  std::vector<std::size_t> start(layers + 1);
  for (std::size_t i = 0; i <= layers; ++i) start[i] = i * n / layers;
  if (start[layers] - start[layers - 1] <= d) {
    throw PreconditionError("last layer of random_layered must have more than d vertices");
  }
  detail::Rng rng(seed);
  std::vector<std::vector<VertexId>> adjacency(n);
  for (std::size_t layer = 0; layer < layers; ++layer) {
    for (VertexId v = start[layer]; v < start[layer + 1]; ++v) {
      std::vector<VertexId> pool;
      for (VertexId w = start[layer]; w < n; ++w) {
        if (w != v) pool.push_back(w);
      }
      adjacency[v] = draw(rng, pool, d);
    }
  }
  return Digraph(adjacency);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  auto adjacency = a.adjacency();
  for (VertexId v = 0; v < b.size(); ++v) {
    std::vector<VertexId> row;
    for (VertexId w : b.out(v)) row.push_back(w + a.size());
    adjacency.push_back(std::move(row));
  }
  return Digraph(adjacency);
}

std::vector<Digraph> complete_dominated_cubic(std::size_t n, std::span<const Edge> seeds) {
  std::vector<std::vector<VertexId>> out(n);
  for (const auto& [u, v] : seeds) {
    if (u >= n || v >= n || u == v) throw PreconditionError("invalid seed edge");
    out[u].push_back(v);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (out[v].size() > 3) throw PreconditionError("seed edges exceed out-degree 3 at vertex " + count_text(v));
  }
  auto has = [&](VertexId a, VertexId b) { return std::find(out[a].begin(), out[a].end(), b) != out[a].end(); };

  std::vector<Digraph> found;
  std::function<void(VertexId)> fill = [&](VertexId v) {
    if (v == n) {
      Digraph g(out);
      for (const auto& [a, b] : g.edges()) {
        if (g.has_edge(b, a) || !is_dominated(g, a, b)) return;
      }
      if (weakly_connected(g)) found.push_back(std::move(g));
      return;
    }
    std::size_t need = 3 - out[v].size();
    std::vector<VertexId> pool;
    for (VertexId w = 0; w < n; ++w) {
      if (w != v && !has(v, w) && !has(w, v)) pool.push_back(w);
    }
    std::vector<std::vector<VertexId>> picks;
    std::vector<VertexId> current;
    combinations(need, pool, 0, current, picks);
    const std::size_t base = out[v].size();
    for (const auto& pick : picks) {
      out[v].insert(out[v].end(), pick.begin(), pick.end());
      fill(v + 1);
      out[v].resize(base);
    }
  };
  fill(0);
  return found;
}

std::vector<Edge> dominated_cubic_seeds(bool same_orientation) {
  constexpr VertexId v = 0, u1 = 1, u2 = 2, u3 = 3, w1 = 4, w2 = 5, w3 = 6;
  std::vector<Edge> seeds = {
      {v, w1},  {v, w2},  {v, w3},    // out-neighbors of v
      {u1, v},  {u2, v},  {u3, v},    // in-neighbors of v
      {u1, u2}, {u2, u3}, {u3, u1},   // in-neighborhood cycle
      {w1, w2}, {w2, w3}, {w3, w1},   // out-neighborhood cycle
  };
  // Each v->w_i is dominated through a matching u_pi(i) -> w_i.
  if (same_orientation) {
    seeds.insert(seeds.end(), {{u1, w1}, {u2, w2}, {u3, w3}});
  } else {
    seeds.insert(seeds.end(), {{u1, w1}, {u3, w2}, {u2, w3}});
  }
  return seeds;
}

namespace {

Digraph unique_completion(bool same_orientation) {
  auto seeds = dominated_cubic_seeds(same_orientation);
  auto found = complete_dominated_cubic(same_orientation ? 8 : 7, seeds);
  if (found.size() != 1) {
    throw Error("internal", "dominated cubic reconstruction found " + count_text(found.size()) + " completions");
  }
  return found.front();
}

}  // namespace

Digraph dominated_cubic_same_orientation() {
  static const Digraph g = unique_completion(true);
  return g;
}

Digraph dominated_cubic_opposite_orientation() {
  static const Digraph g = unique_completion(false);
  return g;
}

std::vector<std::string> dominated_cubic_labels(std::size_t n) {
  std::vector<std::string> labels = {"v", "u1", "u2", "u3", "w1", "w2", "w3"};
  if (n == 8) labels.push_back("x");
  return labels;
}

OutDegreeProduct::OutDegreeProduct(std::size_t n, std::size_t d) : n_(n), d_(d), choices_(n) {
  if (n == 0 || d > n - 1) throw PreconditionError("out-degree product needs d <= n - 1");
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> others;
    for (VertexId w = 0; w < n; ++w) {
      if (w != v) others.push_back(w);
    }
    std::vector<VertexId> current;
    combinations(d, others, 0, current, choices_[v]);
    if (count_ > std::numeric_limits<std::uint64_t>::max() / choices_[v].size()) {
      throw PreconditionError("out-degree product family too large to index");
    }
    count_ *= choices_[v].size();
  }
}

Digraph OutDegreeProduct::at(std::uint64_t index) const {
  if (index >= count_) throw PreconditionError("product index out of range");
  std::vector<std::vector<VertexId>> adjacency(n_);
  for (VertexId v = 0; v < n_; ++v) {
    const std::uint64_t radix = choices_[v].size();
    adjacency[v] = choices_[v][index % radix];
    index /= radix;
  }
  return Digraph(adjacency);
}

std::uint64_t OutDegreeProduct::index_of(const Digraph& g) const {
  if (g.size() != n_) throw PreconditionError("digraph size does not match product family");
  std::uint64_t index = 0;
  for (VertexId v = n_; v-- > 0;) {
    std::vector<VertexId> row(g.out(v).begin(), g.out(v).end());
    std::sort(row.begin(), row.end());
    auto it = std::lower_bound(choices_[v].begin(), choices_[v].end(), row);
    if (it == choices_[v].end() || *it != row) throw PreconditionError("digraph is not in the product family");
    index = index * choices_[v].size() + static_cast<std::uint64_t>(it - choices_[v].begin());
  }
  return index;
}

}  // namespace amity
