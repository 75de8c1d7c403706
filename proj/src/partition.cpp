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

#include "amity/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>

#include "amity/errors.hpp"

namespace amity {

namespace {

using Mask = std::uint64_t;

void check_cap(const Digraph& g, std::size_t cap) {
  cap = std::min(cap, kMaxExhaustiveCap);
  if (g.size() > cap) throw CapExceededError(g.size(), cap);
}

void check_r(std::size_t r) {
  if (r < 1) throw PreconditionError("r must be at least 1");
}

// Backtracking over block assignments. A vertex whose available out-neighbors
// (those not in the opposite block) drop to exactly r forces the unassigned
// ones into its block; an unassigned vertex that cannot reach r in one block
// is forced into the other.
class MaskSolver {
 public:
  MaskSolver(const Digraph& g, std::size_t r) : n_(g.size()), r_(static_cast<int>(r)), out_(g.size()) {
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId w : g.out(v)) out_[v] |= Mask{1} << w;
    }
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return g.in_degree(a) > g.in_degree(b); });
  }

  // Calls emit(mask of block 1) for every complete friendly assignment that
  // extends (a0, a1); stops early when emit returns false.
  template <typename Emit>
  bool search(Mask a0, Mask a1, Emit&& emit) const {
    if (!propagate(a0, a1)) return true;
    Mask free = all_ & ~(a0 | a1);
    if (free == 0) return emit(a1);
    VertexId pick = 0;
    for (VertexId v : order_) {
      if ((free >> v) & 1U) {
        pick = v;
        break;
      }
    }
    Mask bit = Mask{1} << pick;
    if (!search(a0 | bit, a1, emit)) return false;
    return search(a0, a1 | bit, emit);
  }

 private:
  bool propagate(Mask& a0, Mask& a1) const {
    if (a0 & a1) return false;
    bool changed = true;
    while (changed) {
      changed = false;
      Mask free = all_ & ~(a0 | a1);
      for (VertexId v = 0; v < n_; ++v) {
        Mask bit = Mask{1} << v;
        if (free & bit) {
          bool can0 = std::popcount(out_[v] & ~a1) >= r_;
          bool can1 = std::popcount(out_[v] & ~a0) >= r_;
          if (!can0 && !can1) return false;
          if (can0 != can1) {
            (can0 ? a0 : a1) |= bit;
            free &= ~bit;
            changed = true;
          }
          continue;
        }
        bool zero = (a0 & bit) != 0;
        Mask available = out_[v] & ~(zero ? a1 : a0);
        int count = std::popcount(available);
        if (count < r_) return false;
        Mask forced = available & free;
        if (count == r_ && forced) {
          (zero ? a0 : a1) |= forced;
          free &= ~forced;
          changed = true;
        }
      }
    }
    return true;
  }

  std::size_t n_;
  int r_;
  std::vector<Mask> out_;
  Mask all_ = 0;
  std::vector<VertexId> order_;
};

}  // namespace

bool is_friendly(const Digraph& g, const Partition& p, std::size_t r) {
  check_r(r);
  if (p.size() != g.size()) {
    throw PreconditionError("partition has " + std::to_string(p.size()) + " entries, digraph has " +
                            std::to_string(g.size()) + " vertices");
  }
  for (VertexId v = 0; v < g.size(); ++v) {
    std::size_t same = 0;
    for (VertexId w : g.out(v)) same += p.block(w) == p.block(v) ? 1 : 0;
    if (same < r) return false;
  }
  return true;
}

Partition extend_friendly_sets(const Digraph& g, std::span<const VertexId> u_set,
                               std::span<const VertexId> w_set) {
  if (g.size() == 0 || min_out_degree(g) < 1) {
    throw PreconditionError("extension requires min out-degree >= 1");
  }
  if (u_set.empty() || w_set.empty()) throw PreconditionError("both seed sets must be nonempty");
  auto in_u = membership(g.size(), u_set);
  auto in_w = membership(g.size(), w_set);
  for (VertexId v : u_set) {
    if (in_w[v]) throw PreconditionError("vertex " + std::to_string(v) + " is in both seed sets");
  }
  auto check_internal = [&](std::span<const VertexId> set, const std::vector<char>& inside) {
    for (VertexId v : set) {
      auto out = g.out(v);
      if (std::none_of(out.begin(), out.end(), [&](VertexId w) { return inside[w]; })) {
        throw PreconditionError("vertex " + std::to_string(v) + " has no out-neighbor inside its seed set");
      }
    }
  };
  check_internal(u_set, in_u);
  check_internal(w_set, in_w);

  // Reverse BFS from u_set that never enters w_set.
  std::vector<char> zero = in_u;
  std::deque<VertexId> queue(u_set.begin(), u_set.end());
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.in(x)) {
      if (zero[y] || in_w[y]) continue;
      zero[y] = 1;
      queue.push_back(y);
    }
  }
  std::vector<std::uint8_t> blocks(g.size());
  for (VertexId v = 0; v < g.size(); ++v) blocks[v] = zero[v] ? 0 : 1;
  return Partition(std::move(blocks));
}

std::vector<Partition> enumerate_friendly(const Digraph& g, std::size_t r, bool include_trivial,
                                          std::size_t cap) {
  check_r(r);
  check_cap(g, cap);
  std::vector<Partition> result;
  if (g.size() == 0) return result;
  std::vector<Mask> masks;
  MaskSolver solver(g, r);
  solver.search(Mask{1}, 0, [&](Mask m) {
    masks.push_back(m);
    return true;
  });
  std::sort(masks.begin(), masks.end());
  for (Mask m : masks) {
    if (m == 0 && !include_trivial) continue;
    result.push_back(Partition::from_mask(g.size(), m));
  }
  return result;
}

std::optional<Partition> can_separate(const Digraph& g, std::span<const VertexId> s, std::size_t r,
                                      std::size_t cap) {
  check_r(r);
  check_cap(g, cap);
  VertexSet set = to_vertex_set({s.begin(), s.end()});
  if (set.size() < 2) throw PreconditionError("separation needs at least two distinct vertices");
  if (set.back() >= g.size()) throw PreconditionError("vertex " + std::to_string(set.back()) + " out of range");

  MaskSolver solver(g, r);
  Mask pinned_zero = Mask{1} << set[0];
  for (std::size_t i = 1; i < set.size(); ++i) {
    std::optional<Mask> hit;
    solver.search(pinned_zero, Mask{1} << set[i], [&](Mask m) {
      hit = m;
      return false;
    });
    if (hit) return Partition::from_mask(g.size(), *hit);
    pinned_zero |= Mask{1} << set[i];
  }
  return std::nullopt;
}

std::vector<std::size_t> SeparationReport::class_of() const {
  std::size_t n = codes.size();
  std::vector<std::size_t> owner(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (VertexId v : classes[c]) owner[v] = c;
  }
  return owner;
}

SeparationReport separation_report(const Digraph& g, std::size_t r, std::size_t cap) {
  SeparationReport report;
  auto all = enumerate_friendly(g, r, true, cap);
  for (auto& p : all) {
    if (p.is_trivial()) {
      report.trivial_friendly = true;
    } else {
      report.partitions.push_back(std::move(p));
    }
  }
  report.partition_count = report.partitions.size();
  report.total_count = report.partition_count + (report.trivial_friendly ? 1 : 0);
  report.codes.assign(g.size(), std::string(report.partition_count, '0'));
  for (std::size_t i = 0; i < report.partition_count; ++i) {
    for (VertexId v = 0; v < g.size(); ++v) {
      report.codes[v][i] = static_cast<char>('0' + report.partitions[i].block(v));
    }
  }
  std::map<std::string, std::size_t> index;
  for (VertexId v = 0; v < g.size(); ++v) {
    auto [it, fresh] = index.emplace(report.codes[v], report.classes.size());
    if (fresh) report.classes.emplace_back();
    report.classes[it->second].push_back(v);
  }
  return report;
}

}  // namespace amity
