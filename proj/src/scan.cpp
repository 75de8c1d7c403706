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

#include "amity/scan.hpp"

#include <algorithm>
#include <thread>

#include "amity/detail/random.hpp"
#include "amity/errors.hpp"
#include "amity/generators.hpp"
#include "amity/io.hpp"

namespace amity {

std::string_view to_string(ScanMode mode) {
  return mode == ScanMode::kPairSeparability ? "pair" : "count";
}

std::optional<ScanMode> parse_scan_mode(std::string_view text) {
  if (text == "pair" || text == "pair-separability") return ScanMode::kPairSeparability;
  if (text == "count" || text == "partition-count") return ScanMode::kPartitionCount;
  return std::nullopt;
}

std::optional<std::uint64_t> out_degree_family_size(std::size_t n, std::size_t d) {
  if (n == 0 || d > n - 1) return std::nullopt;
  std::uint64_t choices = 1;
  for (std::size_t i = 0; i < d; ++i) {
    choices = choices * (n - 1 - i) / (i + 1);
  }
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (total > UINT64_MAX / choices) return std::nullopt;
    total *= choices;
  }
  return total;
}

void for_each_in_family(std::size_t n, std::size_t d, std::uint64_t begin, std::uint64_t end, std::size_t threads,
                        const std::function<void(std::size_t, std::uint64_t, const Digraph&)>& visit) {
  OutDegreeProduct family(n, d);
  end = std::min(end, family.count());
  if (begin >= end) return;
  threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, end - begin));
  auto run = [&](std::size_t worker) {
    const std::uint64_t span = end - begin;
    const std::uint64_t lo = begin + span * worker / threads;
    const std::uint64_t hi = begin + span * (worker + 1) / threads;
    for (std::uint64_t i = lo; i < hi; ++i) visit(worker, i, family.at(i));
  };
  if (threads == 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
}

namespace {

std::optional<ScanHit> examine(const Digraph& g, const ScanConfig& cfg) {
  auto report = separation_report(g, cfg.r, cfg.cap);
  ScanHit hit;
  hit.n = g.size();
  hit.total_count = report.total_count;
  const VertexSet* largest = &report.classes.front();
  for (const auto& c : report.classes) {
    if (c.size() > largest->size()) largest = &c;
  }
  if (cfg.mode == ScanMode::kPairSeparability) {
    if (largest->size() < cfg.s) return std::nullopt;
    hit.inseparable.assign(largest->begin(), largest->begin() + static_cast<std::ptrdiff_t>(cfg.s));
    hit.reverified = !can_separate(g, hit.inseparable, cfg.r, cfg.cap).has_value();
  } else {
    if (report.total_count >= cfg.count_threshold) return std::nullopt;
    hit.inseparable = *largest;
    hit.reverified = enumerate_friendly(g, cfg.r, true, cfg.cap).size() == report.total_count;
  }
  hit.graph = g;
  return hit;
}

void encode(ScanHit& hit, const ScanConfig& cfg) {
  GraphDocument doc{"scan-hit",
                    hit.graph,
                    {{"mode", std::string(to_string(cfg.mode))},
                     {"d", std::to_string(cfg.d)},
                     {hit.exhaustive ? "index" : "seed", std::to_string(hit.index)}}};
  hit.encoding = serialize_document(doc);
}

}  // namespace

ScanReport scan_for_counterexamples(const ScanConfig& cfg) {
  if (cfg.n_min > cfg.n_max) throw PreconditionError("n_min exceeds n_max");
  if (cfg.n_max > std::min(cfg.cap, kMaxExhaustiveCap)) {
    throw CapExceededError(cfg.n_max, std::min(cfg.cap, kMaxExhaustiveCap));
  }
  if (cfg.n_min <= cfg.d) throw PreconditionError("need n > d");
  if (cfg.mode == ScanMode::kPairSeparability && cfg.s < 2) throw PreconditionError("s must be >= 2");

  ScanReport report;
  const std::size_t threads = std::max<std::size_t>(1, cfg.threads);
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    ScanLayer layer;
    layer.n = n;
    auto size = out_degree_family_size(n, cfg.d);
    layer.exhaustive = size && *size <= cfg.exhaustive_limit;

    std::vector<std::vector<ScanHit>> found(threads);
    std::vector<std::uint64_t> counts(threads, 0);
    if (layer.exhaustive) {
      layer.examined = *size;
      for_each_in_family(n, cfg.d, 0, *size, threads, [&](std::size_t w, std::uint64_t i, const Digraph& g) {
        if (auto hit = examine(g, cfg)) {
          hit->exhaustive = true;
          hit->index = i;
          ++counts[w];
          if (found[w].size() < cfg.max_hits) found[w].push_back(std::move(*hit));
        }
      });
    } else {
      layer.examined = cfg.samples;
      auto run = [&](std::size_t w) {
        for (std::size_t i = cfg.samples * w / threads; i < cfg.samples * (w + 1) / threads; ++i) {
          std::uint64_t seed = detail::mix_seed(cfg.seed, (static_cast<std::uint64_t>(n) << 32) | i);
          if (auto hit = examine(random_d_out(n, cfg.d, seed), cfg)) {
            hit->index = seed;
            ++counts[w];
            if (found[w].size() < cfg.max_hits) found[w].push_back(std::move(*hit));
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(run, w);
      run(0);
      for (auto& t : pool) t.join();
    }
    // Shards are contiguous and in order, so concatenation keeps index order.
    for (std::size_t w = 0; w < threads; ++w) {
      layer.hits += counts[w];
      for (auto& hit : found[w]) {
        if (report.hits.size() < cfg.max_hits) {
          encode(hit, cfg);
          report.hits.push_back(std::move(hit));
        }
      }
    }
    report.total_hits += layer.hits;
    report.layers.push_back(layer);
  }
  return report;
}

}  // namespace amity
