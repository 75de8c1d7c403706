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

#include "amity/probabilistic.hpp"

#include <algorithm>
#include <cmath>

#include "amity/detail/random.hpp"
#include "amity/errors.hpp"
#include "amity/partition.hpp"

namespace amity {

ResampleResult resample_separate(const Digraph& g, VertexId v1, VertexId v2, const ResampleConfig& cfg,
                                 std::size_t r) {
  if (v1 >= g.size() || v2 >= g.size()) throw PreconditionError("vertex out of range");
  if (v1 == v2) throw PreconditionError("v1 and v2 must differ");
  if (cfg.max_rounds < 1) throw PreconditionError("max_rounds must be >= 1");
  if (r < 1) throw PreconditionError("r must be >= 1");
  const std::size_t n = g.size();
  const std::size_t d = min_out_degree(g);
  if (d < r) throw PreconditionError("min out-degree is below the target r");

  ResampleResult result;
  result.d = d;
  result.r = r;
  detail::Rng rng(cfg.seed);
  std::vector<std::uint8_t> block(n);
  for (VertexId x = 0; x < n; ++x) block[x] = detail::coin(rng) ? 1 : 0;
  block[v1] = 0;
  block[v2] = 1;

  auto violated = [&](VertexId w) {
    auto out = g.out(w);
    std::size_t same = 0;
    for (std::size_t i = 0; i < d; ++i) same += block[out[i]] == block[w];
    return same < r;
  };
  auto redraw = [&](VertexId x) {
    if (x != v1 && x != v2) block[x] = detail::coin(rng) ? 1 : 0;
  };

  while (true) {
    VertexId bad = n;
    for (VertexId w = 0; w < n; ++w) {
      if (violated(w)) {
        bad = w;
        break;
      }
    }
    if (bad == n) break;
    if (result.rounds == cfg.max_rounds) return result;
    ++result.rounds;
    redraw(bad);
    auto out = g.out(bad);
    for (std::size_t i = 0; i < d; ++i) redraw(out[i]);
  }

  Partition p(std::move(block));
  if (!is_friendly(g, p, r) || !p.separates(v1, v2)) throw Error("internal", "resampled partition failed validation");
  result.partition = std::move(p);
  return result;
}

ResampleResult lll_separate(const Digraph& g, VertexId v1, VertexId v2, const ResampleConfig& cfg) {
  return resample_separate(g, v1, v2, cfg, 1);
}

std::size_t chernoff_target(std::size_t d) { return d == 0 ? 0 : (d - 1) / 4 + 1; }

ResampleResult chernoff_r_separate(const Digraph& g, VertexId v1, VertexId v2, const ResampleConfig& cfg) {
  std::size_t r = cfg.r != 0 ? cfg.r : chernoff_target(g.size() == 0 ? 0 : min_out_degree(g));
  return resample_separate(g, v1, v2, cfg, r);
}

double lll_degree_bound(std::size_t d) {
  const double e = std::exp(1.0);
  return (std::ldexp(1.0, static_cast<int>(d) - 1) - e) / (e * static_cast<double>(d));
}

double chernoff_degree_bound(std::size_t d) {
  return std::exp((static_cast<double>(d) - 1.0) / 16.0 - 1.0) / static_cast<double>(d);
}

double SubdigraphSample::mean_fraction(std::size_t n) const {
  if (sizes.empty() || n == 0) return 0.0;
  double total = 0.0;
  for (std::size_t s : sizes) total += static_cast<double>(s);
  return total / static_cast<double>(sizes.size()) / static_cast<double>(n);
}

SubdigraphSample extract_small_subdigraph(const Digraph& g, std::size_t r, const ExtractConfig& cfg) {
  const std::size_t n = g.size();
  if (n == 0) throw PreconditionError("empty digraph");
  if (r < 1) throw PreconditionError("r must be >= 1");
  const std::size_t needed = compute_dr(r);
  if (min_out_degree(g) < needed) {
    throw PreconditionError("min out-degree " + std::to_string(min_out_degree(g)) + " is below d(" +
                            std::to_string(r) + ") = " + std::to_string(needed));
  }

  SubdigraphSample sample;
  detail::Rng rng(cfg.seed);
  std::vector<char> in_x(n), in_y(n);
  for (std::size_t trial = 0; trial < cfg.max_trials; ++trial) {
    for (VertexId x = 0; x < n; ++x) in_x[x] = detail::uniform_below(rng, 3) == 0;
    in_y = in_x;
    for (VertexId w = 0; w < n; ++w) {
      auto out = g.out(w);
      std::size_t k = std::count_if(out.begin(), out.end(), [&](VertexId y) { return in_x[y] != 0; });
      for (std::size_t i = 0; i < out.size() && k < r; ++i) {
        if (!in_x[out[i]]) {
          in_y[out[i]] = 1;
          ++k;
        }
      }
    }
    VertexSet y;
    for (VertexId x = 0; x < n; ++x) {
      if (in_y[x]) y.push_back(x);
    }
    ++sample.trial_count;
    sample.sizes.push_back(y.size());
    sample.induced_min_out_degree.push_back(min_out_degree(induced_subgraph(g, y).graph));
    bool good = 2 * y.size() < n;
    if (good && !sample.success) {
      sample.success = true;
      sample.y_set = y;
    } else if (!sample.success && (sample.y_set.empty() || y.size() < sample.y_set.size())) {
      sample.y_set = y;
    }
    if (sample.success && cfg.stop_on_success) break;
  }
  return sample;
}

Rational extraction_expectation(std::size_t r, std::size_t d) {
  using boost::multiprecision::cpp_int;
  Rational total(1, 3);
  cpp_int binom = 1;
  for (std::size_t k = 0; k <= r && k <= d; ++k) {
    if (k > 0) binom = binom * (d - k + 1) / k;
    cpp_int num = binom * cpp_int(r - k) * boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(d - k));
    cpp_int den = boost::multiprecision::pow(cpp_int(3), static_cast<unsigned>(d));
    total += Rational(num, den);
  }
  return total;
}

std::size_t compute_dr(std::size_t r) {
  if (r < 1) throw PreconditionError("r must be >= 1");
  const Rational half(1, 2);
  for (std::size_t d = r;; ++d) {
    if (extraction_expectation(r, d) < half) return d;
  }
}

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace amity
