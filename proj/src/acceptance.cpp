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

#include "amity/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "amity/cli.hpp"
#include "amity/cycles.hpp"
#include "amity/detail/random.hpp"
#include "amity/errors.hpp"
#include "amity/generators.hpp"
#include "amity/io.hpp"
#include "amity/partition.hpp"
#include "amity/probabilistic.hpp"
#include "amity/reduction.hpp"
#include "amity/scan.hpp"
#include "amity/separation.hpp"
#include "amity/transitive.hpp"

namespace amity {

namespace {

constexpr std::uint64_t kSuiteSeed = 0xa5a5'2026'0001ULL;

class Recorder {
 public:
  Recorder(int id, std::string name) {
    result_.id = id;
    result_.name = std::move(name);
    result_.passed = true;
  }

  void fact(const std::string& key, const std::string& value) { result_.facts.emplace_back(key, value); }
  void fact(const std::string& key, std::uint64_t value) { fact(key, std::to_string(value)); }

  // Records a failure; keeps the first message as the summary.
  void fail(const std::string& why, const Digraph* g = nullptr) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (result_.passed) result_.summary = why;
    result_.passed = false;
    if (g && result_.counterexamples.size() < 5) {
      result_.counterexamples.push_back(serialize_document({"", *g, {{"counterexample", result_.name}, {"detail", why}}}));
    }
  }

  bool ok() const { return result_.passed; }

  CriterionResult finish(const std::string& summary_if_passed) {
    if (result_.passed) result_.summary = summary_if_passed;
    return std::move(result_);
  }

 private:
  CriterionResult result_;
  std::mutex mutex_;
};

Rational power(const Rational& q, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= q;
  return out;
}

std::string ratio(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + "/" + std::to_string(b); }

// Every digraph with out-degree exactly 3 on 4, 5 and 6 vertices.
template <typename Check>
std::uint64_t for_each_cubic(std::size_t threads, Check&& check) {
  std::uint64_t total = 0;
  for (std::size_t n = 4; n <= 6; ++n) {
    OutDegreeProduct family(n, 3);
    for_each_in_family(n, 3, 0, family.count(), threads,
                       [&](std::size_t, std::uint64_t i, const Digraph& g) { check(n, i, g); });
    total += family.count();
  }
  return total;
}

CriterionResult at_least_two_partitions(std::size_t threads) {
  Recorder rec(1, "at_least_two_friendly_partitions_cubic");
  std::atomic<std::uint64_t> minimum{UINT64_MAX};
  std::uint64_t total = for_each_cubic(threads, [&](std::size_t n, std::uint64_t i, const Digraph& g) {
    std::uint64_t count = enumerate_friendly(g, 1, true).size();
    std::uint64_t seen = minimum.load();
    while (count < seen && !minimum.compare_exchange_weak(seen, count)) {
    }
    if (count < 2) rec.fail("n=" + std::to_string(n) + " index " + std::to_string(i) + " has " +
                                std::to_string(count) + " friendly partition(s)",
                            &g);
  });
  rec.fact("digraphs", total);
  rec.fact("min_friendly_partitions", minimum.load());
  return rec.finish(std::to_string(total) + " digraphs, fewest friendly partitions " + std::to_string(minimum.load()));
}

CriterionResult two_disjoint_cycles(std::size_t threads) {
  Recorder rec(2, "two_disjoint_cycles_cubic");
  std::atomic<std::uint64_t> found{0}, on_compressed{0};
  std::uint64_t total = for_each_cubic(threads, [&](std::size_t n, std::uint64_t i, const Digraph& g) {
    auto set = find_disjoint_cycles(g, 2);
    if (!set) {
      rec.fail("n=" + std::to_string(n) + " index " + std::to_string(i) + ": no two disjoint cycles", &g);
      return;
    }
    if (!verify_cycle_set(g, *set) || set->cycles.size() != 2) {
      rec.fail("n=" + std::to_string(n) + " index " + std::to_string(i) + ": cycles fail verification", &g);
      return;
    }
    ++found;
    if (compress(g).graph.size() < n) ++on_compressed;
  });
  rec.fact("digraphs", total);
  rec.fact("found", found.load());
  rec.fact("with_nontrivial_compression", on_compressed.load());
  return rec.finish(ratio(found.load(), total) + " digraphs have verified disjoint cycles, " +
                    std::to_string(on_compressed.load()) + " via a smaller compressed digraph");
}

CriterionResult complete_five_packing() {
  Recorder rec(3, "complete5_cycle_packing");
  Digraph k5 = complete_digraph(5);
  auto three = find_disjoint_cycles(k5, 3);
  auto two = find_disjoint_cycles(k5, 2);
  if (three) rec.fail("three disjoint cycles reported in the complete digraph on 5 vertices", &k5);
  if (!two || !verify_cycle_set(k5, *two)) rec.fail("two disjoint cycles not found in the complete digraph on 5 vertices");
  rec.fact("three_disjoint", three ? "present" : "absent");
  rec.fact("two_disjoint", two ? "present" : "absent");
  return rec.finish("3 disjoint: absent, 2 disjoint: present");
}

CriterionResult negative_controls() {
  Recorder rec(4, "negative_controls");
  std::vector<std::pair<std::string, Digraph>> cases;
  for (std::size_t n = 3; n <= 8; ++n) cases.emplace_back("cycle(" + std::to_string(n) + ")", directed_cycle(n));
  cases.emplace_back("complete(3)", complete_digraph(3));
  for (const auto& [name, g] : cases) {
    auto report = separation_report(g, 1);
    if (report.partition_count != 0) rec.fail(name + " has a nontrivial friendly partition", &g);
    if (report.classes.size() != 1) rec.fail(name + " has a separable pair", &g);
    for (VertexId u = 0; u < g.size(); ++u) {
      for (VertexId v = u + 1; v < g.size(); ++v) {
        if (can_separate(g, std::vector<VertexId>{u, v}, 1)) rec.fail(name + " separates a pair", &g);
      }
    }
  }
  rec.fact("instances", cases.size());
  return rec.finish("7 instances: no nontrivial friendly partition, no separable pair");
}

CriterionResult dominated_cubic() {
  Recorder rec(5, "dominated_cubic_digraphs");
  struct Case {
    std::string name;
    Digraph g;
    std::vector<VertexSet> partitions;
  };
  // Vertex order: v u1 u2 u3 w1 w2 w3 [x].
  std::vector<Case> cases{
      {"same_orientation", dominated_cubic_same_orientation(), {{7, 1, 2, 3}, {7, 1, 4, 6}}},
      {"opposite_orientation", dominated_cubic_opposite_orientation(), {{1, 2, 3}, {0, 5, 2}}},
  };
  std::size_t checked = 0;
  for (const auto& c : cases) {
    const Digraph& g = c.g;
    for (VertexId x = 0; x < g.size(); ++x) {
      if (g.out_degree(x) != 3) rec.fail(c.name + ": out-degree is not 3", &g);
    }
    for (const auto& [u, v] : g.edges()) {
      if (g.has_edge(v, u)) rec.fail(c.name + ": contains a 2-cycle", &g);
      if (!is_dominated(g, u, v)) rec.fail(c.name + ": undominated edge", &g);
    }
    Digraph undirected_closure = Digraph::from_edges(g.size(), [&] {
      auto edges = g.edges();
      for (const auto& [u, v] : g.edges()) edges.emplace_back(v, u);
      return edges;
    }());
    if (strongly_connected_components(undirected_closure).size() != 1) rec.fail(c.name + ": not weakly connected", &g);
    for (const auto& block : c.partitions) {
      Partition p = Partition::from_block_one(g.size(), block);
      if (!is_friendly(g, p, 1)) rec.fail(c.name + ": listed partition " + p.to_string() + " is not friendly", &g);
      ++checked;
    }
  }
  rec.fact("digraphs", cases.size());
  rec.fact("listed_partitions_checked", checked);
  return rec.finish("both digraphs satisfy the four conditions; 4 listed partitions are friendly");
}

CriterionResult separable_vertex_high_degree() {
  Recorder rec(6, "separable_vertex_high_degree");
  const std::size_t instances = 50;
  std::size_t certified = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    std::size_t n = 16 + i % 7;
    Digraph g = random_d_out(n, 15, detail::mix_seed(kSuiteSeed, 600 + i));
    auto found = find_separable_vertex(g);
    if (!found) {
      rec.fail("instance " + std::to_string(i) + ": no separable vertex", &g);
      continue;
    }
    if (!certifies_separable_vertex(g, found->certificate)) {
      rec.fail("instance " + std::to_string(i) + ": certificate does not validate", &g);
      continue;
    }
    ++certified;
  }
  rec.fact("instances", instances);
  rec.fact("certified", certified);
  return rec.finish(ratio(certified, instances) + " random 15-out digraphs (n 16..22) certified");
}

CriterionResult resampling_nine_regular() {
  Recorder rec(7, "resampling_nine_regular");
  const std::size_t trials = 100;
  std::size_t successes = 0;
  std::uint64_t max_rounds_used = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    detail::Rng rng(detail::mix_seed(kSuiteSeed, 700 + i));
    std::size_t n = 50 + detail::uniform_below(rng, 151);
    Digraph g = random_regular(n, 9, rng());
    VertexId v1 = detail::uniform_below(rng, n);
    VertexId v2 = (v1 + 1 + detail::uniform_below(rng, n - 1)) % n;
    ResampleConfig cfg{rng(), 100 * n, 0};
    auto result = lll_separate(g, v1, v2, cfg);
    if (!result.partition) continue;
    if (!is_friendly(g, *result.partition, 1) || !result.partition->separates(v1, v2)) {
      rec.fail("trial " + std::to_string(i) + ": output failed validation", &g);
      continue;
    }
    ++successes;
    max_rounds_used = std::max<std::uint64_t>(max_rounds_used, result.rounds);
  }
  if (successes * 100 < trials * 99) rec.fail("success rate " + ratio(successes, trials) + " below 99/100");
  rec.fact("trials", trials);
  rec.fact("successes", successes);
  rec.fact("max_rounds_used", max_rounds_used);
  return rec.finish(ratio(successes, trials) + " trials separated and validated; most rounds used " +
                    std::to_string(max_rounds_used));
}

CriterionResult small_subdigraph() {
  Recorder rec(8, "small_subdigraph_extraction");
  Digraph g = random_d_out(1000, 10, detail::mix_seed(kSuiteSeed, 800));
  auto sample = extract_small_subdigraph(g, 2, ExtractConfig{detail::mix_seed(kSuiteSeed, 801), 100, false});
  for (std::size_t t = 0; t < sample.induced_min_out_degree.size(); ++t) {
    if (sample.induced_min_out_degree[t] < 2) rec.fail("trial " + std::to_string(t) + ": induced min out-degree below 2", &g);
  }
  std::uint64_t total = 0;
  for (std::size_t s : sample.sizes) total += s;
  Rational mean(total, static_cast<std::uint64_t>(sample.sizes.size()) * g.size());
  if (mean > Rational(46, 100)) rec.fail("mean |Y|/n = " + to_string(mean) + " exceeds 0.46");
  Rational expectation = extraction_expectation(2, 10);
  Rational displayed = Rational(1, 3) + 2 * power(Rational(2, 3), 10) +
                       Rational(10, 3) * power(Rational(2, 3), 9);
  if (expectation != displayed) rec.fail("expectation formula disagrees with the displayed closed form");
  if (!(expectation < Rational(46, 100))) rec.fail("expectation is not below 0.46");
  std::size_t d2 = compute_dr(2);
  if (d2 > 10) rec.fail("d(2) = " + std::to_string(d2) + " exceeds 10");
  rec.fact("trials", sample.sizes.size());
  rec.fact("mean_fraction", to_string(mean));
  rec.fact("expectation", to_string(expectation));
  rec.fact("d_of_2", d2);
  return rec.finish("100 trials, mean |Y|/n = " + to_string(mean) + ", expectation " + to_string(expectation) +
                    ", d(2) = " + std::to_string(d2));
}

CriterionResult partition_count_and_gadgets() {
  Recorder rec(9, "partition_count_and_gadgets");
  // Lower bound on fully separable d=3 instances.
  std::size_t bound_checked = 0, drawn = 0;
  for (std::size_t i = 0; bound_checked < 30 && i < 400; ++i) {
    std::size_t n = 6 + i % 9;
    Digraph g = random_d_out(n, 3, detail::mix_seed(kSuiteSeed, 900 + i));
    ++drawn;
    auto report = separation_report(g, 1);
    if (report.classes.size() != n) continue;
    ++bound_checked;
    // partition_count >= log2(n)  <=>  2^partition_count >= n.
    if (report.partition_count < 64 && (std::uint64_t{1} << report.partition_count) < n) {
      rec.fail("n=" + std::to_string(n) + " with all pairs separable has only " +
                   std::to_string(report.partition_count) + " nontrivial partitions",
               &g);
    }
  }
  if (bound_checked == 0) rec.fail("no fully separable instance drawn");

  // Pendants pointing at an inseparable pair keep the count.
  std::size_t pendant_checked = 0;
  for (std::size_t i = 0; pendant_checked < 20 && i < 400; ++i) {
    Digraph g = random_d_out(8, 2, detail::mix_seed(kSuiteSeed, 1900 + i));
    auto report = separation_report(g, 1);
    auto it = std::find_if(report.classes.begin(), report.classes.end(), [](const VertexSet& c) { return c.size() >= 2; });
    if (it == report.classes.end()) continue;
    std::vector<VertexId> targets{(*it)[0], (*it)[1]};
    auto gadget = attach_pendants(g, targets, g.size() + 5);
    auto extended = separation_report(gadget.extended, 1);
    if (extended.total_count != report.total_count) rec.fail("pendants changed the friendly partition count", &g);
    ++pendant_checked;
  }
  if (pendant_checked == 0) rec.fail("no instance with an inseparable pair drawn");

  // Splitting the attached cycle splits the targets.
  std::size_t cycle_checked = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    std::size_t n = 6 + i % 4;
    Digraph g = random_d_out(n, 3, detail::mix_seed(kSuiteSeed, 2900 + i));
    std::vector<VertexId> targets;
    if (i % 2 == 0) {
      for (VertexId v = 0; v < n; ++v) targets.push_back(v);
    } else {
      targets = {0, static_cast<VertexId>(n / 2)};
    }
    auto gadget = attach_separator_cycle(g, targets, 3);
    for (const auto& p : enumerate_friendly(gadget.extended, 1, false)) {
      bool cycle_split = p.splits(gadget.new_vertices);
      bool target_split = p.splits(targets);
      if (cycle_split && !target_split) rec.fail("a partition splits the attached cycle but not the targets", &g);
    }
    ++cycle_checked;
  }
  rec.fact("separable_instances_checked", bound_checked);
  rec.fact("instances_drawn", drawn);
  rec.fact("pendant_instances", pendant_checked);
  rec.fact("separator_cycle_instances", cycle_checked);
  return rec.finish(std::to_string(bound_checked) + " separable instances meet the log bound; " +
                    std::to_string(pendant_checked) + " pendant and " + std::to_string(cycle_checked) +
                    " separator-cycle gadgets hold");
}

// A random 3-out sink on [0, m) fed by upstream vertices whose only way out
// is one gate: a sink vertex, or an extra vertex pointing into the sink.
Digraph funnel_instance(std::uint64_t seed, bool gate_outside, std::vector<VertexId>& upstream, VertexId& gate) {
  detail::Rng rng(seed);
  std::size_t m = 5 + detail::uniform_below(rng, 4);
  std::size_t k = 3 + detail::uniform_below(rng, 4);
  Digraph sink = random_d_out(m, 3, rng());
  auto adjacency = sink.adjacency();
  std::size_t first = m;
  gate = detail::uniform_below(rng, m);
  if (gate_outside) {
    Digraph pick = random_d_out(m + 1, 3, rng());
    adjacency.emplace_back(pick.out(m).begin(), pick.out(m).end());
    gate = m;
    first = m + 1;
  }
  upstream.clear();
  for (std::size_t i = 0; i < k; ++i) upstream.push_back(first + i);
  Digraph inner = random_d_out(k, 2, rng());
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<VertexId> row{gate};
    for (VertexId w : inner.out(i)) row.push_back(first + w);
    adjacency.push_back(row);
  }
  return Digraph(adjacency);
}

CriterionResult reduction_lifts() {
  Recorder rec(10, "strong_connectivity_reduction");
  const std::size_t layered = 160, funnels = 40;
  std::size_t plans = 0, lifted = 0;
  std::map<std::string, std::size_t> per_case;
  auto run_pair = [&](const Digraph& g, VertexId u, VertexId v) {
    auto plan = reduce_to_strongly_connected(g, u, v);
    ++plans;
    ++per_case[std::string(to_string(plan.kind))];
    std::optional<Partition> p;
    if (!plan.sub) {
      p = lift_reduction(g, plan, std::nullopt);
    } else {
      auto sub = can_separate(plan.sub->graph, std::vector<VertexId>{plan.sub->first, plan.sub->second}, 1);
      if (sub) p = lift_reduction(g, plan, sub);
    }
    if (!p) return;
    if (!is_friendly(g, *p, 1) || !p->separates(u, v)) {
      rec.fail("lifted partition failed for pair " + std::to_string(u) + "," + std::to_string(v) + " (" +
                   std::string(to_string(plan.kind)) + ")",
               &g);
      return;
    }
    ++lifted;
  };

  std::size_t i = 0, accepted = 0;
  while (accepted < layered) {
    std::uint64_t seed = detail::mix_seed(kSuiteSeed, 1000 + i++);
    std::size_t n = 10 + seed % 7;
    std::size_t layers = 2 + seed % 3;
    while (n - (layers - 1) * n / layers <= 3) --layers;
    Digraph g = random_layered(n, 3, layers, seed);
    if (strongly_connected_components(g).size() < 2) continue;
    ++accepted;
    detail::Rng rng(seed);
    for (int k = 0; k < 5; ++k) {
      VertexId u = detail::uniform_below(rng, n);
      VertexId v = (u + 1 + detail::uniform_below(rng, n - 1)) % n;
      run_pair(g, u, v);
    }
  }
  for (std::size_t f = 0; f < funnels; ++f) {
    std::uint64_t seed = detail::mix_seed(kSuiteSeed, 5000 + f);
    std::vector<VertexId> upstream;
    VertexId gate = 0;
    Digraph g = funnel_instance(seed, f % 2 == 1, upstream, gate);
    if (strongly_connected_components(g).size() < 2) rec.fail("funnel instance is strongly connected", &g);
    ++accepted;
    run_pair(g, upstream[0], gate);
    for (std::size_t a = 0; a + 1 < upstream.size(); ++a) run_pair(g, upstream[a], upstream[a + 1]);
  }
  rec.fact("digraphs", accepted);
  rec.fact("plans", plans);
  rec.fact("lifted", lifted);
  for (const auto& [name, count] : per_case) rec.fact("case_" + name, count);
  return rec.finish(std::to_string(lifted) + " of " + std::to_string(plans) + " plans on " +
                    std::to_string(accepted) + " digraphs lifted to verified partitions");
}

CriterionResult circulant_classes() {
  Recorder rec(11, "circulant_class_structure");
  std::size_t instances = 0;
  for (std::size_t n : {5u, 7u, 11u}) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<std::size_t> offsets;
      for (std::size_t s = 1; s < n; ++s) {
        if (mask >> (s - 1) & 1) offsets.push_back(s);
      }
      if (offsets.size() < 3) continue;
      Digraph g = circulant(n, offsets);
      ++instances;
      auto structure = check_class_structure(g);
      if (!structure.holds()) rec.fail("class structure violated on circulant n=" + std::to_string(n), &g);
      auto prime = prime_separability(g);
      if (!prime.all_singletons) rec.fail("non-singleton class on prime circulant n=" + std::to_string(n), &g);
    }
  }
  rec.fact("circulants", instances);
  return rec.finish(std::to_string(instances) + " circulants: singleton classes, structure holds");
}

CriterionResult determinism() {
  Recorder rec(12, "seeded_determinism");
  const std::vector<std::vector<std::string>> commands{
      {"lll-separate", "--graph", "random_regular(60,9)", "--set", "0,7", "--seed", "5"},
      {"lll-separate", "--graph", "random_regular(80,33)", "--set", "1,2", "--method", "chernoff", "--seed", "6"},
      {"extract-subdigraph", "--graph", "random_d_out(300,10)", "--r", "2", "--trials", "20", "--seed", "3"},
      {"scan", "--d", "2", "--n-min", "8", "--n-max", "8", "--samples", "100", "--seed", "4"},
      {"generate", "--kind", "random_d_out", "--params", "12,3", "--seed", "9"},
      {"enumerate", "--graph", "random_d_out(10,3)", "--seed", "2"},
      {"separable-vertex", "--graph", "random_d_out(12,5)", "--seed", "8"},
  };
  for (const auto& args : commands) {
    auto first = run_command(args);
    auto second = run_command(args);
    if (first.exit_code == 2) rec.fail("command " + args[0] + " errored: " + first.out);
    if (first.out != second.out || first.exit_code != second.exit_code) {
      rec.fail("command " + args[0] + " gave different reports on two runs");
    }
  }
  rec.fact("commands", commands.size());
  return rec.finish(std::to_string(commands.size()) + " seeded commands gave byte-identical reports");
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> kCriteria{
      {1, "at_least_two_friendly_partitions_cubic"},
      {2, "two_disjoint_cycles_cubic"},
      {3, "complete5_cycle_packing"},
      {4, "negative_controls"},
      {5, "dominated_cubic_digraphs"},
      {6, "separable_vertex_high_degree"},
      {7, "resampling_nine_regular"},
      {8, "small_subdigraph_extraction"},
      {9, "partition_count_and_gadgets"},
      {10, "strong_connectivity_reduction"},
      {11, "circulant_class_structure"},
      {12, "seeded_determinism"},
  };
  return kCriteria;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (const auto& info : acceptance_criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), info.id) == options.only.end()) {
      continue;
    }
    CriterionResult result;
    try {
      switch (info.id) {
        case 1: result = at_least_two_partitions(options.threads); break;
        case 2: result = two_disjoint_cycles(options.threads); break;
        case 3: result = complete_five_packing(); break;
        case 4: result = negative_controls(); break;
        case 5: result = dominated_cubic(); break;
        case 6: result = separable_vertex_high_degree(); break;
        case 7: result = resampling_nine_regular(); break;
        case 8: result = small_subdigraph(); break;
        case 9: result = partition_count_and_gadgets(); break;
        case 10: result = reduction_lifts(); break;
        case 11: result = circulant_classes(); break;
        case 12: result = determinism(); break;
      }
    } catch (const std::exception& e) {
      result = CriterionResult{info.id, info.name, false, std::string("exception: ") + e.what(), {}, {}};
    }
    if (options.on_result) options.on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

std::string format_result_line(const CriterionResult& result) {
  return std::string(result.passed ? "[PASS] " : "[FAIL] ") + std::to_string(result.id) + " " + result.name + ": " +
         result.summary;
}

}  // namespace amity
