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

#include "amity/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "amity/acceptance.hpp"
#include "amity/cycles.hpp"
#include "amity/errors.hpp"
#include "amity/io.hpp"
#include "amity/partition.hpp"
#include "amity/probabilistic.hpp"
#include "amity/reduction.hpp"
#include "amity/scan.hpp"
#include "amity/separation.hpp"
#include "amity/transitive.hpp"

#ifndef AMITY_VERSION
#define AMITY_VERSION "0.0.0"
#endif

namespace amity {

namespace {

using json = nlohmann::json;

struct Options {
  std::string graph;
  std::string partition;
  std::string set;
  std::size_t r = 1;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> max_rounds;
  std::size_t trials = 100;
  bool nontrivial = false;
  std::size_t k = 0;
  std::string method;
  std::string kind;
  std::string params;
  std::size_t threads = 1;
  std::vector<int> only;
  // scan
  std::size_t d = 3;
  std::size_t n_min = 4;
  std::size_t n_max = 5;
  std::string mode = "pair";
  std::size_t s = 2;
  std::size_t threshold = 2;
  std::uint64_t samples = 1000;
  std::uint64_t exhaustive_limit = 2'000'000;
  std::size_t max_hits = 50;
};

// What a command handler hands back besides its results object.
struct Outcome {
  json results;
  bool negative = false;
  std::optional<std::string> input_digest;
  bool seeded = false;
};

std::size_t resolve_cap(const Options& o) {
  std::size_t cap = kDefaultExhaustiveCap;
  if (const char* env = std::getenv("AMITY_CAP"); env && *env && !o.cap) {
    std::string text(env);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 3) {
      throw PreconditionError("AMITY_CAP must be a positive integer, got \"" + text + "\"");
    }
    cap = std::stoul(text);
  }
  if (o.cap) cap = *o.cap;
  if (cap == 0 || cap > kMaxExhaustiveCap) {
    throw PreconditionError("cap must be in [1, " + std::to_string(kMaxExhaustiveCap) + "], got " + std::to_string(cap));
  }
  return cap;
}

Digraph require_graph(const Options& o, Outcome& out) {
  if (o.graph.empty()) throw PreconditionError("--graph is required");
  Digraph g = load_graph(o.graph, o.seed);
  out.input_digest = digest(g);
  return g;
}

std::vector<VertexId> require_set(const Options& o, const Digraph& g, std::size_t min_size) {
  if (o.set.empty()) throw PreconditionError("--set is required");
  auto s = parse_vertex_list(o.set);
  for (VertexId v : s) {
    if (v >= g.size()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  if (to_vertex_set(s).size() != s.size()) throw PreconditionError("--set has repeated vertices");
  if (s.size() < min_size) throw PreconditionError("--set needs at least " + std::to_string(min_size) + " vertices");
  return s;
}

Partition load_partition(const std::string& source, std::size_t n) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return parse_partition(read_file(source), n);
  // Inline form: a string of 0/1 characters, one per vertex.
  std::string text;
  for (char c : source) {
    text += c;
    text += '\n';
  }
  return parse_partition(text, n);
}

json partition_json(const Partition& p) { return p.to_string(); }

json classes_json(const std::vector<VertexSet>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(c);
  return out;
}

json cycle_set_json(const CycleSet& set) {
  return {{"cycles", set.cycles},
          {"relation", set.relation == CycleRelation::kAllDisjoint ? "all_disjoint" : "first_two_intersect_third_disjoint"}};
}

json certificate_json(const SeparationCertificate& c) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses) witnesses.push_back({{"others", w.others}, {"partition", partition_json(w.partition)}});
  return {{"subject", c.subject}, {"witnesses", witnesses}};
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// --- commands ----------------------------------------------------------------

Outcome cmd_check(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  if (o.partition.empty()) throw PreconditionError("--partition is required");
  Partition p = load_partition(o.partition, g.size());
  json unhappy = json::array();
  for (VertexId v = 0; v < g.size(); ++v) {
    std::size_t same = 0;
    for (VertexId w : g.out(v)) same += p.block(w) == p.block(v);
    if (same < o.r) unhappy.push_back(v);
  }
  bool friendly = is_friendly(g, p, o.r);
  out.results = {{"friendly", friendly}, {"r", o.r}, {"partition", partition_json(p)}, {"violations", unhappy}};
  if (!o.set.empty()) {
    auto s = require_set(o, g, 2);
    out.results["splits_set"] = p.splits(s);
  }
  out.negative = !friendly;
  return out;
}

Outcome cmd_enumerate(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  auto report = separation_report(g, o.r, resolve_cap(o));
  json partitions = json::array();
  if (!o.nontrivial && report.trivial_friendly) partitions.push_back(partition_json(Partition::trivial(g.size())));
  for (const auto& p : report.partitions) partitions.push_back(partition_json(p));
  out.results = {{"count", partitions.size()},
                 {"nontrivial_count", report.partition_count},
                 {"total_count", report.total_count},
                 {"trivial_friendly", report.trivial_friendly},
                 {"partitions", partitions},
                 {"classes", classes_json(report.classes)},
                 {"codes", report.codes},
                 {"r", o.r}};
  out.negative = partitions.empty();
  return out;
}

Outcome cmd_separate(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  auto s = require_set(o, g, 2);
  std::size_t cap = resolve_cap(o);
  std::string method = o.method.empty() ? "exhaustive" : o.method;
  std::optional<Partition> p;
  if (method == "exhaustive") {
    p = can_separate(g, s, o.r, cap);
  } else if (method == "reduction" || method == "deletion") {
    if (s.size() != 2 || o.r != 1) throw PreconditionError("method " + method + " separates one pair with r = 1");
    p = method == "reduction" ? separate_via_reduction(g, s[0], s[1], cap) : separate_pair_via_deletion(g, s[0], s[1], cap);
  } else {
    throw PreconditionError("unknown method \"" + method + "\" (exhaustive, reduction, deletion)");
  }
  out.results = {{"result", p ? "separated" : "inseparable"}, {"set", s}, {"r", o.r}, {"method", method}};
  out.results["partition"] = p ? partition_json(*p) : json(nullptr);
  out.negative = !p;
  return out;
}

Outcome cmd_separable_vertex(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  std::size_t cap = resolve_cap(o);
  std::size_t k = o.k == 0 ? 1 : o.k;
  auto found = find_k_separable_vertices(g, k, cap);
  json vertices = json::array();
  for (const auto& sv : found.found) {
    vertices.push_back({{"vertex", sv.vertex},
                        {"certificate", certificate_json(sv.certificate)},
                        {"verified", certifies_separable_vertex(g, sv.certificate)}});
  }
  out.results = {{"requested", k},
                 {"complete", found.complete},
                 {"separable_vertices", vertices},
                 {"min_out_degree_per_step", found.min_out_degree_per_step}};
  out.negative = !found.complete;
  return out;
}

Outcome cmd_compress(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  auto c = compress(g);
  json merges = json::array();
  for (const auto& m : c.trace.merges) merges.push_back({{"deleted", m.deleted}, {"absorbed_into", m.absorbed_into}});
  out.results = {{"n", g.size()},
                 {"compressed_n", c.graph.size()},
                 {"compressed", serialize_edge_list(c.graph)},
                 {"compressed_digest", digest(c.graph)},
                 {"merges", merges},
                 {"final_map", c.trace.final_map},
                 {"representative", c.trace.representative},
                 {"input_was_compressed", is_compressed(g)}};
  return out;
}

Outcome cmd_cycles(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  std::string method = o.method.empty() ? "disjoint" : o.method;
  std::optional<CycleSet> set;
  std::size_t k = o.k == 0 ? 2 : o.k;
  if (method == "disjoint") {
    set = find_disjoint_cycles(g, k);
  } else if (method == "intersecting") {
    set = find_two_intersecting_cycles(g);
  } else if (method == "intersecting-plus-disjoint") {
    set = find_intersecting_pair_plus_disjoint(g);
  } else {
    throw PreconditionError("unknown method \"" + method + "\" (disjoint, intersecting, intersecting-plus-disjoint)");
  }
  out.results = {{"method", method}, {"found", set.has_value()}};
  if (method == "disjoint") out.results["k"] = k;
  if (set) {
    out.results["cycle_set"] = cycle_set_json(*set);
    out.results["verified"] = verify_cycle_set(g, *set);
  }
  out.negative = !set;
  return out;
}

Outcome cmd_reduce_scc(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  auto s = require_set(o, g, 2);
  if (s.size() != 2) throw PreconditionError("--set must name exactly two vertices");
  std::size_t cap = resolve_cap(o);
  auto plan = reduce_to_strongly_connected(g, s[0], s[1]);
  json results = {{"case", std::string(to_string(plan.kind))}, {"pair", s}, {"sinks", plan.sinks}};
  std::optional<Partition> lifted;
  if (plan.sub) {
    results["sub_n"] = plan.sub->graph.size();
    results["sub_to_original"] = plan.sub->to_original;
    results["sub_pair"] = {plan.sub->first, plan.sub->second};
    std::vector<VertexId> pair{plan.sub->first, plan.sub->second};
    auto sub = can_separate(plan.sub->graph, pair, 1, cap);
    results["sub_result"] = sub ? "separated" : "inseparable";
    if (sub) lifted = lift_reduction(g, plan, sub);
  } else {
    lifted = lift_reduction(g, plan, std::nullopt);
  }
  if (plan.cut_vertex) {
    results["cut_vertex"] = *plan.cut_vertex;
    results["cut_path"] = plan.cut_path;
  }
  results["partition"] = lifted ? partition_json(*lifted) : json(nullptr);
  if (lifted) results["verified"] = is_friendly(g, *lifted, 1) && lifted->separates(s[0], s[1]);
  out.results = results;
  out.negative = !lifted;
  return out;
}

Outcome cmd_lll_separate(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  out.seeded = true;
  auto s = require_set(o, g, 2);
  if (s.size() != 2) throw PreconditionError("--set must name exactly two vertices");
  std::string method = o.method.empty() ? "lll" : o.method;
  ResampleConfig cfg;
  cfg.seed = o.seed;
  cfg.max_rounds = o.max_rounds.value_or(100 * std::max<std::size_t>(g.size(), 1));
  ResampleResult result;
  if (method == "lll") {
    result = lll_separate(g, s[0], s[1], cfg);
  } else if (method == "chernoff") {
    cfg.r = o.r == 1 ? 0 : o.r;
    result = chernoff_r_separate(g, s[0], s[1], cfg);
  } else {
    throw PreconditionError("unknown method \"" + method + "\" (lll, chernoff)");
  }
  std::size_t d = result.d;
  out.results = {{"method", method},
                 {"success", result.partition.has_value()},
                 {"rounds", result.rounds},
                 {"max_rounds", cfg.max_rounds},
                 {"d", d},
                 {"r", result.r},
                 {"max_in_degree", max_in_degree(g)},
                 {"in_degree_bound", format_double(method == "lll" ? lll_degree_bound(d) : chernoff_degree_bound(d))}};
  out.results["partition"] = result.partition ? partition_json(*result.partition) : json(nullptr);
  out.negative = !result.partition;
  return out;
}

Outcome cmd_extract(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  out.seeded = true;
  ExtractConfig cfg{o.seed, o.trials, false};
  auto sample = extract_small_subdigraph(g, o.r, cfg);
  std::uint64_t total = 0;
  for (std::size_t sz : sample.sizes) total += sz;
  Rational mean = sample.sizes.empty() ? Rational(0)
                                       : Rational(total, static_cast<std::uint64_t>(sample.sizes.size()) * g.size());
  std::size_t d = min_out_degree(g);
  out.results = {{"r", o.r},
                 {"trials", sample.trial_count},
                 {"success", sample.success},
                 {"y_size", sample.y_set.size()},
                 {"y_set", sample.y_set},
                 {"sizes", sample.sizes},
                 {"induced_min_out_degree", sample.induced_min_out_degree},
                 {"mean_fraction", to_string(mean)},
                 {"expectation_bound", to_string(extraction_expectation(o.r, d))},
                 {"d", d},
                 {"d_r", compute_dr(o.r)}};
  out.negative = !sample.success;
  return out;
}

Outcome cmd_transitive(const Options& o) {
  Outcome out;
  Digraph g = require_graph(o, out);
  std::size_t cap = resolve_cap(o);
  bool transitive = is_vertex_transitive(g, cap);
  json results = {{"transitive", transitive}, {"n", g.size()}, {"min_out_degree", min_out_degree(g)}};
  if (g.size() <= cap) {
    auto autos = automorphisms(g, cap);
    results["automorphism_count"] = autos.permutations.size();
    results["automorphisms_truncated"] = autos.truncated;
  }
  bool holds = true;
  if (transitive && min_out_degree(g) >= 3) {
    auto verdict = check_class_structure(g, cap);
    results["classes"] = classes_json(verdict.classes);
    results["classes_independent"] = verdict.classes_independent;
    results["min_class_spread"] = verdict.min_class_spread;
    results["spread_at_least_three"] = verdict.spread_at_least_three;
    results["equal_class_sizes"] = verdict.equal_class_sizes;
    results["class_structure_holds"] = verdict.holds();
    if (!verdict.holds()) results["counterexample"] = verdict.counterexample;
    holds = verdict.holds();
    if (is_prime(g.size())) {
      auto prime = prime_separability(g, cap);
      results["prime_all_singletons"] = prime.all_singletons;
      if (!prime.all_singletons) results["prime_counterexample"] = prime.counterexample;
      holds = holds && prime.all_singletons;
    }
  } else {
    results["classes"] = classes_json(separation_report(g, 1, cap).classes);
  }
  out.results = results;
  out.negative = !transitive || !holds;
  return out;
}

Outcome cmd_scan(const Options& o) {
  Outcome out;
  out.seeded = true;
  ScanConfig cfg;
  cfg.d = o.d;
  cfg.r = o.r;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  auto mode = parse_scan_mode(o.mode);
  if (!mode) throw PreconditionError("unknown scan mode \"" + o.mode + "\" (pair, count)");
  cfg.mode = *mode;
  cfg.s = o.s;
  cfg.count_threshold = o.threshold;
  cfg.seed = o.seed;
  cfg.exhaustive_limit = o.exhaustive_limit;
  cfg.samples = o.samples;
  cfg.max_hits = o.max_hits;
  cfg.threads = std::max<std::size_t>(o.threads, 1);
  cfg.cap = resolve_cap(o);
  auto report = scan_for_counterexamples(cfg);
  json layers = json::array();
  for (const auto& l : report.layers) {
    layers.push_back({{"n", l.n}, {"exhaustive", l.exhaustive}, {"examined", l.examined}, {"hits", l.hits}});
  }
  json hits = json::array();
  for (const auto& h : report.hits) {
    hits.push_back({{"n", h.n},
                    {"exhaustive", h.exhaustive},
                    {"index", h.index},
                    {"total_count", h.total_count},
                    {"inseparable", h.inseparable},
                    {"reverified", h.reverified},
                    {"encoding", h.encoding}});
  }
  out.results = {{"mode", std::string(to_string(cfg.mode))},
                 {"d", cfg.d},
                 {"r", cfg.r},
                 {"layers", layers},
                 {"hits", hits},
                 {"total_hits", report.total_hits}};
  out.negative = report.total_hits > 0;
  return out;
}

Outcome cmd_generate(const Options& o) {
  Outcome out;
  out.seeded = true;
  if (o.kind.empty()) throw PreconditionError("--kind is required");
  std::string spec = o.params.empty() ? o.kind : o.kind + "(" + o.params + ")";
  Digraph g = generate(spec, o.seed);
  out.input_digest = digest(g);
  out.results = {{"spec", spec}, {"n", g.size()}, {"m", g.edge_count()}, {"edge_list", serialize_edge_list(g)}};
  return out;
}

Outcome cmd_verify(const Options& o) {
  Outcome out;
  AcceptanceOptions opts;
  opts.only = o.only;
  opts.threads = std::max<std::size_t>(o.threads, 1);
  for (int id : opts.only) {
    if (id < 1 || id > static_cast<int>(acceptance_criteria().size())) {
      throw PreconditionError("no criterion " + std::to_string(id));
    }
  }
  json criteria = json::array();
  bool all = true;
  for (const auto& r : run_acceptance(opts)) {
    json facts = json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"summary", r.summary},
                        {"facts", facts},
                        {"counterexamples", r.counterexamples}});
    all = all && r.passed;
  }
  out.results = {{"all_passed", all}, {"criteria", criteria}};
  out.negative = !all;
  return out;
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

json error_report(const std::string& command, const std::string& code, const std::string& message) {
  return {{"command", command.empty() ? json(nullptr) : json(command)},
          {"error", {{"code", code}, {"message", message}}},
          {"version", AMITY_VERSION}};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Friendly partitions of digraphs", "amity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", AMITY_VERSION);

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Edge-list or DOT file, or a generator spec");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Random seed"); };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "Exhaustive vertex cap (overrides AMITY_CAP)"); };
  auto add_r = [&](CLI::App* sub) { sub->add_option("--r", o.r, "Friendliness target")->check(CLI::PositiveNumber); };

  std::map<std::string, Outcome (*)(const Options&)> handlers;
  auto add = [&](const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
    handlers[name] = fn;
    return app.add_subcommand(name, help);
  };

  auto* check = add("check", "Check whether a partition is r-friendly", cmd_check);
  add_graph(check);
  add_seed(check);
  add_r(check);
  check->add_option("--partition", o.partition, "Partition file or inline 0/1 string");
  check->add_option("--set", o.set, "Also report whether the partition splits these vertices");

  auto* enumerate = add("enumerate", "List every r-friendly partition", cmd_enumerate);
  add_graph(enumerate);
  add_seed(enumerate);
  add_r(enumerate);
  add_cap(enumerate);
  enumerate->add_flag("--nontrivial", o.nontrivial, "Omit the trivial partition");

  auto* separate = add("separate", "Find a friendly partition splitting a vertex set", cmd_separate);
  add_graph(separate);
  add_seed(separate);
  add_r(separate);
  add_cap(separate);
  separate->add_option("--set", o.set, "Comma-separated vertices");
  separate->add_option("--method", o.method, "exhaustive, reduction or deletion");

  auto* sepv = add("separable-vertex", "Find vertices separable from all others", cmd_separable_vertex);
  add_graph(sepv);
  add_seed(sepv);
  add_cap(sepv);
  sepv->add_option("--k", o.k, "Number of separable vertices to find");

  auto* comp = add("compress", "Contract undominated edges", cmd_compress);
  add_graph(comp);
  add_seed(comp);

  auto* cyc = add("cycles", "Find disjoint or intersecting cycles", cmd_cycles);
  add_graph(cyc);
  add_seed(cyc);
  cyc->add_option("--k", o.k, "Number of disjoint cycles");
  cyc->add_option("--method", o.method, "disjoint, intersecting or intersecting-plus-disjoint");

  auto* red = add("reduce-scc", "Reduce pair separation to a strongly connected digraph", cmd_reduce_scc);
  add_graph(red);
  add_seed(red);
  add_cap(red);
  red->add_option("--set", o.set, "The pair u,v");

  auto* lll = add("lll-separate", "Separate a pair by resampling", cmd_lll_separate);
  add_graph(lll);
  add_seed(lll);
  add_r(lll);
  lll->add_option("--set", o.set, "The pair v1,v2");
  lll->add_option("--max-rounds", o.max_rounds, "Resampling budget (default 100 n)");
  lll->add_option("--method", o.method, "lll or chernoff");

  auto* ext = add("extract-subdigraph", "Sample a small subdigraph of min out-degree r", cmd_extract);
  add_graph(ext);
  add_seed(ext);
  add_r(ext);
  ext->add_option("--trials", o.trials, "Number of samples");

  auto* tra = add("transitive-analyze", "Inseparability classes of a vertex-transitive digraph", cmd_transitive);
  add_graph(tra);
  add_seed(tra);
  add_cap(tra);

  auto* scan = add("scan", "Search small digraphs for inseparable sets or few partitions", cmd_scan);
  add_seed(scan);
  add_cap(scan);
  add_r(scan);
  scan->add_option("--d", o.d, "Out-degree");
  scan->add_option("--n-min", o.n_min, "Smallest n");
  scan->add_option("--n-max", o.n_max, "Largest n");
  scan->add_option("--mode", o.mode, "pair or count");
  scan->add_option("--s", o.s, "Hit when a class has at least s vertices");
  scan->add_option("--threshold", o.threshold, "Hit when fewer partitions than this");
  scan->add_option("--samples", o.samples, "Digraphs drawn per n when sampling");
  scan->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest family walked exhaustively");
  scan->add_option("--max-hits", o.max_hits, "Hits kept in the report");
  scan->add_option("--threads", o.threads, "Worker threads");

  auto* gen = add("generate", "Build a named or random digraph", cmd_generate);
  add_seed(gen);
  gen->add_option("--kind", o.kind, "Generator kind");
  gen->add_option("--params", o.params, "Comma-separated parameters");

  auto* ver = add("verify-theorems", "Run the acceptance suite", cmd_verify);
  ver->add_option("--only", o.only, "Criterion ids")->delimiter(',');
  ver->add_option("--threads", o.threads, "Worker threads");

  CommandResult result;
  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    result.out = subs.empty() ? app.help() : subs.front()->help();
    return result;
  } catch (const CLI::CallForVersion&) {
    result.out = std::string(AMITY_VERSION) + "\n";
    return result;
  } catch (const CLI::ParseError& e) {
    auto subs = app.get_subcommands();
    if (!subs.empty()) command = subs.front()->get_name();
    result.exit_code = 2;
    result.out = render(error_report(command, "usage", e.what()));
    result.err = std::string(e.what()) + "\n";
    return result;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    Outcome outcome = handlers.at(command)(o);
    json report = {{"command", command}, {"results", outcome.results}, {"version", AMITY_VERSION}};
    report["input_digest"] = outcome.input_digest ? json(*outcome.input_digest) : json(nullptr);
    report["seed"] = outcome.seeded ? json(o.seed) : json(nullptr);
    result.out = render(report);
    result.exit_code = outcome.negative ? 1 : 0;
  } catch (const Error& e) {
    result.exit_code = 2;
    result.out = render(error_report(command, e.code(), e.what()));
    result.err = e.code() + ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.out = render(error_report(command, "internal", e.what()));
    result.err = std::string("internal: ") + e.what() + "\n";
  }
  return result;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool verify = !args.empty() && args.front() == "verify-theorems";
  CommandResult result = run_command(args);
  if (verify && result.exit_code != 2) {
    // Per-criterion lines for humans; the JSON stays on stdout.
    auto report = json::parse(result.out);
    for (const auto& c : report["results"]["criteria"]) {
      std::cerr << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["id"].get<int>() << " "
                << c["name"].get<std::string>() << ": " << c["summary"].get<std::string>() << "\n";
    }
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

}  // namespace amity
