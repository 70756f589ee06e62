// Copyright 2026 The extform Authors.
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

#include "extform/verify/suites.h"

#include <chrono>
#include <functional>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "extform/error.h"
#include "extform/verify/random_instances.h"

namespace extform::verify {
namespace {

using graphs::Graph;

Rng InstanceRng(std::uint64_t seed, int suite, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite),
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

Graph RandomGraph(Rng& rng, int min_nodes, int max_nodes) {
  GraphOptions opts;
  opts.num_nodes = UniformInt(rng, min_nodes, max_nodes);
  return RandomConnectedGraph(rng, opts);
}

std::string Describe(const Graph& g) {
  return "n=" + std::to_string(g.num_nodes()) +
         " m=" + std::to_string(g.num_edges());
}

Graph PathGraph() {
  return Graph::FromIds({"a", "b", "c"},
                        {{"a", "b", Rat(2)}, {"b", "c", Rat(1)}});
}

Graph CycleGraph() {
  return Graph::FromIds({"a", "b", "c", "d"}, {{"a", "b", Rat(1)},
                                               {"b", "c", Rat(1)},
                                               {"c", "d", Rat(1)},
                                               {"d", "a", Rat(1)}});
}

void Push(SuiteResult& result, CheckReport report, const std::string& label) {
  report.set_instance(result.name + "#" +
                      std::to_string(result.reports.size() + 1) + " " + label);
  result.reports.push_back(std::move(report));
}

void RunHull(SuiteResult& out, const SuiteConfig& c) {
  for (int i = 0; i < c.hull_instances; ++i) {
    Rng rng = InstanceRng(c.seed, 1, i);
    HullInstance inst = RandomHullInstance(rng);
    Push(out, CheckHullInstance(inst.polys, inst.w, inst.sense, c.solve),
         std::to_string(inst.polys.size()) + " polyhedra");
  }
}

void RunCoupledInstance(SuiteResult& out, const CoupledInstance& inst,
                        const SuiteConfig& c) {
  Push(out,
       CheckCoupledOptimality(inst.subproblems, inst.coupling, inst.w,
                              inst.sense, c.solve),
       inst.label);
}

void RunCoupled(SuiteResult& out, const SuiteConfig& c) {
  for (int i = 0; i < c.coupled_instances; ++i) {
    Rng rng = InstanceRng(c.seed, 2, i);
    RunCoupledInstance(out, RandomCoupledInstance(rng), c);
  }
  for (int variant = 0; variant <= 5; ++variant) {
    RunCoupledInstance(out, ConstructedUnboundedInstance(variant), c);
  }
  Graph path = PathGraph();
  RunCoupledInstance(out, SteinerCoupledInstance(path, {0, 1, 2}), c);
  CoupledInstance zero = ConstructedUnboundedInstance(0);
  zero.label = "zero-objective";
  zero.w = {Rat(0), Rat(0)};
  RunCoupledInstance(out, zero, c);
}

void RunSpanningTree(SuiteResult& out, const SuiteConfig& c) {
  for (int i = 0; i < c.tree_instances; ++i) {
    Rng rng = InstanceRng(c.seed, 3, i);
    Graph g = RandomGraph(rng, 2, c.tree_max_nodes);
    Push(out, CheckSpanningTree(g, c.solve), Describe(g));
  }
}

void RunSteiner(SuiteResult& out, const SuiteConfig& c) {
  for (int i = 0; i < c.steiner_instances; ++i) {
    Rng rng = InstanceRng(c.seed, 4, i);
    Graph g = RandomGraph(rng, 2, c.steiner_max_nodes);
    const int k = UniformInt(rng, 2, std::min(c.steiner_max_terminals,
                                              g.num_nodes()));
    std::vector<int> terminals = RandomNodeSubset(rng, g.num_nodes(), k);
    Push(out, CheckSteiner(g, terminals, c.solve),
         Describe(g) + " |S|=" + std::to_string(k));
  }
  SizeAuditResult audit =
      SizeAudit(SizeAuditKind::kSteiner, 4, c.steiner_audit_max_nodes, c.seed);
  out.size_samples = audit.samples;
  Push(out, audit.report, "size audit");
}

void RunGomoryHu(SuiteResult& out, const SuiteConfig& c) {
  GomoryHuCheckOptions opts;
  opts.enumerate_max_nodes = c.gomory_hu_enumerate_max_nodes;
  opts.solve = c.solve;
  Push(out, CheckGomoryHu(PathGraph(), opts), "path a-b-c");
  Push(out, CheckGomoryHu(CycleGraph(), opts), "cycle a-b-c-d");
  for (int i = 0; i < c.gomory_hu_instances; ++i) {
    Rng rng = InstanceRng(c.seed, 5, i);
    Graph g = RandomGraph(rng, 2, c.gomory_hu_max_nodes);
    Push(out, CheckGomoryHu(g, opts), Describe(g));
  }
}

void RunGhExtension(SuiteResult& out, const SuiteConfig& c) {
  Rng rng = InstanceRng(c.seed, 6, 0);
  auto objectives = [&](const Graph& g) {
    const int pairs = g.num_nodes() * (g.num_nodes() - 1) / 2;
    std::vector<std::vector<Rat>> w(c.gh_extension_objectives);
    for (auto& row : w) {
      for (int k = 0; k < pairs; ++k) row.push_back(RandomRational(rng, -5, 5));
    }
    return w;
  };
  Graph path = PathGraph();
  Push(out, CheckGhExtension(path, objectives(path), true, c.solve),
       "path a-b-c");
  Graph cycle = CycleGraph();
  Push(out, CheckGhExtension(cycle, objectives(cycle), true, c.solve),
       "cycle a-b-c-d");
  GraphOptions opts;
  opts.num_nodes = 4;
  Graph g = RandomConnectedGraph(rng, opts);
  Push(out, CheckGhExtension(g, objectives(g), true, c.solve), Describe(g));
  SizeAuditResult audit = SizeAudit(SizeAuditKind::kGomoryHuExtension, 4,
                                    c.gh_audit_max_nodes, c.seed);
  out.size_samples = audit.samples;
  Push(out, audit.report, "size audit");
}

void RunTCut(SuiteResult& out, const SuiteConfig& c) {
  formulations::TCutOptions opts;
  opts.solve = c.solve;
  Push(out, CheckTCut(PathGraph(), {0, 2}, opts), "path a-b-c T={a,c}");
  Push(out, CheckTCut(CycleGraph(), {0, 1, 2, 3}, opts), "cycle T=V");
  for (int i = 0; i < c.tcut_instances; ++i) {
    Rng rng = InstanceRng(c.seed, 7, i);
    Graph g = RandomGraph(rng, 2, c.tcut_max_nodes);
    const int k = 2 * UniformInt(rng, 1, g.num_nodes() / 2);
    std::vector<int> terminals = RandomNodeSubset(rng, g.num_nodes(), k);
    Push(out, CheckTCut(g, terminals, opts),
         Describe(g) + " |T|=" + std::to_string(k));
  }
}

}  // namespace

bool SuiteResult::passed() const { return num_failed_instances() == 0; }

int SuiteResult::num_failed_instances() const {
  int failed = 0;
  for (const CheckReport& r : reports) failed += r.passed() ? 0 : 1;
  return failed;
}

int SuiteResult::num_lp_outcomes() const {
  int audited = 0;
  for (const CheckReport& r : reports) audited += r.num_audited();
  return audited;
}

int SuiteResult::num_soundness_failures() const {
  int failed = 0;
  for (const CheckReport& r : reports) {
    for (const CheckEntry& e : r.checks()) {
      if (!e.passed && e.name.rfind(kSoundnessPrefix, 0) == 0) ++failed;
    }
  }
  return failed;
}

std::string SuiteResult::ToText(bool verbose) const {
  std::ostringstream out;
  out << "suite " << name << ": "
      << (passed() ? "pass" : "FAIL") << " ("
      << reports.size() - num_failed_instances() << "/" << reports.size()
      << " instances, " << num_lp_outcomes() << " LP outcomes audited)\n";
  for (const CheckReport& r : reports) {
    if (verbose || !r.passed()) out << r.ToText();
  }
  return out.str();
}

std::string SuiteResult::ToJson() const {
  nlohmann::ordered_json doc;
  doc["suite"] = name;
  doc["passed"] = passed();
  doc["instances"] = reports.size();
  doc["failed_instances"] = num_failed_instances();
  doc["lp_outcomes_audited"] = num_lp_outcomes();
  doc["reports"] = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    doc["reports"].push_back(nlohmann::ordered_json::parse(r.ToJson()));
  }
  if (!size_samples.empty()) {
    doc["size_samples"] = nlohmann::ordered_json::array();
    for (const SizeSample& s : size_samples) {
      doc["size_samples"].push_back({{"n", s.num_nodes},
                                     {"terminals", s.num_terminals},
                                     {"rows", s.rows},
                                     {"cols", s.cols},
                                     {"encoding", s.encoding},
                                     {"bound", FormatRat(s.bound)},
                                     {"ratio", FormatRat(s.ratio)}});
    }
  }
  return doc.dump(2);
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "hull",      "coupled",      "spanning-tree", "steiner",
      "gomory-hu", "gh-extension", "tcut"};
  return names;
}

SuiteResult RunSuite(std::string_view name, const SuiteConfig& config) {
  static const std::vector<
      std::pair<std::string_view,
                std::function<void(SuiteResult&, const SuiteConfig&)>>>
      runners = {{"hull", RunHull},
                 {"coupled", RunCoupled},
                 {"spanning-tree", RunSpanningTree},
                 {"steiner", RunSteiner},
                 {"gomory-hu", RunGomoryHu},
                 {"gh-extension", RunGhExtension},
                 {"tcut", RunTCut}};
  for (const auto& [suite, run] : runners) {
    if (suite != name) continue;
    SuiteResult result;
    result.name = std::string(name);
    const auto start = std::chrono::steady_clock::now();
    run(result, config);
    result.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown suite '" + std::string(name) + "'");
}

}  // namespace extform::verify
