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

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "extform/formulations/disjunctive.h"
#include "extform/formulations/flows.h"
#include "extform/formulations/gomory_hu.h"
#include "extform/formulations/handle.h"
#include "extform/formulations/trees.h"
#include "extform/graphs/brute_force.h"
#include "extform/graphs/graph.h"
#include "extform/ratlp/lp_format.h"
#include "extform/ratlp/rational.h"
#include "extform/verify/checks.h"

namespace extform::cli {
namespace {

using formulations::FormulationHandle;
using graphs::Graph;
using verify::CheckEntry;
using verify::CheckReport;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

Graph LoadGraph(const std::string& path) {
  try {
    return graphs::ParseGraphJson(ReadFile(path));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

std::vector<int> ParseNodeList(const Graph& g, const std::string& list,
                               const std::string& flag) {
  if (list.empty()) {
    throw Error(ErrorCode::kInvalidArgument, flag + " is required");
  }
  std::vector<int> nodes;
  std::stringstream in(list);
  std::string id;
  while (std::getline(in, id, ',')) {
    std::optional<int> v = g.FindNode(id);
    if (!v) throw Error(ErrorCode::kNotFound, "unknown node '" + id + "'");
    nodes.push_back(*v);
  }
  return nodes;
}

int NodeArg(const Graph& g, const std::string& id, const std::string& flag) {
  if (id.empty()) throw Error(ErrorCode::kInvalidArgument, flag + " is required");
  std::optional<int> v = g.FindNode(id);
  if (!v) throw Error(ErrorCode::kNotFound, "unknown node '" + id + "'");
  return *v;
}

formulations::TreeBackend Backend(const std::string& name) {
  if (name == "split" || name == "eq10") return formulations::TreeBackend::kSplit;
  if (name == "arborescence" || name == "eq11") {
    return formulations::TreeBackend::kArborescence;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown backend '" + name + "'");
}

std::string BackendLabel(formulations::TreeBackend backend) {
  return backend == formulations::TreeBackend::kSplit ? "split" : "arborescence";
}

ratlp::SolveOptions SolveOptionsFor(const RunConfig& c) {
  ratlp::SolveOptions options;
  options.pivot_cap = c.pivot_cap;
  return options;
}

std::string Show(const Rat& v) { return FormatRatWithDecimal(v); }

const CheckEntry* Entry(const CheckReport& r, const std::string& name) {
  for (const CheckEntry& c : r.checks()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool AllPassedWithPrefix(const CheckReport& r, const std::string& prefix) {
  bool any = false;
  for (const CheckEntry& c : r.checks()) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

bool Aborted(const CheckReport& r) {
  const std::string suffix = "/not-aborted";
  for (const CheckEntry& c : r.checks()) {
    if (!c.passed && c.name.size() >= suffix.size() &&
        c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return true;
    }
  }
  return false;
}

std::string PassFail(bool ok) { return ok ? "pass" : "FAIL"; }

void Dump(const RunConfig& c, const FormulationHandle& h, std::ostream& out) {
  if (c.dump_path.empty()) return;
  WriteFile(c.dump_path, ratlp::WriteLp(h.model));
  WriteFile(c.dump_path + ".blocks.json", h.BlockIndexJson() + "\n");
  out << "lp written to " << c.dump_path << " (" << h.model.num_constraints()
      << " rows, " << h.model.num_variables() << " columns)\n";
}

void WriteJson(const RunConfig& c, const std::string& json, std::ostream& out) {
  if (c.json_path.empty()) return;
  if (c.json_path == "-") {
    out << json << "\n";
  } else {
    WriteFile(c.json_path, json + "\n");
  }
}

int Finish(const RunConfig& c, const CheckReport& report, std::ostream& out) {
  out << report.ToText();
  out << "result: " << PassFail(report.passed()) << "\n";
  WriteJson(c, report.ToJson(), out);
  if (Aborted(report)) return kExitAborted;
  return report.passed() ? kExitOk : kExitCheckFailed;
}

Rat RatFromJson(const nlohmann::json& j) {
  if (j.is_string()) return ParseRat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
  throw Error(ErrorCode::kParse, "numbers must be integers or strings like \"3/2\"");
}

struct HullInput {
  std::vector<formulations::PolyhedronDesc> polys;
  std::vector<Rat> w;
  ratlp::ObjectiveSense sense = ratlp::ObjectiveSense::kMaximize;
};

// {"sense": "max" | "min", "objective": [...],
//  "polyhedra": [{"rows": [[...], ...], "rhs": [...]}, ...]}, rows read as
// A x >= b.
HullInput ParseHullJson(const std::string& path) {
  HullInput input;
  try {
    nlohmann::json doc = nlohmann::json::parse(ReadFile(path));
    const std::string sense = doc.value("sense", "max");
    if (sense != "max" && sense != "min") {
      throw Error(ErrorCode::kParse, "sense must be \"max\" or \"min\"");
    }
    input.sense = sense == "max" ? ratlp::ObjectiveSense::kMaximize
                                 : ratlp::ObjectiveSense::kMinimize;
    for (const auto& v : doc.at("objective")) input.w.push_back(RatFromJson(v));
    for (const auto& p : doc.at("polyhedra")) {
      formulations::PolyhedronDesc desc;
      desc.dimension = static_cast<int>(input.w.size());
      for (const auto& row : p.at("rows")) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(RatFromJson(v));
        desc.rows.push_back(std::move(r));
      }
      for (const auto& v : p.at("rhs")) desc.rhs.push_back(RatFromJson(v));
      formulations::Validate(desc);
      input.polys.push_back(std::move(desc));
    }
    if (input.polys.empty()) {
      throw Error(ErrorCode::kParse, "at least one polyhedron is required");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
  return input;
}

int RunHull(const RunConfig& c, std::ostream& out) {
  HullInput in = ParseHullJson(c.input);
  out << "hull: " << in.polys.size() << " polyhedra in R^" << in.w.size() << ", "
      << (in.sense == ratlp::ObjectiveSense::kMaximize ? "maximize" : "minimize")
      << "\n";
  CheckReport r =
      verify::CheckHullInstance(in.polys, in.w, in.sense, SolveOptionsFor(c));
  if (const CheckEntry* e = Entry(r, "hull-optimum-equals-best-polyhedron")) {
    const CheckEntry* k = Entry(r, "lambda-unit-vector");
    out << "optimum " << Show(e->lhs) << "; active polyhedron "
        << (k ? k->detail : "?") << "; best single polyhedron " << Show(e->rhs)
        << "; " << PassFail(r.passed()) << "\n";
  }
  Dump(c, formulations::BuildBalasHull(in.polys, in.w, in.sense), out);
  return Finish(c, r, out);
}

int RunMst(const RunConfig& c, std::ostream& out) {
  Graph g = LoadGraph(c.input);
  const formulations::TreeBackend backend = Backend(c.backend);
  if (!g.IsConnected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  CheckReport r = verify::CheckSpanningTree(g, SolveOptionsFor(c));
  const CheckEntry* opt = Entry(r, "split/optimum-equals-kruskal");
  const CheckEntry* tree = Entry(r, "split/extracted-tree-weight-equals-kruskal");
  const CheckEntry* arb = Entry(r, "arborescence/optimum-equals-split");
  if (opt) {
    const Rat value = backend == formulations::TreeBackend::kSplit || !arb
                          ? opt->lhs
                          : arb->lhs;
    out << "optimum " << Show(value) << " [" << BackendLabel(backend)
        << "]; tree " << (tree ? tree->detail : "?") << "; Kruskal: "
        << Show(opt->rhs) << "; " << PassFail(r.passed()) << "\n";
  }
  Dump(c,
       backend == formulations::TreeBackend::kSplit
           ? formulations::BuildTreeExtension(g)
           : formulations::BuildArborescenceExtension(g, 0),
       out);
  return Finish(c, r, out);
}

int RunSteiner(const RunConfig& c, std::ostream& out) {
  Graph g = LoadGraph(c.input);
  const formulations::TreeBackend backend = Backend(c.backend);
  std::vector<int> s = ParseNodeList(g, c.nodes, "--S");
  if (!g.IsConnected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  FormulationHandle h = formulations::BuildSteinerApprox(g, s, backend);
  CheckReport r = verify::CheckSteiner(g, s, SolveOptionsFor(c));
  const std::string label = BackendLabel(backend);
  const CheckEntry* lp = Entry(r, label + "/optimum-equals-closure-mst");
  const CheckEntry* twice = Entry(r, label + "/optimum-at-most-twice-steiner");
  const CheckEntry* opt = Entry(r, "steiner-optimum-at-most-closure-mst");
  if (lp && twice && opt) {
    out << "LP " << Show(lp->lhs) << " [" << label << "]; Steiner opt "
        << Show(opt->lhs) << "; closure MST " << Show(lp->rhs) << "; ratio bound "
        << FormatRat(twice->lhs) << " ≤ " << FormatRat(twice->rhs) << ": "
        << PassFail(twice->passed) << "\n";
  }
  Dump(c, h, out);
  return Finish(c, r, out);
}

int RunGomoryHu(const RunConfig& c, std::ostream& out) {
  Graph g = LoadGraph(c.input);
  if (!g.IsConnected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  verify::GomoryHuCheckOptions options;
  options.enumerate_max_nodes = c.max_nodes;
  options.solve = SolveOptionsFor(c);
  CheckReport r = verify::CheckGomoryHu(g, options);
  const CheckEntry* opt = Entry(r, "optimum-equals-gusfield-requirement");
  const CheckEntry* tree = Entry(r, "extracted-tree-requirement-equals-optimum");
  if (opt && tree) {
    out << "optimum " << Show(opt->lhs) << "; tree " << tree->detail
        << "; GH check: " << PassFail(AllPassedWithPrefix(r, "gomory-hu-definition/"))
        << "\n";
  }
  Dump(c, formulations::BuildGomoryHuLp(g), out);
  return Finish(c, r, out);
}

int RunTCut(const RunConfig& c, std::ostream& out) {
  Graph g = LoadGraph(c.input);
  std::vector<int> t = ParseNodeList(g, c.nodes, "--T");
  if (t.size() % 2 == 1) {
    throw Error(ErrorCode::kOddTerminalSet,
                "|T| = " + std::to_string(t.size()) + " is odd");
  }
  if (!g.IsConnected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  if (g.num_nodes() > c.max_nodes) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "T-cut LP limited to " + std::to_string(c.max_nodes) +
                    " nodes (--max-nodes)");
  }
  formulations::TCutOptions options;
  options.max_nodes = c.max_nodes;
  options.solve = SolveOptionsFor(c);
  CheckReport r = verify::CheckTCut(g, t, options);
  const CheckEntry* opt = Entry(r, "optimum-equals-brute-force");
  const CheckEntry* cut = Entry(r, "extracted-cut-is-t-cut");
  if (opt) {
    std::string shore = cut ? cut->detail : "?";
    if (shore.rfind("shore ", 0) == 0) shore = shore.substr(6);
    out << "optimum " << Show(opt->lhs) << "; cut δ(" << shore
        << "); oracle: " << Show(opt->rhs) << "; " << PassFail(r.passed()) << "\n";
  }
  if (!c.dump_path.empty()) Dump(c, formulations::BuildTCutLp(g, t, options), out);
  return Finish(c, r, out);
}

int RunVerify(const RunConfig& c, std::ostream& out) {
  verify::SuiteConfig config;
  config.seed = c.seed;
  config.solve = SolveOptionsFor(c);
  std::vector<std::string> names = verify::SuiteNames();
  if (!c.suite.empty()) names = {c.suite};
  bool passed = true;
  bool aborted = false;
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  out << "verify: seed " << c.seed << "\n";
  for (const std::string& name : names) {
    verify::SuiteResult r = verify::RunSuite(name, config);
    out << r.ToText(c.verbose);
    passed = passed && r.passed();
    for (const CheckReport& report : r.reports) aborted = aborted || Aborted(report);
    if (!c.json_path.empty()) doc.push_back(nlohmann::ordered_json::parse(r.ToJson()));
  }
  out << "result: " << PassFail(passed) << " (" << names.size() << " suites)\n";
  if (!c.json_path.empty()) WriteJson(c, doc.dump(2), out);
  if (aborted) return kExitAborted;
  return passed ? kExitOk : kExitCheckFailed;
}

int RunDumpLp(const RunConfig& c, std::ostream& out) {
  Graph g = LoadGraph(c.input);
  const std::string& f = c.formulation;
  FormulationHandle h;
  if (f == "tree") {
    h = formulations::BuildTreeExtension(g);
  } else if (f == "arborescence") {
    h = formulations::BuildArborescenceExtension(
        g, c.source.empty() ? 0 : NodeArg(g, c.source, "--source"));
  } else if (f == "shortest-path") {
    h = formulations::BuildShortestPathLp(g, NodeArg(g, c.source, "--source"),
                                          NodeArg(g, c.sink, "--sink"));
  } else if (f == "st-cut") {
    h = formulations::BuildStCutLp(g, NodeArg(g, c.source, "--source"),
                                   NodeArg(g, c.sink, "--sink"));
  } else if (f == "steiner") {
    h = formulations::BuildSteinerApprox(g, ParseNodeList(g, c.nodes, "--S"),
                                         Backend(c.backend));
  } else if (f == "gomory-hu") {
    h = formulations::BuildGomoryHuLp(g);
  } else if (f == "gh-extension") {
    h = formulations::BuildGhTreePolytopeExtension(g, SolveOptionsFor(c));
  } else if (f == "tcut") {
    formulations::TCutOptions options;
    options.max_nodes = c.max_nodes;
    options.solve = SolveOptionsFor(c);
    h = formulations::BuildTCutLp(g, ParseNodeList(g, c.nodes, "--T"), options);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown formulation '" + f + "'");
  }
  if (c.dump_path.empty()) {
    out << ratlp::WriteLp(h.model);
  } else {
    Dump(c, h, out);
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return kExitMalformedInput;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotFound:
      return kExitUsage;
    case ErrorCode::kOddTerminalSet:
      return kExitOddTerminalSet;
    case ErrorCode::kDisconnected:
      return kExitDisconnected;
    case ErrorCode::kSizeCapExceeded:
      return kExitSizeCap;
    case ErrorCode::kPrecondition:
      // Builders raise it when an inner solve stops before optimality.
      return kExitAborted;
    case ErrorCode::kNonVertex:
    case ErrorCode::kSupportMismatch:
      return kExitCheckFailed;
    case ErrorCode::kInternal:
      return kExitInternal;
  }
  return kExitInternal;
}

int RunCommand(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.max_nodes < 2) {
      throw Error(ErrorCode::kInvalidArgument, "--max-nodes must be at least 2");
    }
    if (config.pivot_cap < 1) {
      throw Error(ErrorCode::kInvalidArgument, "--pivot-cap must be positive");
    }
    if (config.command == "hull") return RunHull(config, out);
    if (config.command == "mst") return RunMst(config, out);
    if (config.command == "steiner") return RunSteiner(config, out);
    if (config.command == "gomory-hu") return RunGomoryHu(config, out);
    if (config.command == "tcut") return RunTCut(config, out);
    if (config.command == "verify") return RunVerify(config, out);
    if (config.command == "dump-lp") return RunDumpLp(config, out);
    throw Error(ErrorCode::kInvalidArgument, "unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact LP formulations for tree and cut problems, checked "
               "against combinatorial oracles.",
               "extform"};
  app.require_subcommand(1);
  RunConfig config;
  const std::vector<std::string> backends = {"split", "arborescence", "eq10", "eq11"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--dump", config.dump_path,
                    "Write the LP here (block index to <path>.blocks.json)");
    sub->add_option("--json", config.json_path, "Write a JSON report ('-' for stdout)");
    sub->add_option("--pivot-cap", config.pivot_cap, "Simplex pivot limit")
        ->capture_default_str();
  };
  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Graph JSON file")->required();
  };

  CLI::App* hull = app.add_subcommand("hull", "Convex hull of a union of polyhedra");
  hull->add_option("input", config.input, "Polyhedra JSON file")->required();
  common(hull);

  CLI::App* mst = app.add_subcommand("mst", "Spanning-tree LP against Kruskal");
  graph_input(mst);
  common(mst);
  mst->add_option("--backend", config.backend, "Tree system")
      ->check(CLI::IsMember(backends))
      ->capture_default_str();

  CLI::App* steiner =
      app.add_subcommand("steiner", "Metric-closure tree LP for a terminal set");
  graph_input(steiner);
  common(steiner);
  steiner->add_option("--S", config.nodes, "Terminals, comma-separated ids")
      ->required();
  steiner->add_option("--backend", config.backend, "Tree system")
      ->check(CLI::IsMember(backends))
      ->capture_default_str();

  CLI::App* gh = app.add_subcommand("gomory-hu", "Minimum-requirement tree LP");
  graph_input(gh);
  common(gh);
  gh->add_option("--max-nodes", config.max_nodes,
                 "Largest graph compared against all spanning trees")
      ->capture_default_str();

  CLI::App* tcut = app.add_subcommand("tcut", "Minimum T-cut LP");
  graph_input(tcut);
  common(tcut);
  tcut->add_option("--T", config.nodes, "Even node set, comma-separated ids")
      ->required();
  tcut->add_option("--max-nodes", config.max_nodes, "Largest graph accepted")
      ->capture_default_str();

  CLI::App* ver = app.add_subcommand("verify", "Run the seeded verification suites");
  ver->add_option("--seed", config.seed, "Suite seed")->capture_default_str();
  ver->add_option("--suite", config.suite, "Run only this suite")
      ->check(CLI::IsMember(verify::SuiteNames()));
  ver->add_option("--json", config.json_path, "Write a JSON report ('-' for stdout)");
  ver->add_option("--pivot-cap", config.pivot_cap, "Simplex pivot limit")
      ->capture_default_str();
  ver->add_flag("-v,--verbose", config.verbose, "Print every instance report");

  CLI::App* dump = app.add_subcommand("dump-lp", "Write a formulation as LP text");
  graph_input(dump);
  dump->add_option("--formulation", config.formulation, "Which LP to build")
      ->required()
      ->check(CLI::IsMember({"tree", "arborescence", "shortest-path", "st-cut",
                             "steiner", "gomory-hu", "gh-extension", "tcut"}));
  dump->add_option("--dump", config.dump_path, "Output path (default stdout)");
  dump->add_option("--S", config.nodes, "Terminals for steiner");
  dump->add_option("--T", config.nodes, "Node set for tcut");
  dump->add_option("--source", config.source, "Source (or arborescence root)");
  dump->add_option("--sink", config.sink, "Sink");
  dump->add_option("--backend", config.backend, "Tree system for steiner")
      ->check(CLI::IsMember(backends));
  dump->add_option("--max-nodes", config.max_nodes, "T-cut size cap")
      ->capture_default_str();
  dump->add_option("--pivot-cap", config.pivot_cap, "Simplex pivot limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) config.command = sub->get_name();
  return RunCommand(config, out, err);
}

}  // namespace extform::cli
