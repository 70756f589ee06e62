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

#include "extform/verify/checks.h"

#include <algorithm>
#include <optional>
#include <string>

#include "extform/error.h"
#include "extform/formulations/extract.h"
#include "extform/formulations/flows.h"
#include "extform/formulations/trees.h"
#include "extform/graphs/algorithms.h"
#include "extform/graphs/brute_force.h"
#include "extform/ratlp/optimal_face.h"
#include "extform/verify/random_instances.h"

namespace extform::verify {
namespace {

using formulations::ExtensionDesc;
using formulations::FormulationHandle;
using formulations::PolyhedronDesc;
using graphs::Graph;
using graphs::NodePair;
using graphs::Tree;
using ratlp::Model;
using ratlp::ObjectiveSense;
using ratlp::SolveOptions;
using ratlp::SolveOutcome;
using ratlp::SolveStatus;

bool Better(ObjectiveSense sense, const Rat& a, const Rat& b) {
  return sense == ObjectiveSense::kMaximize ? a > b : a < b;
}

std::string StatusName(SolveStatus status) {
  return std::string(ratlp::SolveStatusName(status));
}

// Solves, audits, and records whether the outcome is optimal.
SolveOutcome SolveChecked(CheckReport& r, const std::string& label,
                          const Model& model, const SolveOptions& options) {
  SolveOutcome out = ratlp::Solve(model, options);
  r.AddAudit(label, model, out);
  r.Add(label + "/optimal", out.optimal(), Rat(0), Rat(0),
        out.optimal() ? "" : "status " + StatusName(out.status));
  return out;
}

Model WithObjective(const Model& model, ObjectiveSense sense,
                    ratlp::LinearExpr terms) {
  ratlp::ModelBuilder b(model);
  b.SetObjective(sense, std::move(terms));
  return b.Build();
}

// Tree read from the lambda block; a fractional lambda is replaced by the
// lexicographic vertex of the same optimal face.
std::optional<Tree> ExtractTreeChecked(CheckReport& r, const std::string& label,
                                       const FormulationHandle& h,
                                       const SolveOutcome& solved,
                                       const SolveOptions& options,
                                       std::vector<Rat>* point = nullptr) {
  std::string how = "basic optimum";
  std::vector<Rat> x = solved.primal;
  bool fractional = false;
  const formulations::Block& lambda = h.block("lambda");
  for (int j = lambda.begin; j < lambda.end; ++j) {
    if (x[j] != 0 && x[j] != 1) fractional = true;
  }
  if (fractional) {
    how = "lexicographic re-solve";
    SolveOutcome lex = SolveChecked(
        r, label + "/lex",
        formulations::LexicographicLambdaModel(h, solved.objective), options);
    if (!lex.optimal()) return std::nullopt;
    x = lex.primal;
  }
  try {
    Tree t = formulations::ExtractTree(h, x);
    if (point) *point = x;
    r.Add(label + "/lambda-is-spanning-tree", true, Rat(0), Rat(0), how);
    return t;
  } catch (const Error& e) {
    r.Add(label + "/lambda-is-spanning-tree", false, Rat(0), Rat(0),
          how + ": " + e.what());
    return std::nullopt;
  }
}

std::string JoinIds(const Graph& g, const std::vector<int>& nodes) {
  std::string out;
  for (int v : nodes) {
    if (!out.empty()) out += ",";
    out += g.node(v);
  }
  return out;
}

std::string TreeLabel(const Graph& g, const Tree& t) {
  std::string out = "{";
  for (const NodePair& e : t.edges) {
    if (out.size() > 1) out += ",";
    out += g.EdgeLabel(e);
  }
  return out + "}";
}

}  // namespace

CheckReport CheckBalasVertex(const FormulationHandle& hull,
                             const std::vector<Rat>& x) {
  CheckReport r("balas-vertex");
  const formulations::Block& lambda = hull.block("lambda");
  const formulations::Block& agg = hull.block("x");
  const formulations::Block& copies = hull.block("x_i");
  const int n = agg.size();
  int active = -1;
  int ones = 0;
  bool unit = true;
  for (int i = 0; i < lambda.size(); ++i) {
    const Rat& v = x[lambda.begin + i];
    if (v == 1) {
      ++ones;
      active = i;
    } else if (v != 0) {
      unit = false;
    }
  }
  unit = unit && ones == 1;
  r.Add("lambda-unit-vector", unit, Rat(ones), Rat(1),
        unit ? "k = " + std::to_string(active + 1)
             : "lambda is not a unit vector");
  if (!unit) return r;
  bool copy_matches = true;
  bool others_zero = true;
  for (int i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat& v = x[copies.begin + i * n + j];
      if (i == active) {
        copy_matches = copy_matches && v == x[agg.begin + j];
      } else {
        others_zero = others_zero && v == 0;
      }
    }
  }
  r.Add("active-copy-equals-x", copy_matches);
  r.Add("inactive-copies-zero", others_zero);
  return r;
}

CheckReport CheckHullInstance(const std::vector<PolyhedronDesc>& polys,
                              const std::vector<Rat>& w, ObjectiveSense sense,
                              const SolveOptions& options) {
  CheckReport r("hull");
  FormulationHandle hull = formulations::BuildBalasHull(polys, w, sense);
  SolveOutcome solved = SolveChecked(r, "hull", hull.model, options);
  std::optional<Rat> best;
  std::vector<Rat> piece_value(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    Model sub = formulations::SubproblemModel(
        formulations::AsExtension(polys[i]), w, sense);
    SolveOutcome s =
        SolveChecked(r, "polyhedron-" + std::to_string(i + 1), sub, options);
    if (!s.optimal()) continue;
    piece_value[i] = s.objective;
    if (!best || Better(sense, s.objective, *best)) best = s.objective;
  }
  if (!solved.optimal() || !best) return r;
  r.AddEqual("hull-optimum-equals-best-polyhedron", solved.objective, *best);
  CheckReport vertex = CheckBalasVertex(hull, solved.primal);
  r.Merge(vertex);
  if (vertex.passed()) {
    int k = 0;
    const formulations::Block& lambda = hull.block("lambda");
    while (solved.primal[lambda.begin + k] != 1) ++k;
    r.AddEqual("active-polyhedron-attains-optimum", piece_value[k],
               solved.objective, "k = " + std::to_string(k + 1));
  }
  return r;
}

Model CouplingModel(const ExtensionDesc& coupling,
                    const std::vector<Rat>& weights, ObjectiveSense sense) {
  formulations::Validate(coupling);
  ratlp::ModelBuilder b;
  for (int i = 0; i < coupling.dimension; ++i) {
    b.AddFreeVariable("lambda_" + std::to_string(i + 1));
  }
  for (int j = 0; j < coupling.aux_dimension; ++j) {
    b.AddFreeVariable("mu_" + std::to_string(j + 1));
  }
  for (std::size_t row = 0; row < coupling.rows.size(); ++row) {
    ratlp::LinearExpr terms;
    for (std::size_t j = 0; j < coupling.rows[row].size(); ++j) {
      if (coupling.rows[row][j] != 0) {
        terms.push_back({static_cast<int>(j), coupling.rows[row][j]});
      }
    }
    b.AddConstraint("coupling_" + std::to_string(row + 1), std::move(terms),
                    ratlp::RowSense::kGreaterEqual, coupling.rhs[row]);
  }
  ratlp::LinearExpr obj;
  for (int i = 0; i < coupling.dimension; ++i) {
    if (weights[i] != 0) obj.push_back({i, weights[i]});
  }
  b.SetObjective(sense, std::move(obj));
  return b.Build();
}

TwoPhaseResult SolveTwoPhase(const std::vector<ExtensionDesc>& subproblems,
                             const ExtensionDesc& coupling,
                             const std::vector<Rat>& w, ObjectiveSense sense,
                             CheckReport* audits, const SolveOptions& options) {
  TwoPhaseResult result;
  const int k = static_cast<int>(subproblems.size());
  bool any_unbounded = false;
  std::vector<int> empty;
  for (int i = 0; i < k; ++i) {
    Model sub = formulations::SubproblemModel(subproblems[i], w, sense);
    SolveOutcome s = ratlp::Solve(sub, options);
    if (audits) audits->AddAudit("subproblem-" + std::to_string(i + 1), sub, s);
    result.subproblem_status.push_back(s.status);
    result.subproblem_value.push_back(s.optimal() ? s.objective : Rat(0));
    if (s.status == SolveStatus::kUnbounded) any_unbounded = true;
    if (s.status == SolveStatus::kInfeasible) empty.push_back(i);
    if (s.status == SolveStatus::kAborted) {
      result.status = SolveStatus::kAborted;
      return result;
    }
  }
  Model outer = CouplingModel(coupling, result.subproblem_value, sense);
  if (!empty.empty()) {
    ratlp::ModelBuilder b(outer);
    for (int i : empty) {
      b.AddConstraint("empty_" + std::to_string(i + 1), {{i, Rat(1)}},
                      ratlp::RowSense::kEqual, Rat(0));
    }
    outer = b.Build();
  }
  SolveOutcome s = ratlp::Solve(outer, options);
  if (audits) audits->AddAudit("coupling", outer, s);
  result.status = s.status;
  if (s.optimal() && any_unbounded) {
    // A recession direction of an unbounded subproblem stays available for
    // any feasible lambda, including lambda_i = 0.
    result.status = SolveStatus::kUnbounded;
  }
  if (result.status == SolveStatus::kOptimal) result.value = s.objective;
  return result;
}

CheckReport CheckCoupledOptimality(const std::vector<ExtensionDesc>& subproblems,
                                   const ExtensionDesc& coupling,
                                   const std::vector<Rat>& w,
                                   ObjectiveSense sense,
                                   const SolveOptions& options) {
  CheckReport r("coupled");
  TwoPhaseResult two = SolveTwoPhase(subproblems, coupling, w, sense, &r, options);
  bool sub_unbounded = false;
  for (SolveStatus s : two.subproblem_status) {
    sub_unbounded = sub_unbounded || s == SolveStatus::kUnbounded;
  }
  for (bool aggregate : {true, false}) {
    const std::string label = aggregate ? "with-aggregate" : "objective-on-copies";
    formulations::CoupledOptions opts;
    opts.include_aggregate = aggregate;
    FormulationHandle h =
        formulations::BuildCoupled(subproblems, coupling, w, sense, opts);
    SolveOutcome s = ratlp::Solve(h.model, options);
    r.AddAudit(label, h.model, s);
    r.Add(label + "/status-equals-two-phase", s.status == two.status, Rat(0),
          Rat(0), StatusName(s.status) + " vs " + StatusName(two.status));
    if (s.optimal() && two.status == SolveStatus::kOptimal) {
      r.AddEqual(label + "/optimum-equals-two-phase", s.objective, two.value);
    }
    const bool unbounded = s.status == SolveStatus::kUnbounded;
    r.Add(label + "/unbounded-iff-some-subproblem-unbounded",
          unbounded == sub_unbounded, Rat(unbounded ? 1 : 0),
          Rat(sub_unbounded ? 1 : 0));
  }
  return r;
}

CheckReport CheckSpanningTree(const Graph& g, const SolveOptions& options) {
  CheckReport r("spanning-tree");
  graphs::SpanningTree mst = graphs::Kruskal(g);
  FormulationHandle split = formulations::BuildTreeExtension(g);
  SolveOutcome s = SolveChecked(r, "split", split.model, options);
  if (s.optimal()) {
    r.AddEqual("split/optimum-equals-kruskal", s.objective, mst.weight);
    std::optional<Tree> t = ExtractTreeChecked(r, "split", split, s, options);
    if (t) {
      Rat weight(0);
      for (const NodePair& e : t->edges) {
        weight += g.edge(*g.FindEdge(e.first, e.second)).c;
      }
      r.AddEqual("split/extracted-tree-weight-equals-kruskal", weight,
                 mst.weight, TreeLabel(g, *t));
    }
  }
  FormulationHandle arb = formulations::BuildArborescenceExtension(g, 0);
  SolveOutcome a = SolveChecked(r, "arborescence", arb.model, options);
  if (a.optimal() && s.optimal()) {
    r.AddEqual("arborescence/optimum-equals-split", a.objective, s.objective);
  }
  return r;
}

CheckReport CheckSteiner(const Graph& g, const std::vector<int>& terminals,
                         const SolveOptions& options) {
  CheckReport r("steiner S={" + JoinIds(g, terminals) + "}");
  graphs::MetricClosure mc = graphs::MetricClosureOf(g);
  Graph on_s = graphs::InducedSubgraph(mc.closure, terminals);
  const Rat closure_mst = graphs::Kruskal(on_s).weight;
  const Rat steiner = graphs::BruteForceSteiner(g, terminals).value;
  r.AddLessEqual("steiner-optimum-at-most-closure-mst", steiner, closure_mst);
  std::optional<Rat> split_value;
  for (formulations::TreeBackend backend :
       {formulations::TreeBackend::kSplit,
        formulations::TreeBackend::kArborescence}) {
    const std::string label =
        backend == formulations::TreeBackend::kSplit ? "split" : "arborescence";
    FormulationHandle h = formulations::BuildSteinerApprox(g, terminals, backend);
    SolveOutcome s = SolveChecked(r, label, h.model, options);
    if (!s.optimal()) continue;
    r.AddEqual(label + "/optimum-equals-closure-mst", s.objective, closure_mst);
    r.AddLessEqual(label + "/optimum-at-most-twice-steiner", s.objective,
                   2 * steiner);
    if (split_value) {
      r.AddEqual(label + "/optimum-equals-split", s.objective, *split_value);
    } else {
      split_value = s.objective;
    }
  }
  return r;
}

CheckReport CheckGomoryHu(const Graph& g, const GomoryHuCheckOptions& options) {
  CheckReport r("gomory-hu");
  const int n = g.num_nodes();
  FormulationHandle gh = formulations::BuildGomoryHuLp(g);
  SolveOutcome s = SolveChecked(r, "gh", gh.model, options.solve);
  if (!s.optimal()) return r;
  graphs::GomoryHuTree gus = graphs::GusfieldTree(g);
  r.AddEqual("optimum-equals-gusfield-requirement", s.objective,
             graphs::RequirementValue(g, gus.tree));
  std::vector<Rat> point;
  std::optional<Tree> t =
      ExtractTreeChecked(r, "gh", gh, s, options.solve, &point);
  if (!t) return r;
  r.AddEqual("extracted-tree-requirement-equals-optimum",
             graphs::RequirementValue(g, *t), s.objective, TreeLabel(g, *t));
  for (const NodePair& f : t->edges) {
    const Rat cut = graphs::FundamentalCut(g, *t, f).capacity;
    const Rat flow = graphs::MinimumStCut(g, f.first, f.second).value;
    r.AddEqual("gomory-hu-definition/" + g.EdgeLabel(f), cut, flow);
  }
  // Minimum cut of every pair read off the tree path.
  int pairs_ok = 0;
  int pairs = 0;
  std::optional<CheckEntry> first_bad;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      ++pairs;
      std::optional<Rat> path_min;
      for (const NodePair& f : graphs::TreePath(*t, u, v)) {
        Rat c = graphs::FundamentalCut(g, *t, f).capacity;
        if (!path_min || c < *path_min) path_min = c;
      }
      const Rat flow = graphs::MinimumStCut(g, u, v).value;
      if (path_min && *path_min == flow) {
        ++pairs_ok;
      } else if (!first_bad) {
        first_bad = CheckEntry{"", false, path_min.value_or(Rat(-1)), flow,
                               g.node(u) + "-" + g.node(v)};
      }
    }
  }
  if (first_bad) {
    r.Add("path-minimum-equals-min-cut", false, first_bad->lhs, first_bad->rhs,
          "first mismatch " + first_bad->detail);
  } else {
    r.Add("path-minimum-equals-min-cut", true, Rat(pairs_ok), Rat(pairs),
          "all pairs");
  }
  try {
    std::vector<formulations::FundamentalCutReading> cuts =
        formulations::ExtractFundamentalCuts(gh, g, point);
    r.Add("fundamental-cuts-read-from-mu-and-x", true,
          Rat(static_cast<long>(cuts.size())), Rat(n - 1));
  } catch (const Error& e) {
    r.Add("fundamental-cuts-read-from-mu-and-x", false, Rat(0), Rat(0),
          e.what());
  }
  if (n <= options.enumerate_max_nodes && n <= graphs::kMaxSpanningTreeNodes) {
    std::optional<Rat> best;
    long count = 0;
    graphs::ForEachSpanningTreeOfComplete(n, [&](const Tree& h) {
      ++count;
      Rat value = graphs::RequirementValue(g, h);
      if (!best || value < *best) best = value;
    });
    r.AddEqual("optimum-is-minimum-over-all-trees", s.objective, *best,
               std::to_string(count) + " trees");
  }
  return r;
}

CheckReport CheckGhExtension(const Graph& g,
                             const std::vector<std::vector<Rat>>& objectives,
                             bool check_ranges, const SolveOptions& options) {
  CheckReport r("gh-extension");
  const int n = g.num_nodes();
  FormulationHandle ext = formulations::BuildGhTreePolytopeExtension(g, options);
  const formulations::Block& lambda = ext.block("lambda");
  const int num_pairs = lambda.size();
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int k = 0; k < num_pairs; ++k) {
    const NodePair& p = ext.lambda_edges[k];
    pair_index[p.first][p.second] = pair_index[p.second][p.first] = k;
  }
  // Minimum-requirement trees of K_n as incidence vectors.
  std::optional<Rat> best;
  std::vector<std::vector<int>> gh_trees;
  std::vector<Tree> gh_tree_objects;
  graphs::ForEachSpanningTreeOfComplete(n, [&](const Tree& h) {
    Rat value = graphs::RequirementValue(g, h);
    if (best && value > *best) return;
    if (!best || value < *best) {
      best = value;
      gh_trees.clear();
      gh_tree_objects.clear();
    }
    std::vector<int> chi(num_pairs, 0);
    for (const NodePair& e : h.edges) chi[pair_index[e.first][e.second]] = 1;
    gh_trees.push_back(std::move(chi));
    gh_tree_objects.push_back(h);
  });
  bool definition_holds = true;
  for (const Tree& h : gh_tree_objects) {
    for (const NodePair& f : h.edges) {
      definition_holds =
          definition_holds && graphs::FundamentalCut(g, h, f).capacity ==
                                  graphs::MinimumStCut(g, f.first, f.second).value;
    }
  }
  r.Add("minimum-requirement-trees-are-gomory-hu", definition_holds,
        Rat(static_cast<long>(gh_trees.size())), Rat(0),
        std::to_string(gh_trees.size()) + " trees");
  auto best_over_trees = [&](const std::vector<Rat>& w) {
    std::optional<Rat> top;
    for (const std::vector<int>& chi : gh_trees) {
      Rat value(0);
      for (int k = 0; k < num_pairs; ++k) {
        if (chi[k]) value += w[k];
      }
      if (!top || value > *top) top = value;
    }
    return *top;
  };
  auto solve_direction = [&](const std::string& label,
                             const std::vector<Rat>& w,
                             ObjectiveSense sense) -> std::optional<Rat> {
    ratlp::LinearExpr terms;
    for (int k = 0; k < num_pairs; ++k) {
      if (w[k] != 0) terms.push_back({lambda.begin + k, w[k]});
    }
    SolveOutcome s = SolveChecked(r, label, WithObjective(ext.model, sense, terms),
                                  options);
    if (!s.optimal()) return std::nullopt;
    return s.objective;
  };
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    const std::string label = "objective-" + std::to_string(i + 1);
    std::optional<Rat> lp =
        solve_direction(label, objectives[i], ObjectiveSense::kMaximize);
    if (lp) {
      r.AddEqual(label + "/maximum-equals-best-gomory-hu-tree", *lp,
                 best_over_trees(objectives[i]));
    }
  }
  if (check_ranges) {
    for (int k = 0; k < num_pairs; ++k) {
      const std::string edge = g.EdgeLabel(ext.lambda_edges[k]);
      std::vector<Rat> unit(num_pairs, Rat(0));
      unit[k] = 1;
      int lo = 1, hi = 0;
      for (const std::vector<int>& chi : gh_trees) {
        lo = std::min(lo, chi[k]);
        hi = std::max(hi, chi[k]);
      }
      std::optional<Rat> lp_lo = solve_direction(
          "range-" + edge + "/min", unit, ObjectiveSense::kMinimize);
      std::optional<Rat> lp_hi = solve_direction(
          "range-" + edge + "/max", unit, ObjectiveSense::kMaximize);
      if (lp_lo) r.AddEqual("lambda-range/" + edge + "/min", *lp_lo, Rat(lo));
      if (lp_hi) r.AddEqual("lambda-range/" + edge + "/max", *lp_hi, Rat(hi));
    }
  }
  return r;
}

CheckReport CheckTCut(const Graph& g, const std::vector<int>& terminals,
                      const formulations::TCutOptions& options) {
  CheckReport r("tcut T={" + JoinIds(g, terminals) + "}");
  const graphs::TCutResult brute = graphs::BruteForceMinTCut(g, terminals);
  FormulationHandle h;
  try {
    h = formulations::BuildTCutLp(g, terminals, options);
  } catch (const Error& e) {
    // The builder solves GH LPs internally; a capped solve surfaces here.
    const bool aborted = e.code() == ErrorCode::kPrecondition;
    r.Add(aborted ? "build/not-aborted" : "build", false, Rat(0), Rat(0), e.what());
    return r;
  }
  SolveOutcome s = SolveChecked(r, "tcut", h.model, options.solve);
  if (!s.optimal()) return r;
  r.AddEqual("optimum-equals-brute-force", s.objective, brute.value,
             "brute-force shore " + graphs::ShoreLabel(g, brute.cut));
  try {
    graphs::Cut cut = formulations::ExtractTCut(h, g, s.primal);
    long inside = 0;
    for (int v : terminals) inside += cut.shore[v] ? 1 : 0;
    // Label the side without node 0, as the brute-force oracle does.
    graphs::Cut shown = cut;
    if (shown.shore[0]) shown.shore.flip();
    r.Add("extracted-cut-is-t-cut", inside % 2 == 1, Rat(inside), Rat(0),
          "shore " + graphs::ShoreLabel(g, shown));
    r.AddEqual("extracted-cut-capacity-equals-optimum", cut.capacity,
               s.objective);
  } catch (const Error& e) {
    r.Add("extracted-cut-is-t-cut", false, Rat(0), Rat(0), e.what());
  }
  return r;
}

std::size_t EncodingSize(const Model& model) {
  std::size_t size = model.num_constraints() + model.num_variables();
  auto bits = [](const Rat& v) { return 1 + BitLength(v); };
  for (const ratlp::Constraint& c : model.constraints()) {
    for (const ratlp::Term& t : c.terms) size += bits(t.coef);
    size += bits(c.rhs);
  }
  for (const ratlp::Variable& v : model.variables()) {
    if (v.lower) size += bits(*v.lower);
    if (v.upper) size += bits(*v.upper);
  }
  for (const ratlp::Term& t : model.objective().terms) size += bits(t.coef);
  return size;
}

SizeAuditResult SizeAudit(SizeAuditKind kind, int n_lo, int n_hi,
                          std::uint64_t seed) {
  const bool steiner = kind == SizeAuditKind::kSteiner;
  SizeAuditResult result{{}, CheckReport(steiner ? "size-audit/steiner"
                                                 : "size-audit/gomory-hu")};
  const Rat constant(steiner ? kSteinerSizeConstant : kGomoryHuSizeConstant);
  for (int n = n_lo; n <= n_hi; ++n) {
    Rng rng(seed + static_cast<std::uint64_t>(n));
    SizeSample sample;
    sample.num_nodes = n;
    Model model;
    if (steiner) {
      GraphOptions opts;
      opts.num_nodes = n;
      Graph g = RandomConnectedGraph(rng, opts);
      std::vector<int> terminals =
          RandomNodeSubset(rng, n, std::max(2, (n + 1) / 2));
      sample.num_terminals = static_cast<int>(terminals.size());
      model = formulations::BuildSteinerApprox(g, terminals).model;
      const long s = sample.num_terminals;
      sample.bound = Rat(g.num_nodes() + g.num_edges() + s +
                         static_cast<long>(g.CapacityEncodingLength())) *
                     Rat(s * s);
    } else {
      std::vector<std::string> ids = LetterIds(n);
      std::vector<std::tuple<std::string, std::string, Rat>> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          edges.emplace_back(ids[u], ids[v], RandomRational(rng, 1, 6));
        }
      }
      Graph g = Graph::FromIds(ids, edges);
      model = formulations::BuildGhTreePolytopeExtension(g).model;
      const long nn = n;
      sample.bound = Rat(nn * nn * nn * nn) +
                     Rat(nn * nn * static_cast<long>(g.CapacityEncodingLength()));
    }
    sample.rows = model.num_constraints();
    sample.cols = model.num_variables();
    sample.encoding = EncodingSize(model);
    sample.ratio = Rat(static_cast<long>(sample.encoding)) / sample.bound;
    const std::string label = "n=" + std::to_string(n);
    result.report.AddLessEqual("ratio-within-constant/" + label, sample.ratio,
                               constant,
                               std::to_string(sample.rows) + " rows, " +
                                   std::to_string(sample.cols) + " columns, " +
                                   std::to_string(sample.encoding) + " bits");
    if (!steiner && !result.samples.empty()) {
      result.report.Add(
          "encoding-grows-with-n/" + label,
          sample.encoding > result.samples.back().encoding,
          Rat(static_cast<long>(sample.encoding)),
          Rat(static_cast<long>(result.samples.back().encoding)));
    }
    result.samples.push_back(sample);
  }
  return result;
}

}  // namespace extform::verify
