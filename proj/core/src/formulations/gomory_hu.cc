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

#include "extform/formulations/gomory_hu.h"

#include <algorithm>
#include <string>

#include "extform/error.h"
#include "extform/formulations/trees.h"
#include "extform/ratlp/optimal_face.h"

namespace extform::formulations {
namespace {

using ratlp::LinearExpr;
using ratlp::ModelBuilder;
using ratlp::RowSense;

std::string Pair(const FormulationHandle& h, const NodePair& p) {
  return h.node_ids[p.first] + "," + h.node_ids[p.second];
}

void CheckConnected(const graphs::Graph& g) {
  if (g.num_nodes() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "Gomory-Hu LP needs at least two nodes");
  }
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
}

bool LambdaIntegral(const FormulationHandle& h, const std::vector<Rat>& x) {
  const Block& lambda = h.block("lambda");
  for (int j = lambda.begin; j < lambda.end; ++j) {
    if (!IsInteger(x[j])) return false;
  }
  return true;
}

}  // namespace

FormulationHandle BuildGomoryHuLp(const graphs::Graph& g) {
  CheckConnected(g);
  FormulationHandle h;
  h.kind = "gomory-hu";
  h.node_ids = g.nodes();
  for (const graphs::Edge& e : g.edges()) h.graph_edges.emplace_back(e.u, e.v);
  h.lambda_edges = graphs::CompleteGraphPairs(g);
  for (const NodePair& f : h.lambda_edges) {
    h.designated.push_back(g.SmallerEndpoint(f.first, f.second));
  }
  ModelBuilder b;
  TreeLayout tree = AddSpanningTreeSystem(b, h, g.nodes(), h.lambda_edges);
  const int m = static_cast<int>(h.lambda_edges.size());
  const int x = b.num_variables();
  for (const NodePair& f : h.lambda_edges) {
    for (const NodePair& e : h.graph_edges) {
      b.AddVariable("x_f[" + Pair(h, f) + "," + Pair(h, e) + "]");
    }
  }
  AddBlock(h, "x_f", x, b.num_variables());
  const int num_g = g.num_edges();
  for (int k = 0; k < m; ++k) {
    const NodePair& f = h.lambda_edges[k];
    const int side = h.designated[k] == f.first ? 0 : 1;
    for (int e = 0; e < num_g; ++e) {
      const auto [u, v] = h.graph_edges[e];
      const int xv = x + k * num_g + e;
      const std::string key = "[" + Pair(h, f) + "," + Pair(h, {u, v}) + "]";
      b.AddConstraint("gh.cut+" + key,
                      {{xv, Rat(1)},
                       {tree.MuVar(k, side, u), Rat(1)},
                       {tree.MuVar(k, side, v), Rat(-1)}},
                      RowSense::kGreaterEqual, Rat(0));
      b.AddConstraint("gh.cut-" + key,
                      {{xv, Rat(1)},
                       {tree.MuVar(k, side, v), Rat(1)},
                       {tree.MuVar(k, side, u), Rat(-1)}},
                      RowSense::kGreaterEqual, Rat(0));
    }
  }
  LinearExpr obj;
  for (int k = 0; k < m; ++k) {
    for (int e = 0; e < num_g; ++e) obj.push_back({x + k * num_g + e, g.edge(e).c});
  }
  b.SetObjective(ratlp::ObjectiveSense::kMinimize, obj);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

LinearExpr LexicographicLambdaObjective(const FormulationHandle& h) {
  const Block& lambda = h.block("lambda");
  LinearExpr obj;
  Rat weight(1);
  for (int j = lambda.begin; j < lambda.end; ++j) {
    obj.push_back({j, weight});
    weight *= 2;
  }
  return obj;
}

ratlp::Model LexicographicLambdaModel(const FormulationHandle& gh,
                              const Rat& optimum) {
  ModelBuilder b(gh.model);
  b.AddConstraint("lex.optimal", gh.model.objective().terms, RowSense::kEqual,
                  optimum);
  b.SetObjective(ratlp::ObjectiveSense::kMinimize,
                 LexicographicLambdaObjective(gh));
  return b.Build();
}

ratlp::SolveOutcome SolveGomoryHuLp(const FormulationHandle& gh,
                                    const ratlp::SolveOptions& options) {
  ratlp::SolveOutcome first = ratlp::Solve(gh.model, options);
  if (!first.optimal() || LambdaIntegral(gh, first.primal)) return first;
  ratlp::SolveOutcome lex =
      ratlp::Solve(LexicographicLambdaModel(gh, first.objective), options);
  if (!lex.optimal()) return lex;
  // Report in terms of the original model: same point, original objective.
  lex.objective = gh.model.EvaluateObjective(lex.primal);
  lex.dual.clear();
  lex.basis.clear();
  return lex;
}

FormulationHandle BuildGhTreePolytopeExtension(
    const graphs::Graph& g, const ratlp::SolveOptions& options) {
  FormulationHandle gh = BuildGomoryHuLp(g);
  FormulationHandle h = gh;
  h.kind = "gh-polytope-extension";
  ratlp::OptimalFaceMap map;
  h.model = ratlp::BuildOptimalFaceSystem(gh.model, "gh", options, &map);
  AddBlock(h, "eta", map.first_dual, map.end_dual);
  h.CheckBlocks();
  return h;
}

FormulationHandle BuildTCutLp(const graphs::Graph& g,
                              const std::vector<int>& terminals,
                              const TCutOptions& options) {
  std::vector<int> t_nodes = terminals;
  for (int v : t_nodes) {
    if (v < 0 || v >= g.num_nodes()) {
      throw Error(ErrorCode::kNotFound, "terminal out of range");
    }
  }
  std::sort(t_nodes.begin(), t_nodes.end(),
            [&](int a, int b) { return g.node(a) < g.node(b); });
  if (std::adjacent_find(t_nodes.begin(), t_nodes.end()) != t_nodes.end()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated terminal");
  }
  if (t_nodes.size() < 2 || t_nodes.size() % 2 != 0) {
    throw Error(ErrorCode::kOddTerminalSet,
                "terminal set must have even size >= 2, got " +
                    std::to_string(t_nodes.size()));
  }
  if (g.num_nodes() > options.max_nodes) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "T-cut LP refuses graphs with more than " +
                    std::to_string(options.max_nodes) + " nodes (got " +
                    std::to_string(g.num_nodes()) + ")");
  }
  CheckConnected(g);

  FormulationHandle h = BuildGhTreePolytopeExtension(g, options.solve);
  h.kind = "t-cut";
  const ratlp::Model pinned_objective = h.model.WithObjective(
      {ratlp::ObjectiveSense::kMinimize, LexicographicLambdaObjective(h)});
  ratlp::OptimalFaceMap map;
  ratlp::Model pinned =
      ratlp::BuildOptimalFaceSystem(pinned_objective, "lex", options.solve, &map);
  AddBlock(h, "pi", map.first_dual, map.end_dual);

  h.root = t_nodes[0];
  h.node_order.assign(t_nodes.begin() + 1, t_nodes.end());
  const int n = g.num_nodes();
  const int m = static_cast<int>(h.lambda_edges.size());
  const int num_g = g.num_edges();
  const int k_last = static_cast<int>(h.node_order.size()) - 1;
  const Block lambda = h.block("lambda");
  const Block x_f = h.block("x_f");
  std::vector<std::vector<int>> incident(n);
  for (int k = 0; k < m; ++k) {
    incident[h.lambda_edges[k].first].push_back(k);
    incident[h.lambda_edges[k].second].push_back(k);
  }

  ModelBuilder b(pinned);
  const int y_s = b.num_variables();
  for (int s : h.node_order) {
    for (const NodePair& f : h.lambda_edges) {
      b.AddVariable("y_s[" + g.node(s) + "," + Pair(h, f) + "]");
    }
  }
  AddBlock(h, "y_s", y_s, b.num_variables());
  const int alpha = b.num_variables();
  for (int i = 0; i <= k_last; ++i) {
    for (const NodePair& f : h.lambda_edges) {
      b.AddVariable("alpha[" + std::to_string(i) + "," + Pair(h, f) + "]");
    }
  }
  AddBlock(h, "alpha", alpha, b.num_variables());
  const int nu = b.num_variables();
  for (const NodePair& f : h.lambda_edges) {
    b.AddFreeVariable("nu[" + Pair(h, f) + "]");
  }
  AddBlock(h, "nu", nu, b.num_variables());
  const int theta = b.num_variables();
  for (const NodePair& f : h.lambda_edges) {
    b.AddVariable("theta[" + Pair(h, f) + "]");
  }
  AddBlock(h, "theta", theta, b.num_variables());
  const int y_f = b.num_variables();
  for (const NodePair& f : h.lambda_edges) {
    for (const NodePair& e : h.graph_edges) {
      b.AddVariable("y_f[" + Pair(h, f) + "," + Pair(h, e) + "]");
    }
  }
  AddBlock(h, "y_f", y_f, b.num_variables());

  // r-s path systems. Degree rows at nodes other than r and s only: at r and
  // s the path has a single incident edge, so the row would be violated.
  for (int i = 0; i <= k_last; ++i) {
    const int s = h.node_order[i];
    const int base = y_s + i * m;
    const std::string tag = g.node(s);
    for (int end : {h.root, s}) {
      LinearExpr row;
      for (int k : incident[end]) row.push_back({base + k, Rat(1)});
      b.AddConstraint("tcut.path_end[" + tag + "," + g.node(end) + "]", row,
                      RowSense::kEqual, Rat(1));
    }
    for (int v = 0; v < n; ++v) {
      if (v == h.root || v == s) continue;
      for (int k : incident[v]) {
        LinearExpr row;
        for (int other : incident[v]) {
          row.push_back({base + other, Rat(other == k ? -1 : 1)});
        }
        b.AddConstraint("tcut.path_deg[" + tag + "," + g.node(v) + "," +
                            Pair(h, h.lambda_edges[k]) + "]",
                        row, RowSense::kGreaterEqual, Rat(0));
      }
    }
    for (int k = 0; k < m; ++k) {
      b.AddConstraint("tcut.path_cap[" + tag + "," + Pair(h, h.lambda_edges[k]) + "]",
                      {{base + k, Rat(1)}, {lambda.begin + k, Rat(-1)}},
                      RowSense::kLessEqual, Rat(0));
    }
  }

  // Parity chain D_0 = P_{s_0}, D_i = D_{i-1} xor P_{s_i}, nu = D_k.
  for (int k = 0; k < m; ++k) {
    const std::string f = Pair(h, h.lambda_edges[k]);
    b.AddConstraint("tcut.chain0[" + f + "]",
                    {{alpha + k, Rat(1)}, {y_s + k, Rat(-1)}}, RowSense::kEqual,
                    Rat(0));
    for (int i = 1; i <= k_last; ++i) {
      const int a = alpha + i * m + k;
      const int prev = alpha + (i - 1) * m + k;
      const int y = y_s + i * m + k;
      const std::string key = "[" + std::to_string(i) + "," + f + "]";
      b.AddConstraint("tcut.xor_a" + key,
                      {{a, Rat(-1)}, {prev, Rat(1)}, {y, Rat(1)}},
                      RowSense::kGreaterEqual, Rat(0));
      b.AddConstraint("tcut.xor_b" + key,
                      {{a, Rat(1)}, {prev, Rat(-1)}, {y, Rat(1)}},
                      RowSense::kGreaterEqual, Rat(0));
      b.AddConstraint("tcut.xor_c" + key,
                      {{a, Rat(1)}, {prev, Rat(1)}, {y, Rat(-1)}},
                      RowSense::kGreaterEqual, Rat(0));
      b.AddConstraint("tcut.xor_d" + key,
                      {{a, Rat(1)}, {prev, Rat(1)}, {y, Rat(1)}},
                      RowSense::kLessEqual, Rat(2));
    }
    b.AddConstraint("tcut.parity[" + f + "]",
                    {{alpha + k_last * m + k, Rat(1)}, {nu + k, Rat(-1)}},
                    RowSense::kEqual, Rat(0));
  }

  // Selection of one T-cut tree edge and the cut it induces.
  LinearExpr pick;
  for (int k = 0; k < m; ++k) pick.push_back({theta + k, Rat(1)});
  b.AddConstraint("tcut.select", pick, RowSense::kEqual, Rat(1));
  for (int k = 0; k < m; ++k) {
    const std::string f = Pair(h, h.lambda_edges[k]);
    b.AddConstraint("tcut.select_cap[" + f + "]",
                    {{theta + k, Rat(1)}, {nu + k, Rat(-1)}},
                    RowSense::kLessEqual, Rat(0));
    for (int e = 0; e < num_g; ++e) {
      const std::string key = "[" + f + "," + Pair(h, h.graph_edges[e]) + "]";
      const int xv = x_f.begin + k * num_g + e;
      b.AddConstraint("tcut.cut" + key,
                      {{y_f + k * num_g + e, Rat(1)}, {xv, Rat(-1)},
                       {theta + k, Rat(-1)}},
                      RowSense::kGreaterEqual, Rat(-1));
      b.AddConstraint("tcut.cut_cap" + key, {{xv, Rat(1)}},
                      RowSense::kLessEqual, Rat(1));
    }
  }
  LinearExpr obj;
  for (int k = 0; k < m; ++k) {
    for (int e = 0; e < num_g; ++e) {
      obj.push_back({y_f + k * num_g + e, g.edge(e).c});
    }
  }
  b.SetObjective(ratlp::ObjectiveSense::kMinimize, obj);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

}  // namespace extform::formulations
