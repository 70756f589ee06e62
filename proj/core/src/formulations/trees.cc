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

#include "extform/formulations/trees.h"

#include <map>

#include "extform/error.h"

namespace extform::formulations {
namespace {

using ratlp::LinearExpr;
using ratlp::ModelBuilder;
using ratlp::RowSense;

std::string Bracket(std::initializer_list<std::string> parts) {
  std::string out = "[";
  bool first = true;
  for (const std::string& p : parts) {
    if (!first) out += ",";
    out += p;
    first = false;
  }
  return out + "]";
}

void CheckEdges(int n, const std::vector<NodePair>& edges) {
  for (const NodePair& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n ||
        e.first == e.second) {
      throw Error(ErrorCode::kInvalidArgument, "invalid tree-system edge");
    }
  }
}

std::vector<NodePair> EdgesOf(const graphs::Graph& g) {
  std::vector<NodePair> edges;
  for (const graphs::Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return edges;
}

void SetWeightObjective(ModelBuilder& b, const graphs::Graph& g, int lambda) {
  LinearExpr obj;
  for (int k = 0; k < g.num_edges(); ++k) obj.push_back({lambda + k, g.edge(k).c});
  b.SetObjective(ratlp::ObjectiveSense::kMinimize, obj);
}

}  // namespace

TreeLayout AddSpanningTreeSystem(ModelBuilder& b, FormulationHandle& h,
                                 const std::vector<std::string>& ids,
                                 const std::vector<NodePair>& edges,
                                 ParentRows parent_rows) {
  const int n = static_cast<int>(ids.size());
  CheckEdges(n, edges);
  TreeLayout t;
  t.num_nodes = n;
  t.edges = edges;
  const int m = static_cast<int>(edges.size());
  t.lambda = b.num_variables();
  for (const NodePair& e : edges) {
    b.AddVariable("lambda" + Bracket({ids[e.first], ids[e.second]}));
  }
  AddBlock(h, "lambda", t.lambda, b.num_variables());
  t.mu = b.num_variables();
  for (int k = 0; k < m; ++k) {
    const NodePair& e = edges[k];
    for (int side = 0; side < 2; ++side) {
      const int u = side == 0 ? e.first : e.second;
      const int other = side == 0 ? e.second : e.first;
      for (int v = 0; v < n; ++v) {
        // mu_{uv,u,v} = mu_{uv,v,u} = 0 are stated as fixed bounds.
        std::optional<Rat> upper;
        if (v == other) upper = Rat(0);
        b.AddVariable("mu" + Bracket({ids[e.first], ids[e.second], ids[u], ids[v]}),
                      Rat(0), upper);
      }
    }
  }
  AddBlock(h, "mu", t.mu, b.num_variables());

  LinearExpr count;
  for (int k = 0; k < m; ++k) count.push_back({t.lambda + k, Rat(1)});
  b.AddConstraint("tree.count", count, RowSense::kEqual, Rat(n - 1));
  for (int k = 0; k < m; ++k) {
    const NodePair& e = edges[k];
    for (int w = 0; w < n; ++w) {
      b.AddConstraint(
          "tree.split" + Bracket({ids[e.first], ids[e.second], ids[w]}),
          {{t.lambda + k, Rat(1)},
           {t.MuVar(k, 0, w), Rat(-1)},
           {t.MuVar(k, 1, w), Rat(-1)}},
          RowSense::kEqual, Rat(0));
    }
  }
  // incident[u] lists (edge index, side of the other endpoint w).
  std::vector<std::vector<std::pair<int, int>>> incident(n);
  std::map<NodePair, int> edge_index;
  for (int k = 0; k < m; ++k) {
    incident[edges[k].first].emplace_back(k, 1);
    incident[edges[k].second].emplace_back(k, 0);
    edge_index[MakePair(edges[k].first, edges[k].second)] = k;
  }
  auto parent_row = [&](int u, int v) {
    LinearExpr row;
    auto it = edge_index.find(MakePair(u, v));
    if (it != edge_index.end()) row.push_back({t.lambda + it->second, Rat(1)});
    for (const auto& [k, side] : incident[u]) {
      const int w = side == 0 ? edges[k].first : edges[k].second;
      if (w == v) continue;
      row.push_back({t.MuVar(k, side, v), Rat(1)});
    }
    b.AddConstraint("tree.parent" + Bracket({ids[u], ids[v]}), row,
                    RowSense::kEqual, Rat(1));
  };
  switch (parent_rows) {
    case ParentRows::kAllOrderedPairs:
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u != v) parent_row(u, v);
        }
      }
      break;
    case ParentRows::kEdgeOrientations:
      for (const NodePair& e : edges) {
        parent_row(e.first, e.second);
        parent_row(e.second, e.first);
      }
      break;
    case ParentRows::kEdgesOnce:
      for (const NodePair& e : edges) parent_row(e.first, e.second);
      break;
  }
  return t;
}

int AddArborescenceSystem(ModelBuilder& b, FormulationHandle& h,
                          const std::vector<std::string>& ids,
                          const std::vector<NodePair>& edges, int root) {
  const int n = static_cast<int>(ids.size());
  CheckEdges(n, edges);
  if (root < 0 || root >= n) {
    throw Error(ErrorCode::kNotFound, "arborescence root out of range");
  }
  const int m = static_cast<int>(edges.size());
  // Arc 2k = (first, second), arc 2k + 1 = (second, first).
  auto tail = [&](int a) { return a % 2 == 0 ? edges[a / 2].first : edges[a / 2].second; };
  auto head = [&](int a) { return a % 2 == 0 ? edges[a / 2].second : edges[a / 2].first; };
  const int lambda = b.num_variables();
  for (const NodePair& e : edges) {
    b.AddVariable("lambda" + Bracket({ids[e.first], ids[e.second]}));
  }
  AddBlock(h, "lambda", lambda, b.num_variables());
  const int nu = b.num_variables();
  for (int a = 0; a < 2 * m; ++a) {
    b.AddVariable("nu" + Bracket({ids[tail(a)], ids[head(a)]}));
  }
  AddBlock(h, "nu", nu, b.num_variables());
  std::vector<int> targets;
  for (int w = 0; w < n; ++w) {
    if (w != root) targets.push_back(w);
  }
  const int sigma = b.num_variables();
  for (int w : targets) {
    for (int a = 0; a < 2 * m; ++a) {
      b.AddVariable("sigma" + Bracket({ids[w], ids[tail(a)], ids[head(a)]}));
    }
  }
  AddBlock(h, "sigma", sigma, b.num_variables());
  auto sigma_var = [&](int i, int a) { return sigma + i * 2 * m + a; };

  LinearExpr count;
  for (int a = 0; a < 2 * m; ++a) count.push_back({nu + a, Rat(1)});
  b.AddConstraint("arb.count", count, RowSense::kEqual, Rat(n - 1));
  for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
    const int w = targets[i];
    for (int a = 0; a < 2 * m; ++a) {
      b.AddConstraint(
          "arb.cover" + Bracket({ids[w], ids[tail(a)], ids[head(a)]}),
          {{nu + a, Rat(1)}, {sigma_var(i, a), Rat(-1)}},
          RowSense::kGreaterEqual, Rat(0));
    }
    LinearExpr out_root;
    for (int a = 0; a < 2 * m; ++a) {
      if (tail(a) == root) out_root.push_back({sigma_var(i, a), Rat(1)});
      if (head(a) == root) out_root.push_back({sigma_var(i, a), Rat(-1)});
    }
    b.AddConstraint("arb.source" + Bracket({ids[w]}), out_root,
                    RowSense::kEqual, Rat(1));
    for (int v = 0; v < n; ++v) {
      if (v == root || v == w) continue;
      LinearExpr balance;
      for (int a = 0; a < 2 * m; ++a) {
        if (tail(a) == v) balance.push_back({sigma_var(i, a), Rat(1)});
        if (head(a) == v) balance.push_back({sigma_var(i, a), Rat(-1)});
      }
      b.AddConstraint("arb.flow" + Bracket({ids[w], ids[v]}), balance,
                      RowSense::kEqual, Rat(0));
    }
  }
  for (int k = 0; k < m; ++k) {
    b.AddConstraint(
        "arb.link" + Bracket({ids[edges[k].first], ids[edges[k].second]}),
        {{lambda + k, Rat(1)}, {nu + 2 * k, Rat(-1)}, {nu + 2 * k + 1, Rat(-1)}},
        RowSense::kEqual, Rat(0));
  }
  return lambda;
}

FormulationHandle BuildTreeExtension(const graphs::Graph& g,
                                     ParentRows parent_rows) {
  if (g.num_nodes() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "tree extension needs at least two nodes");
  }
  FormulationHandle h;
  h.kind = "tree-extension";
  h.node_ids = g.nodes();
  h.graph_edges = EdgesOf(g);
  h.lambda_edges = h.graph_edges;
  ModelBuilder b;
  TreeLayout t = AddSpanningTreeSystem(b, h, g.nodes(), h.graph_edges, parent_rows);
  SetWeightObjective(b, g, t.lambda);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

FormulationHandle BuildArborescenceExtension(const graphs::Graph& g, int root) {
  if (g.num_nodes() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "arborescence extension needs at least two nodes");
  }
  FormulationHandle h;
  h.kind = "arborescence-extension";
  h.node_ids = g.nodes();
  h.graph_edges = EdgesOf(g);
  h.lambda_edges = h.graph_edges;
  h.root = root;
  ModelBuilder b;
  int lambda = AddArborescenceSystem(b, h, g.nodes(), h.graph_edges, root);
  SetWeightObjective(b, g, lambda);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

}  // namespace extform::formulations
