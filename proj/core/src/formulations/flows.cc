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

#include "extform/formulations/flows.h"

#include <algorithm>
#include <string>

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

void CheckDistinct(const graphs::Graph& g, int s, int t) {
  if (s < 0 || t < 0 || s >= g.num_nodes() || t >= g.num_nodes()) {
    throw Error(ErrorCode::kNotFound, "node index out of range");
  }
  if (s == t) {
    throw Error(ErrorCode::kInvalidArgument, "source and sink coincide");
  }
}

std::vector<NodePair> EdgesOf(const graphs::Graph& g) {
  std::vector<NodePair> edges;
  for (const graphs::Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return edges;
}

}  // namespace

FormulationHandle BuildShortestPathLp(const graphs::Graph& g, int s, int t) {
  CheckDistinct(g, s, t);
  const graphs::Digraph d = graphs::Digraph::FromGraph(g);
  FormulationHandle h;
  h.kind = "shortest-path";
  h.node_ids = g.nodes();
  h.graph_edges = EdgesOf(g);
  ModelBuilder b;
  for (const graphs::Arc& a : d.arcs()) {
    b.AddVariable("x" + Bracket({g.node(a.tail), g.node(a.head)}), Rat(0),
                  Rat(1));
  }
  AddBlock(h, "x", 0, b.num_variables());
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (v == t) continue;
    LinearExpr row;
    for (int a : d.out_arcs(v)) row.push_back({a, Rat(1)});
    for (int a : d.in_arcs(v)) row.push_back({a, Rat(-1)});
    b.AddConstraint((v == s ? "supply" : "flow") + Bracket({g.node(v)}), row,
                    RowSense::kEqual, Rat(v == s ? 1 : 0));
  }
  LinearExpr obj;
  for (int a = 0; a < d.num_arcs(); ++a) obj.push_back({a, d.arc(a).c});
  b.SetObjective(ratlp::ObjectiveSense::kMinimize, obj);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

FormulationHandle BuildStCutLp(const graphs::Graph& g, int s, int t) {
  CheckDistinct(g, s, t);
  FormulationHandle h;
  h.kind = "st-cut";
  h.node_ids = g.nodes();
  h.graph_edges = EdgesOf(g);
  ModelBuilder b;
  for (int v = 0; v < g.num_nodes(); ++v) b.AddFreeVariable("z" + Bracket({g.node(v)}));
  AddBlock(h, "z", 0, g.num_nodes());
  const int x = b.num_variables();
  for (const graphs::Edge& e : g.edges()) {
    b.AddFreeVariable("x" + Bracket({g.node(e.u), g.node(e.v)}));
  }
  AddBlock(h, "x", x, b.num_variables());
  b.AddConstraint("source", {{s, Rat(1)}}, RowSense::kEqual, Rat(0));
  b.AddConstraint("sink", {{t, Rat(1)}}, RowSense::kEqual, Rat(1));
  for (int k = 0; k < g.num_edges(); ++k) {
    const graphs::Edge& e = g.edge(k);
    const std::string key = Bracket({g.node(e.u), g.node(e.v)});
    b.AddConstraint("sep+" + key, {{x + k, Rat(1)}, {e.u, Rat(1)}, {e.v, Rat(-1)}},
                    RowSense::kGreaterEqual, Rat(0));
    b.AddConstraint("sep-" + key, {{x + k, Rat(1)}, {e.v, Rat(1)}, {e.u, Rat(-1)}},
                    RowSense::kGreaterEqual, Rat(0));
  }
  LinearExpr obj;
  for (int k = 0; k < g.num_edges(); ++k) obj.push_back({x + k, g.edge(k).c});
  b.SetObjective(ratlp::ObjectiveSense::kMinimize, obj);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

FormulationHandle BuildSteinerApprox(const graphs::Graph& g,
                                     const std::vector<int>& terminals,
                                     TreeBackend backend) {
  std::vector<int> s_nodes = terminals;
  for (int v : s_nodes) {
    if (v < 0 || v >= g.num_nodes()) {
      throw Error(ErrorCode::kNotFound, "terminal out of range");
    }
  }
  std::sort(s_nodes.begin(), s_nodes.end(),
            [&](int a, int b) { return g.node(a) < g.node(b); });
  s_nodes.erase(std::unique(s_nodes.begin(), s_nodes.end()), s_nodes.end());
  if (s_nodes.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "Steiner LP needs at least two distinct terminals");
  }
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected,
                "graph is not connected; the metric closure is infinite");
  }
  const graphs::Digraph d = graphs::Digraph::FromGraph(g);
  const int q = static_cast<int>(s_nodes.size());
  std::vector<std::string> local_ids;
  for (int v : s_nodes) local_ids.push_back(g.node(v));
  // Local pairs (i, j), i < j, are lexicographic because s_nodes is sorted.
  std::vector<NodePair> local_edges;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) local_edges.emplace_back(i, j);
  }

  FormulationHandle h;
  h.kind = "steiner-approx";
  h.node_ids = g.nodes();
  h.graph_edges = EdgesOf(g);
  for (const NodePair& e : local_edges) {
    h.lambda_edges.emplace_back(s_nodes[e.first], s_nodes[e.second]);
  }
  h.node_order = s_nodes;
  ModelBuilder b;
  int lambda = 0;
  if (backend == TreeBackend::kSplit) {
    lambda = AddSpanningTreeSystem(b, h, local_ids, local_edges).lambda;
  } else {
    lambda = AddArborescenceSystem(b, h, local_ids, local_edges, 0);
    h.root = s_nodes[0];
  }
  const int num_arcs = d.num_arcs();
  const int x = b.num_variables();
  for (const NodePair& e : local_edges) {
    for (const graphs::Arc& a : d.arcs()) {
      b.AddVariable("x_e" + Bracket({local_ids[e.first], local_ids[e.second],
                                     g.node(a.tail), g.node(a.head)}));
    }
  }
  AddBlock(h, "x_e", x, b.num_variables());
  for (int k = 0; k < static_cast<int>(local_edges.size()); ++k) {
    const int s = s_nodes[local_edges[k].first];
    const int t = s_nodes[local_edges[k].second];
    const std::string pair = g.node(s) + "," + g.node(t);
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (v == t) continue;
      LinearExpr row;
      for (int a : d.out_arcs(v)) row.push_back({x + k * num_arcs + a, Rat(1)});
      for (int a : d.in_arcs(v)) row.push_back({x + k * num_arcs + a, Rat(-1)});
      if (v == s) {
        row.push_back({lambda + k, Rat(-1)});
        b.AddConstraint("steiner.supply[" + pair + "]", row, RowSense::kEqual,
                        Rat(0));
      } else {
        b.AddConstraint("steiner.flow[" + pair + "," + g.node(v) + "]", row,
                        RowSense::kEqual, Rat(0));
      }
    }
    for (int a = 0; a < num_arcs; ++a) {
      b.AddConstraint("steiner.cap[" + pair + "," + g.node(d.arc(a).tail) + "," +
                          g.node(d.arc(a).head) + "]",
                      {{x + k * num_arcs + a, Rat(1)}, {lambda + k, Rat(-1)}},
                      RowSense::kLessEqual, Rat(0));
    }
  }
  LinearExpr obj;
  for (int k = 0; k < static_cast<int>(local_edges.size()); ++k) {
    for (int a = 0; a < num_arcs; ++a) {
      obj.push_back({x + k * num_arcs + a, d.arc(a).c});
    }
  }
  b.SetObjective(ratlp::ObjectiveSense::kMinimize, obj);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

}  // namespace extform::formulations
