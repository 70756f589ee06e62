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

#ifndef EXTFORM_GRAPHS_ALGORITHMS_H_
#define EXTFORM_GRAPHS_ALGORITHMS_H_

#include <optional>
#include <vector>

#include "extform/graphs/graph.h"

namespace extform::graphs {

struct ShortestPath {
  std::optional<Rat> distance;  // nullopt when t is unreachable
  std::vector<int> nodes;       // s, ..., t
  std::vector<int> edges;
};

// Exact Dijkstra on nonnegative weights.
ShortestPath Dijkstra(const Graph& g, int s, int t);
std::vector<std::optional<Rat>> DistancesFrom(const Graph& g, int s);

// Complete graph on V(G) weighted by shortest-path distance. Pairs with no
// connecting path are listed in `unreachable` and omitted from `closure`.
struct MetricClosure {
  Graph closure;
  std::vector<NodePair> unreachable;

  bool complete() const { return unreachable.empty(); }
};

MetricClosure MetricClosureOf(const Graph& g);

// Subgraph of G induced by `keep`, with node ids preserved.
Graph InducedSubgraph(const Graph& g, const std::vector<int>& keep);

struct SpanningTree {
  Tree tree;
  std::vector<int> edges;  // edge indices of G
  Rat weight;
};

// Throws Error(kDisconnected) when G is not connected.
SpanningTree Kruskal(const Graph& g);

struct MinCutResult {
  Rat value;
  Cut cut;  // shore contains s
};

// Edmonds-Karp max-flow. The shore is the residual-reachable set of s.
MinCutResult MinimumStCut(const Graph& g, int s, int t);

// Gomory-Hu tree of a connected graph via Gusfield's method; tree edges of
// the complete graph on V(G).
struct GomoryHuTree {
  Tree tree;
  std::vector<Rat> weight;  // parallel to tree.edges
};

GomoryHuTree GusfieldTree(const Graph& g);

// Component of H - f that contains the endpoint of f with the smaller id.
Cut FundamentalCut(const Graph& g, const Tree& h, const NodePair& f);

// Sum over tree edges f of c(delta(U_f)). Computed both as a sum of cut
// capacities and as sum of c(e) times the length of the H-path joining the
// ends of e; throws Error(kInternal) when the two disagree.
Rat RequirementValue(const Graph& g, const Tree& h);

// Edges on the unique r-s path of a tree, in path order.
std::vector<NodePair> TreePath(const Tree& h, int r, int s);

std::vector<NodePair> SymmetricDifference(const std::vector<NodePair>& x,
                                          const std::vector<NodePair>& y);

}  // namespace extform::graphs

#endif  // EXTFORM_GRAPHS_ALGORITHMS_H_
