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

#ifndef EXTFORM_GRAPHS_GRAPH_H_
#define EXTFORM_GRAPHS_GRAPH_H_

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "extform/ratlp/rational.h"

namespace extform::graphs {

// Unordered node pair {u, v} stored with u < v (node indices).
using NodePair = std::pair<int, int>;

inline NodePair MakePair(int a, int b) {
  return a < b ? NodePair{a, b} : NodePair{b, a};
}

struct Edge {
  int u = 0;
  int v = 0;
  Rat c;  // capacity or cost, >= 0
};

// Simple undirected graph with nonnegative exact edge weights. Node ids are
// nonempty and contain neither whitespace nor commas.
class Graph {
 public:
  Graph() = default;

  // Throws Error(kInvalidArgument) on self-loops, parallel edges, negative
  // capacities, duplicate or malformed ids, or out-of-range endpoints.
  static Graph Create(std::vector<std::string> nodes, std::vector<Edge> edges);

  // Convenience for literals: edges given by node ids.
  static Graph FromIds(
      std::vector<std::string> nodes,
      const std::vector<std::tuple<std::string, std::string, Rat>>& edges);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::string& node(int v) const { return nodes_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  std::optional<int> FindNode(std::string_view id) const;
  // Throws Error(kNotFound).
  int NodeIndex(std::string_view id) const;
  std::optional<int> FindEdge(int u, int v) const;

  // (neighbor, edge index) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adjacency_[v];
  }

  bool IsConnected() const;
  // Connectivity of the subgraph induced by `mask` (true = kept).
  bool IsConnected(const std::vector<bool>& mask) const;

  // Sum of BitLength over all capacities.
  std::size_t CapacityEncodingLength() const;

  // The endpoint of {u, v} whose id compares smaller.
  int SmallerEndpoint(int u, int v) const {
    return nodes_[u] < nodes_[v] ? u : v;
  }
  // Node indices sorted by id.
  std::vector<int> NodesById() const;

  std::string EdgeLabel(const NodePair& p) const {
    return nodes_[p.first] + "-" + nodes_[p.second];
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> index_;
  std::unordered_map<long long, int> edge_index_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// All pairs {u, v} of the complete graph on `n` nodes ordered by the ids of
// `g`: pairs are compared as (smaller id, larger id) lexicographically.
std::vector<NodePair> CompleteGraphPairs(const Graph& g);

struct Arc {
  int tail = 0;
  int head = 0;
  Rat c;
  int edge = 0;  // originating undirected edge
};

// Bidirected copy of a Graph: edge e = {v, w} becomes arcs 2e = (u, v) and
// 2e + 1 = (v, u), both with cost c(e).
class Digraph {
 public:
  static Digraph FromGraph(const Graph& g);

  int num_nodes() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }
  const std::vector<int>& in_arcs(int v) const { return in_[v]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
};

// Edge subset of the complete graph on `num_nodes` nodes. Edges are kept
// sorted.
struct Tree {
  int num_nodes = 0;
  std::vector<NodePair> edges;

  bool Contains(const NodePair& e) const;
};

Tree MakeTree(int num_nodes, std::vector<NodePair> edges);

// Spans all nodes, has n - 1 edges and no cycle.
bool IsSpanningTree(const Tree& tree);

// Cut delta(U) of a graph.
struct Cut {
  std::vector<bool> shore;     // membership of U
  std::vector<int> crossing;   // edge indices with exactly one end in U
  Rat capacity;
};

// Throws Error(kInvalidArgument) unless U is a nonempty proper subset.
Cut MakeCut(const Graph& g, std::vector<bool> shore);

bool SameCrossingEdges(const Cut& a, const Cut& b);
std::string ShoreLabel(const Graph& g, const Cut& cut);

// Graph JSON: {"nodes":[...], "edges":[{"u":..,"v":..,"c":"p/q"}]}.
// Capacities are strings in p/q or decimal form, or JSON integers.
Graph ParseGraphJson(std::string_view text);
std::string GraphToJson(const Graph& g);

}  // namespace extform::graphs

#endif  // EXTFORM_GRAPHS_GRAPH_H_
