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

#include "extform/graphs/algorithms.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "extform/error.h"

namespace extform::graphs {
namespace {

void CheckNode(const Graph& g, int v) {
  if (v < 0 || v >= g.num_nodes()) {
    throw Error(ErrorCode::kNotFound, "node index out of range");
  }
}

// Adjacency lists of a tree on num_nodes nodes.
std::vector<std::vector<int>> TreeAdjacency(const Tree& h) {
  std::vector<std::vector<int>> adj(h.num_nodes);
  for (const NodePair& e : h.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  return adj;
}

// Nodes reachable from `start` in `h` without using edge `skip`.
std::vector<bool> TreeComponent(const Tree& h, int start, const NodePair& skip) {
  std::vector<std::vector<int>> adj = TreeAdjacency(h);
  std::vector<bool> seen(h.num_nodes, false);
  std::vector<int> stack = {start};
  seen[start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (seen[w] || MakePair(v, w) == skip) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

std::vector<std::optional<Rat>> DistancesFrom(const Graph& g, int s) {
  CheckNode(g, s);
  std::vector<std::optional<Rat>> dist(g.num_nodes());
  std::vector<bool> done(g.num_nodes(), false);
  dist[s] = Rat(0);
  // Dense selection keeps the comparison count predictable for small graphs.
  for (int round = 0; round < g.num_nodes(); ++round) {
    int best = -1;
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (done[v] || !dist[v]) continue;
      if (best < 0 || *dist[v] < *dist[best]) best = v;
    }
    if (best < 0) break;
    done[best] = true;
    for (const auto& [w, e] : g.neighbors(best)) {
      Rat candidate = *dist[best] + g.edge(e).c;
      if (!dist[w] || candidate < *dist[w]) dist[w] = candidate;
    }
  }
  return dist;
}

ShortestPath Dijkstra(const Graph& g, int s, int t) {
  CheckNode(g, s);
  CheckNode(g, t);
  std::vector<std::optional<Rat>> dist(g.num_nodes());
  std::vector<int> via(g.num_nodes(), -1);
  std::vector<bool> done(g.num_nodes(), false);
  dist[s] = Rat(0);
  while (true) {
    int best = -1;
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (done[v] || !dist[v]) continue;
      if (best < 0 || *dist[v] < *dist[best]) best = v;
    }
    if (best < 0 || best == t) break;
    done[best] = true;
    for (const auto& [w, e] : g.neighbors(best)) {
      Rat candidate = *dist[best] + g.edge(e).c;
      if (!dist[w] || candidate < *dist[w]) {
        dist[w] = candidate;
        via[w] = e;
      }
    }
  }
  ShortestPath path;
  path.distance = dist[t];
  if (!dist[t]) return path;
  int v = t;
  path.nodes.push_back(t);
  while (v != s) {
    int e = via[v];
    path.edges.push_back(e);
    v = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
    path.nodes.push_back(v);
  }
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

MetricClosure MetricClosureOf(const Graph& g) {
  MetricClosure result;
  std::vector<Edge> edges;
  for (int s = 0; s < g.num_nodes(); ++s) {
    std::vector<std::optional<Rat>> dist = DistancesFrom(g, s);
    for (int t = s + 1; t < g.num_nodes(); ++t) {
      if (dist[t]) {
        edges.push_back({s, t, *dist[t]});
      } else {
        result.unreachable.emplace_back(s, t);
      }
    }
  }
  result.closure = Graph::Create(g.nodes(), std::move(edges));
  return result;
}

Graph InducedSubgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> local(g.num_nodes(), -1);
  std::vector<std::string> nodes;
  for (int v : keep) {
    CheckNode(g, v);
    local[v] = static_cast<int>(nodes.size());
    nodes.push_back(g.node(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({local[e.u], local[e.v], e.c});
    }
  }
  return Graph::Create(std::move(nodes), std::move(edges));
}

SpanningTree Kruskal(const Graph& g) {
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  std::vector<int> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edge(a).c < g.edge(b).c;
  });
  std::vector<int> parent(g.num_nodes());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  SpanningTree result;
  std::vector<NodePair> pairs;
  for (int e : order) {
    int a = find(g.edge(e).u);
    int b = find(g.edge(e).v);
    if (a == b) continue;
    parent[a] = b;
    result.edges.push_back(e);
    result.weight += g.edge(e).c;
    pairs.push_back(MakePair(g.edge(e).u, g.edge(e).v));
  }
  std::sort(result.edges.begin(), result.edges.end());
  result.tree = MakeTree(g.num_nodes(), std::move(pairs));
  return result;
}

MinCutResult MinimumStCut(const Graph& g, int s, int t) {
  CheckNode(g, s);
  CheckNode(g, t);
  if (s == t) {
    throw Error(ErrorCode::kInvalidArgument, "source and sink coincide");
  }
  // flow[e] is the flow from edge(e).u to edge(e).v, in [-c, c].
  std::vector<Rat> flow(g.num_edges());
  auto residual = [&](int from, int e) -> Rat {
    if (g.edge(e).u == from) return g.edge(e).c - flow[e];
    return g.edge(e).c + flow[e];
  };
  std::vector<int> via(g.num_nodes());
  std::vector<bool> seen(g.num_nodes());
  Rat value;
  while (true) {
    std::fill(seen.begin(), seen.end(), false);
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      int v = queue.front();
      queue.pop();
      for (const auto& [w, e] : g.neighbors(v)) {
        if (seen[w] || sgn(residual(v, e)) <= 0) continue;
        seen[w] = true;
        via[w] = e;
        queue.push(w);
      }
    }
    if (!seen[t]) break;
    Rat push;
    bool first = true;
    for (int v = t; v != s;) {
      int e = via[v];
      int from = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
      Rat r = residual(from, e);
      if (first || r < push) push = r;
      first = false;
      v = from;
    }
    for (int v = t; v != s;) {
      int e = via[v];
      int from = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
      if (g.edge(e).u == from) {
        flow[e] += push;
      } else {
        flow[e] -= push;
      }
      v = from;
    }
    value += push;
  }
  MinCutResult result;
  result.value = value;
  result.cut = MakeCut(g, seen);
  if (result.cut.capacity != value) {
    throw Error(ErrorCode::kInternal, "max-flow value differs from cut capacity");
  }
  return result;
}

GomoryHuTree GusfieldTree(const Graph& g) {
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  const int n = g.num_nodes();
  std::vector<int> parent(n, 0);
  std::vector<Rat> label(n);
  for (int s = 1; s < n; ++s) {
    const int t = parent[s];
    MinCutResult cut = MinimumStCut(g, s, t);
    label[s] = cut.value;
    for (int i = 0; i < n; ++i) {
      if (i != s && cut.cut.shore[i] && parent[i] == t) parent[i] = s;
    }
    if (cut.cut.shore[parent[t]]) {
      parent[s] = parent[t];
      parent[t] = s;
      label[s] = label[t];
      label[t] = cut.value;
    }
  }
  std::vector<std::pair<NodePair, Rat>> labeled;
  for (int v = 0; v < n; ++v) {
    if (parent[v] == v) continue;
    labeled.emplace_back(MakePair(v, parent[v]), label[v]);
  }
  std::sort(labeled.begin(), labeled.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  GomoryHuTree result;
  std::vector<NodePair> edges;
  for (const auto& [e, r] : labeled) {
    edges.push_back(e);
    result.weight.push_back(r);
  }
  result.tree = MakeTree(n, std::move(edges));
  return result;
}

Cut FundamentalCut(const Graph& g, const Tree& h, const NodePair& f) {
  if (h.num_nodes != g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "tree and graph sizes differ");
  }
  if (!h.Contains(f)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge " + g.EdgeLabel(MakePair(f.first, f.second)) +
                    " is not in the tree");
  }
  NodePair key = MakePair(f.first, f.second);
  int designated = g.SmallerEndpoint(key.first, key.second);
  return MakeCut(g, TreeComponent(h, designated, key));
}

std::vector<NodePair> TreePath(const Tree& h, int r, int s) {
  std::vector<std::vector<int>> adj = TreeAdjacency(h);
  std::vector<int> prev(h.num_nodes, -1);
  std::vector<bool> seen(h.num_nodes, false);
  std::vector<int> stack = {r};
  seen[r] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      prev[w] = v;
      stack.push_back(w);
    }
  }
  if (!seen[s]) {
    throw Error(ErrorCode::kInvalidArgument, "nodes are not joined in the tree");
  }
  std::vector<NodePair> path;
  for (int v = s; v != r; v = prev[v]) path.push_back(MakePair(prev[v], v));
  std::reverse(path.begin(), path.end());
  return path;
}

Rat RequirementValue(const Graph& g, const Tree& h) {
  if (!IsSpanningTree(h) || h.num_nodes != g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "requirement value needs a spanning tree of V(G)");
  }
  Rat by_paths;
  for (const Edge& e : g.edges()) {
    by_paths += e.c * Rat(static_cast<long>(TreePath(h, e.u, e.v).size()));
  }
  Rat by_cuts;
  for (const NodePair& f : h.edges) by_cuts += FundamentalCut(g, h, f).capacity;
  if (by_paths != by_cuts) {
    throw Error(ErrorCode::kInternal,
                "requirement value mismatch: " + FormatRat(by_paths) + " vs " +
                    FormatRat(by_cuts));
  }
  return by_cuts;
}

std::vector<NodePair> SymmetricDifference(const std::vector<NodePair>& x,
                                          const std::vector<NodePair>& y) {
  auto normalize = [](std::vector<NodePair> v) {
    for (NodePair& p : v) p = MakePair(p.first, p.second);
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<NodePair> a = normalize(x);
  std::vector<NodePair> b = normalize(y);
  std::vector<NodePair> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace extform::graphs
