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

#include "extform/graphs/brute_force.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "extform/error.h"
#include "extform/graphs/algorithms.h"

namespace extform::graphs {

TCutResult BruteForceMinTCut(const Graph& g, const std::vector<int>& terminals) {
  std::vector<bool> in_t(g.num_nodes(), false);
  for (int v : terminals) {
    if (v < 0 || v >= g.num_nodes()) {
      throw Error(ErrorCode::kNotFound, "terminal out of range");
    }
    if (in_t[v]) throw Error(ErrorCode::kInvalidArgument, "repeated terminal");
    in_t[v] = true;
  }
  if (terminals.size() < 2 || terminals.size() % 2 != 0) {
    throw Error(ErrorCode::kOddTerminalSet,
                "terminal set must have even size >= 2, got " +
                    std::to_string(terminals.size()));
  }
  const int n = g.num_nodes();
  if (n > kMaxEnumerationNodes) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "brute-force T-cut refuses graphs with more than " +
                    std::to_string(kMaxEnumerationNodes) + " nodes");
  }
  std::optional<TCutResult> best;
  // Shores are subsets of {1, ..., n-1}; bit i - 1 encodes node i.
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<bool> shore(n, false);
    int odd = 0;
    for (int v = 1; v < n; ++v) {
      if (mask >> (v - 1) & 1u) {
        shore[v] = true;
        odd ^= in_t[v] ? 1 : 0;
      }
    }
    if (!odd) continue;
    Cut cut = MakeCut(g, std::move(shore));
    if (!best || cut.capacity < best->value) {
      best = TCutResult{cut.capacity, std::move(cut)};
    }
  }
  return *best;
}

SteinerResult BruteForceSteiner(const Graph& g,
                                const std::vector<int>& terminals) {
  const int n = g.num_nodes();
  std::vector<bool> in_s(n, false);
  for (int v : terminals) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kNotFound, "terminal out of range");
    in_s[v] = true;
  }
  std::vector<int> optional;
  for (int v = 0; v < n; ++v) {
    if (!in_s[v]) optional.push_back(v);
  }
  if (static_cast<int>(optional.size()) > kMaxSteinerOptionalNodes) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "brute-force Steiner refuses more than " +
                    std::to_string(kMaxSteinerOptionalNodes) +
                    " non-terminal nodes");
  }
  SteinerResult best;
  if (std::count(in_s.begin(), in_s.end(), true) <= 1) return best;
  bool found = false;
  for (unsigned mask = 0; mask < (1u << optional.size()); ++mask) {
    std::vector<bool> keep = in_s;
    for (std::size_t i = 0; i < optional.size(); ++i) {
      if (mask >> i & 1u) keep[optional[i]] = true;
    }
    if (!g.IsConnected(keep)) continue;
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v) {
      if (keep[v]) nodes.push_back(v);
    }
    Graph sub = InducedSubgraph(g, nodes);
    SpanningTree mst = Kruskal(sub);
    if (found && !(mst.weight < best.value)) continue;
    found = true;
    best.value = mst.weight;
    best.edges.clear();
    for (int e : mst.edges) {
      best.edges.push_back(
          *g.FindEdge(nodes[sub.edge(e).u], nodes[sub.edge(e).v]));
    }
    std::sort(best.edges.begin(), best.edges.end());
  }
  if (!found) {
    throw Error(ErrorCode::kDisconnected, "terminals are not connected");
  }
  return best;
}

void ForEachSpanningTreeOfComplete(
    int n, const std::function<void(const Tree&)>& visit) {
  if (n > kMaxSpanningTreeNodes) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "spanning-tree enumeration refuses more than " +
                    std::to_string(kMaxSpanningTreeNodes) + " nodes");
  }
  if (n <= 1) {
    visit(Tree{std::max(n, 0), {}});
    return;
  }
  if (n == 2) {
    visit(MakeTree(2, {{0, 1}}));
    return;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : code) ++degree[x];
    std::vector<NodePair> edges;
    for (int x : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
        }
      }
    }
    visit(MakeTree(n, std::move(edges)));
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
}

std::vector<std::vector<int>> SpanningTreesOf(const Graph& g) {
  const int n = g.num_nodes();
  if (n > kMaxEnumerationNodes) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "spanning-tree enumeration refuses more than " +
                    std::to_string(kMaxEnumerationNodes) + " nodes");
  }
  std::vector<std::vector<int>> trees;
  if (n <= 1) {
    trees.emplace_back();
    return trees;
  }
  std::vector<int> chosen;
  // Union-find with rollback over the edges chosen so far.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  auto recurse = [&](auto& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      trees.push_back(chosen);
      return;
    }
    int needed = n - 1 - static_cast<int>(chosen.size());
    for (int e = next; e + needed <= g.num_edges(); ++e) {
      int a = find(g.edge(e).u);
      int b = find(g.edge(e).v);
      if (a == b) continue;
      parent[a] = b;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      parent[a] = a;
    }
  };
  recurse(recurse, 0);
  return trees;
}

}  // namespace extform::graphs
