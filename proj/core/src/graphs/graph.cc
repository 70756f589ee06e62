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

#include "extform/graphs/graph.h"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <numeric>
#include <queue>

#include "extform/error.h"

namespace extform::graphs {
namespace {

long long PairKey(int u, int v) {
  NodePair p = MakePair(u, v);
  return (static_cast<long long>(p.first) << 32) | p.second;
}

void CheckId(const std::string& id) {
  if (id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty node id");
  }
  for (char ch : id) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      throw Error(ErrorCode::kInvalidArgument,
                  "node id '" + id + "' contains whitespace or a comma");
    }
  }
}

}  // namespace

Graph Graph::Create(std::vector<std::string> nodes, std::vector<Edge> edges) {
  Graph g;
  g.nodes_ = std::move(nodes);
  for (int v = 0; v < g.num_nodes(); ++v) {
    CheckId(g.nodes_[v]);
    if (!g.index_.emplace(g.nodes_[v], v).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate node id '" + g.nodes_[v] + "'");
    }
  }
  g.adjacency_.assign(g.nodes_.size(), {});
  g.edges_ = std::move(edges);
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edges_[e];
    if (edge.u < 0 || edge.v < 0 || edge.u >= g.num_nodes() ||
        edge.v >= g.num_nodes()) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (edge.u == edge.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at '" + g.nodes_[edge.u] + "'");
    }
    if (sgn(edge.c) < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative capacity on edge " +
                      g.EdgeLabel(MakePair(edge.u, edge.v)));
    }
    if (!g.edge_index_.emplace(PairKey(edge.u, edge.v), e).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "parallel edge " + g.EdgeLabel(MakePair(edge.u, edge.v)));
    }
    g.adjacency_[edge.u].emplace_back(edge.v, e);
    g.adjacency_[edge.v].emplace_back(edge.u, e);
  }
  return g;
}

Graph Graph::FromIds(
    std::vector<std::string> nodes,
    const std::vector<std::tuple<std::string, std::string, Rat>>& edges) {
  std::unordered_map<std::string, int> index;
  for (int v = 0; v < static_cast<int>(nodes.size()); ++v) index[nodes[v]] = v;
  std::vector<Edge> list;
  for (const auto& [a, b, c] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorCode::kNotFound,
                  "edge " + a + "-" + b + " references an unknown node");
    }
    list.push_back({ia->second, ib->second, c});
  }
  return Create(std::move(nodes), std::move(list));
}

std::optional<int> Graph::FindNode(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::NodeIndex(std::string_view id) const {
  std::optional<int> v = FindNode(id);
  if (!v) {
    throw Error(ErrorCode::kNotFound, "unknown node '" + std::string(id) + "'");
  }
  return *v;
}

std::optional<int> Graph::FindEdge(int u, int v) const {
  auto it = edge_index_.find(PairKey(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::IsConnected() const {
  return IsConnected(std::vector<bool>(nodes_.size(), true));
}

bool Graph::IsConnected(const std::vector<bool>& mask) const {
  int start = -1;
  int kept = 0;
  for (int v = 0; v < num_nodes(); ++v) {
    if (mask[v]) {
      ++kept;
      if (start < 0) start = v;
    }
  }
  if (kept <= 1) return true;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : adjacency_[v]) {
      if (mask[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == kept;
}

std::size_t Graph::CapacityEncodingLength() const {
  std::size_t total = 0;
  for (const Edge& e : edges_) total += BitLength(e.c);
  return total;
}

std::vector<int> Graph::NodesById() const {
  std::vector<int> order(nodes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return nodes_[a] < nodes_[b]; });
  return order;
}

std::vector<NodePair> CompleteGraphPairs(const Graph& g) {
  std::vector<int> order = g.NodesById();
  std::vector<NodePair> pairs;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      pairs.push_back(MakePair(order[i], order[j]));
    }
  }
  return pairs;
}

Digraph Digraph::FromGraph(const Graph& g) {
  Digraph d;
  d.out_.assign(g.num_nodes(), {});
  d.in_.assign(g.num_nodes(), {});
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    for (auto [tail, head] : {std::pair{edge.u, edge.v}, {edge.v, edge.u}}) {
      int a = d.num_arcs();
      d.arcs_.push_back({tail, head, edge.c, e});
      d.out_[tail].push_back(a);
      d.in_[head].push_back(a);
    }
  }
  return d;
}

bool Tree::Contains(const NodePair& e) const {
  return std::binary_search(edges.begin(), edges.end(), MakePair(e.first, e.second));
}

Tree MakeTree(int num_nodes, std::vector<NodePair> edges) {
  for (NodePair& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= num_nodes ||
        e.second >= num_nodes || e.first == e.second) {
      throw Error(ErrorCode::kInvalidArgument, "invalid tree edge");
    }
    e = MakePair(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated tree edge");
  }
  return Tree{num_nodes, std::move(edges)};
}

bool IsSpanningTree(const Tree& tree) {
  if (tree.num_nodes == 0) return tree.edges.empty();
  if (static_cast<int>(tree.edges.size()) != tree.num_nodes - 1) return false;
  std::vector<int> parent(tree.num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const NodePair& e : tree.edges) {
    int a = find(e.first);
    int b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Cut MakeCut(const Graph& g, std::vector<bool> shore) {
  if (static_cast<int>(shore.size()) != g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "shore size mismatch");
  }
  int inside = static_cast<int>(std::count(shore.begin(), shore.end(), true));
  if (inside == 0 || inside == g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cut shore must be a nonempty proper subset");
  }
  Cut cut;
  cut.shore = std::move(shore);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (cut.shore[g.edge(e).u] != cut.shore[g.edge(e).v]) {
      cut.crossing.push_back(e);
      cut.capacity += g.edge(e).c;
    }
  }
  return cut;
}

bool SameCrossingEdges(const Cut& a, const Cut& b) {
  return a.crossing == b.crossing;
}

std::string ShoreLabel(const Graph& g, const Cut& cut) {
  std::vector<std::string> ids;
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (cut.shore[v]) ids.push_back(g.node(v));
  }
  std::sort(ids.begin(), ids.end());
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + "}";
}

Graph ParseGraphJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("graph json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw Error(ErrorCode::kParse, "graph json: missing \"nodes\" array");
  }
  std::vector<std::string> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) {
      throw Error(ErrorCode::kParse, "graph json: node ids must be strings");
    }
    nodes.push_back(n.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw Error(ErrorCode::kParse, "graph json: \"edges\" must be an array");
    }
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
          !e.contains("c") || !e["u"].is_string() || !e["v"].is_string()) {
        throw Error(ErrorCode::kParse,
                    "graph json: each edge needs string \"u\", \"v\" and \"c\"");
      }
      const auto& c = e["c"];
      Rat cap;
      if (c.is_string()) {
        cap = ParseRat(c.get<std::string>());
      } else if (c.is_number_integer()) {
        cap = Rat(std::to_string(c.get<long long>()));
      } else {
        throw Error(ErrorCode::kParse,
                    "graph json: capacity must be an integer or a string "
                    "like \"3/2\" or \"0.25\"");
      }
      edges.emplace_back(e["u"].get<std::string>(), e["v"].get<std::string>(),
                         cap);
    }
  }
  return Graph::FromIds(std::move(nodes), edges);
}

std::string GraphToJson(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["nodes"] = g.nodes();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    doc["edges"].push_back(
        {{"u", g.node(e.u)}, {"v", g.node(e.v)}, {"c", FormatRat(e.c)}});
  }
  return doc.dump(2);
}

}  // namespace extform::graphs
