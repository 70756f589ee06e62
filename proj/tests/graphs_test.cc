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

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "extform/error.h"
#include "extform/graphs/algorithms.h"
#include "extform/graphs/brute_force.h"
#include "extform/graphs/graph.h"
#include "extform/verify/random_instances.h"

namespace extform::graphs {
namespace {

using verify::Rng;

Graph Path3() {
  return Graph::FromIds({"a", "b", "c"}, {{"a", "b", Rat(2)}, {"b", "c", Rat(1)}});
}

Graph Cycle4() {
  return Graph::FromIds({"a", "b", "c", "d"}, {{"a", "b", Rat(1)},
                                               {"b", "c", Rat(1)},
                                               {"c", "d", Rat(1)},
                                               {"d", "a", Rat(1)}});
}

Graph Triangle123() {
  return Graph::FromIds({"1", "2", "3"}, {{"1", "2", Rat(1)},
                                          {"1", "3", Rat(2)},
                                          {"2", "3", Rat(3)}});
}

Graph Star() {
  return Graph::FromIds({"m", "s1", "s2", "s3"}, {{"m", "s1", Rat(1)},
                                                  {"m", "s2", Rat(1)},
                                                  {"m", "s3", Rat(1)}});
}

std::vector<bool> Shore(const Graph& g, std::initializer_list<const char*> ids) {
  std::vector<bool> shore(g.num_nodes(), false);
  for (const char* id : ids) shore[g.NodeIndex(id)] = true;
  return shore;
}

// Minimum s-t cut value by enumerating every shore containing s.
Rat MinCutByShores(const Graph& g, int s, int t) {
  std::optional<Rat> best;
  const int n = g.num_nodes();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> s & 1u) || (mask >> t & 1u)) continue;
    std::vector<bool> shore(n);
    for (int v = 0; v < n; ++v) shore[v] = mask >> v & 1u;
    Rat cap = MakeCut(g, shore).capacity;
    if (!best || cap < *best) best = cap;
  }
  return *best;
}

// Shortest path length by enumerating simple paths.
std::optional<Rat> ShortestBySimplePaths(const Graph& g, int s, int t) {
  std::optional<Rat> best;
  std::vector<bool> on(g.num_nodes(), false);
  auto walk = [&](auto& self, int v, const Rat& len) -> void {
    if (v == t) {
      if (!best || len < *best) best = len;
      return;
    }
    on[v] = true;
    for (const auto& [w, e] : g.neighbors(v)) {
      if (!on[w]) self(self, w, len + g.edge(e).c);
    }
    on[v] = false;
  };
  walk(walk, s, Rat(0));
  return best;
}

Rat TreeWeight(const Graph& g, const std::vector<int>& edges) {
  Rat total;
  for (int e : edges) total += g.edge(e).c;
  return total;
}

TEST(GraphTest, RejectsSelfLoopsParallelEdgesAndNegativeCapacities) {
  EXPECT_THROW(Graph::FromIds({"a"}, {{"a", "a", Rat(1)}}), Error);
  EXPECT_THROW(
      Graph::FromIds({"a", "b"}, {{"a", "b", Rat(1)}, {"b", "a", Rat(2)}}),
      Error);
  EXPECT_THROW(Graph::FromIds({"a", "b"}, {{"a", "b", Rat(-1)}}), Error);
  EXPECT_THROW(Graph::FromIds({"a b", "c"}, {}), Error);
  EXPECT_THROW(Graph::FromIds({"a,b"}, {}), Error);
  EXPECT_THROW(Graph::FromIds({"a", "a"}, {}), Error);
}

TEST(GraphTest, CutListsExactlyTheCrossingEdges) {
  Graph g = Cycle4();
  Cut cut = MakeCut(g, Shore(g, {"a", "b"}));
  EXPECT_EQ(cut.crossing.size(), 2u);
  EXPECT_EQ(cut.capacity, 2);
  EXPECT_THROW(MakeCut(g, std::vector<bool>(4, false)), Error);
  EXPECT_THROW(MakeCut(g, std::vector<bool>(4, true)), Error);
}

TEST(GraphJsonTest, ParsesExactCapacities) {
  Graph g = ParseGraphJson(R"({"nodes":["a","b","c"],
    "edges":[{"u":"a","v":"b","c":"3/4"},{"u":"b","v":"c","c":"0.5"},
             {"u":"a","v":"c","c":2}]})");
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edge(0).c, Rat(3, 4));
  EXPECT_EQ(g.edge(1).c, Rat(1, 2));
  EXPECT_EQ(g.edge(2).c, Rat(2));
  Graph back = ParseGraphJson(GraphToJson(g));
  EXPECT_EQ(GraphToJson(back), GraphToJson(g));
}

TEST(GraphJsonTest, MalformedInputRaisesParseErrors) {
  for (const char* text :
       {"{", R"({"edges":[]})", R"({"nodes":[1]})",
        R"({"nodes":["a","b"],"edges":[{"u":"a","v":"b","c":1.5}]})",
        R"({"nodes":["a","b"],"edges":[{"u":"a","v":"b","c":"x"}]})"}) {
    try {
      ParseGraphJson(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << text;
    }
  }
  try {
    ParseGraphJson(R"({"nodes":["a"],"edges":[{"u":"a","v":"z","c":1}]})");
    ADD_FAILURE() << "accepted an unknown endpoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(DijkstraTest, PrefersTwoHopPathOverExpensiveEdge) {
  Graph g = Graph::FromIds({"s", "a", "t"}, {{"s", "a", Rat(1)},
                                             {"a", "t", Rat(1)},
                                             {"s", "t", Rat(3)}});
  ShortestPath p = Dijkstra(g, g.NodeIndex("s"), g.NodeIndex("t"));
  ASSERT_TRUE(p.distance);
  EXPECT_EQ(*p.distance, *ShortestBySimplePaths(g, 0, 2));
  EXPECT_EQ(*p.distance, 2);
  EXPECT_EQ(p.edges.size(), 2u);
}

TEST(DijkstraTest, SameNodeAndDisconnectedPairs) {
  Graph g = Graph::FromIds({"a", "b", "c"}, {{"a", "b", Rat(4)}});
  ShortestPath self = Dijkstra(g, 0, 0);
  EXPECT_EQ(*self.distance, 0);
  EXPECT_TRUE(self.edges.empty());
  EXPECT_FALSE(Dijkstra(g, 0, 2).distance);
  EXPECT_THROW(g.NodeIndex("zz"), Error);
}

TEST(DijkstraProperty, MatchesSimplePathEnumeration) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = verify::RandomConnectedGraph(
        rng, {.num_nodes = verify::UniformInt(rng, 2, 7)});
    for (int s = 0; s < g.num_nodes(); ++s) {
      std::vector<std::optional<Rat>> dist = DistancesFrom(g, s);
      for (int t = 0; t < g.num_nodes(); ++t) {
        EXPECT_EQ(*dist[t], *ShortestBySimplePaths(g, s, t));
        ShortestPath p = Dijkstra(g, s, t);
        EXPECT_EQ(TreeWeight(g, p.edges), *p.distance);
      }
    }
  }
}

TEST(MetricClosureTest, TriangleWithTiedDirectEdge) {
  MetricClosure mc = MetricClosureOf(Triangle123());
  ASSERT_TRUE(mc.complete());
  const Graph& k = mc.closure;
  EXPECT_EQ(k.edge(*k.FindEdge(0, 1)).c, 1);
  EXPECT_EQ(k.edge(*k.FindEdge(0, 2)).c, 2);
  EXPECT_EQ(k.edge(*k.FindEdge(1, 2)).c, 3);
}

TEST(MetricClosureTest, SingleEdgeAndIsolatedNodes) {
  MetricClosure one =
      MetricClosureOf(Graph::FromIds({"a", "b"}, {{"a", "b", Rat(5)}}));
  EXPECT_EQ(one.closure.edge(0).c, 5);
  MetricClosure apart = MetricClosureOf(Graph::FromIds({"a", "b"}, {}));
  EXPECT_FALSE(apart.complete());
  EXPECT_EQ(apart.unreachable.size(), 1u);
  EXPECT_EQ(apart.closure.num_edges(), 0);
}

TEST(MetricClosureProperty, SatisfiesTriangleInequality) {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = verify::RandomConnectedGraph(
        rng, {.num_nodes = verify::UniformInt(rng, 3, 7)});
    const Graph k = MetricClosureOf(g).closure;
    auto d = [&](int u, int v) { return k.edge(*k.FindEdge(u, v)).c; };
    for (int u = 0; u < k.num_nodes(); ++u) {
      for (int v = u + 1; v < k.num_nodes(); ++v) {
        for (int w = 0; w < k.num_nodes(); ++w) {
          if (w == u || w == v) continue;
          EXPECT_LE(d(u, v), d(u, w) + d(w, v));
        }
      }
    }
  }
}

TEST(KruskalTest, TriangleMatchesEnumeratedTrees) {
  Graph g = Triangle123();
  Rat best = -1;
  for (const auto& t : SpanningTreesOf(g)) {
    Rat w = TreeWeight(g, t);
    if (best < 0 || w < best) best = w;
  }
  EXPECT_EQ(Kruskal(g).weight, best);
  EXPECT_EQ(Kruskal(g).weight, 3);
}

TEST(KruskalTest, TreeInputAndEqualWeights) {
  Graph tree = Path3();
  SpanningTree st = Kruskal(tree);
  EXPECT_EQ(st.edges, (std::vector<int>{0, 1}));
  std::vector<std::tuple<std::string, std::string, Rat>> k4;
  std::vector<std::string> ids = verify::LetterIds(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.emplace_back(ids[u], ids[v], Rat(7, 3));
  }
  EXPECT_EQ(Kruskal(Graph::FromIds(ids, k4)).weight, 7);
  EXPECT_THROW(Kruskal(Graph::FromIds({"a", "b"}, {})), Error);
}

TEST(KruskalProperty, MatchesSpanningTreeEnumeration) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = verify::RandomConnectedGraph(
        rng, {.num_nodes = verify::UniformInt(rng, 2, 6)});
    std::optional<Rat> best;
    for (const auto& t : SpanningTreesOf(g)) {
      Rat w = TreeWeight(g, t);
      if (!best || w < *best) best = w;
    }
    SpanningTree st = Kruskal(g);
    EXPECT_TRUE(IsSpanningTree(st.tree));
    EXPECT_EQ(st.weight, *best);
  }
}

TEST(SpanningTreeEnumerationTest, CayleyCounts) {
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    ForEachSpanningTreeOfComplete(n, [&](const Tree& t) {
      EXPECT_TRUE(IsSpanningTree(t));
      ++count;
    });
    int expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    EXPECT_EQ(count, expected) << "n = " << n;
  }
  EXPECT_EQ(SpanningTreesOf(Cycle4()).size(), 4u);
}

TEST(MinCutTest, PathGraphCutsCheapEdge) {
  Graph g = Path3();
  MinCutResult r = MinimumStCut(g, 0, 2);
  EXPECT_EQ(r.value, MinCutByShores(g, 0, 2));
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(SameCrossingEdges(r.cut, MakeCut(g, Shore(g, {"c"}))));
}

TEST(MinCutTest, SingleEdgeDisconnectedAndSameEndpoints) {
  Graph one = Graph::FromIds({"a", "b"}, {{"a", "b", Rat(5, 7)}});
  EXPECT_EQ(MinimumStCut(one, 0, 1).value, Rat(5, 7));
  Graph apart = Graph::FromIds({"a", "b", "c"}, {{"a", "b", Rat(1)}});
  MinCutResult r = MinimumStCut(apart, 0, 2);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.cut.crossing.empty());
  EXPECT_THROW(MinimumStCut(one, 1, 1), Error);
}

TEST(MinCutProperty, MatchesShoreEnumeration) {
  Rng rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = verify::RandomConnectedGraph(
        rng, {.num_nodes = verify::UniformInt(rng, 2, 7)});
    for (int s = 0; s < g.num_nodes(); ++s) {
      for (int t = 0; t < g.num_nodes(); ++t) {
        if (s == t) continue;
        MinCutResult r = MinimumStCut(g, s, t);
        EXPECT_EQ(r.value, MinCutByShores(g, s, t));
        EXPECT_TRUE(r.cut.shore[s]);
        EXPECT_FALSE(r.cut.shore[t]);
      }
    }
  }
}

TEST(GusfieldTest, PathGraph) {
  Graph g = Path3();
  GomoryHuTree gh = GusfieldTree(g);
  EXPECT_EQ(gh.tree.edges, (std::vector<NodePair>{{0, 1}, {1, 2}}));
  EXPECT_EQ(gh.weight, (std::vector<Rat>{Rat(2), Rat(1)}));
  EXPECT_EQ(gh.weight[0], MinCutByShores(g, 0, 1));
  EXPECT_EQ(gh.weight[1], MinCutByShores(g, 1, 2));
}

TEST(GusfieldTest, CycleLabelsAreAllTwo) {
  GomoryHuTree gh = GusfieldTree(Cycle4());
  EXPECT_TRUE(IsSpanningTree(gh.tree));
  for (const Rat& r : gh.weight) EXPECT_EQ(r, 2);
}

TEST(GusfieldTest, SingleEdge) {
  Graph g = Graph::FromIds({"a", "b"}, {{"a", "b", Rat(3, 2)}});
  GomoryHuTree gh = GusfieldTree(g);
  ASSERT_EQ(gh.tree.edges.size(), 1u);
  EXPECT_EQ(gh.weight[0], Rat(3, 2));
  EXPECT_THROW(GusfieldTree(Graph::FromIds({"a", "b"}, {})), Error);
}

TEST(GusfieldProperty, TreeEdgesInduceMinimumCuts) {
  Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = verify::RandomConnectedGraph(
        rng, {.num_nodes = verify::UniformInt(rng, 2, 8)});
    GomoryHuTree gh = GusfieldTree(g);
    ASSERT_TRUE(IsSpanningTree(gh.tree));
    for (std::size_t i = 0; i < gh.tree.edges.size(); ++i) {
      const NodePair& f = gh.tree.edges[i];
      Rat flow = MinimumStCut(g, f.first, f.second).value;
      EXPECT_EQ(FundamentalCut(g, gh.tree, f).capacity, flow);
      EXPECT_EQ(gh.weight[i], flow);
    }
    // Every pair's min-cut value is the smallest label on the tree path.
    for (int u = 0; u < g.num_nodes(); ++u) {
      for (int v = u + 1; v < g.num_nodes(); ++v) {
        std::optional<Rat> low;
        for (const NodePair& e : TreePath(gh.tree, u, v)) {
          auto it = std::lower_bound(gh.tree.edges.begin(),
                                     gh.tree.edges.end(), e);
          const Rat& r = gh.weight[it - gh.tree.edges.begin()];
          if (!low || r < *low) low = r;
        }
        EXPECT_EQ(MinimumStCut(g, u, v).value, *low);
      }
    }
  }
}

TEST(FundamentalCutTest, PathAndStarExamples) {
  Graph g = Path3();
  Tree h = MakeTree(3, {{0, 1}, {1, 2}});
  Cut ab = FundamentalCut(g, h, {0, 1});
  EXPECT_TRUE(SameCrossingEdges(ab, MakeCut(g, Shore(g, {"a"}))));
  EXPECT_EQ(ab.capacity, 2);
  Cut bc = FundamentalCut(g, h, {1, 2});
  EXPECT_TRUE(SameCrossingEdges(bc, MakeCut(g, Shore(g, {"c"}))));
  EXPECT_EQ(bc.capacity, 1);

  Graph c4 = Cycle4();
  Tree star = MakeTree(4, {{0, 1}, {0, 2}, {0, 3}});
  Cut f = FundamentalCut(c4, star, {0, 1});
  EXPECT_TRUE(SameCrossingEdges(f, MakeCut(c4, Shore(c4, {"b"}))));
  EXPECT_EQ(f.capacity, 2);
  EXPECT_THROW(FundamentalCut(c4, star, {1, 2}), Error);
}

TEST(RequirementValueTest, PathGraphTrees) {
  Graph g = Path3();
  EXPECT_EQ(RequirementValue(g, MakeTree(3, {{0, 1}, {1, 2}})), 3);
  EXPECT_EQ(RequirementValue(g, MakeTree(3, {{0, 2}, {1, 2}})), 5);
  EXPECT_EQ(RequirementValue(g, MakeTree(3, {{0, 1}, {0, 2}})), 4);
}

TEST(RequirementValueProperty, GusfieldTreesMinimizeRequirement) {
  Rng rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = verify::RandomConnectedGraph(
        rng, {.num_nodes = verify::UniformInt(rng, 2, 6)});
    GomoryHuTree gh = GusfieldTree(g);
    Rat label_sum;
    for (const Rat& r : gh.weight) label_sum += r;
    Rat gh_value = RequirementValue(g, gh.tree);
    EXPECT_EQ(gh_value, label_sum);
    std::optional<Rat> best;
    std::vector<Tree> minimizers;
    // RequirementValue cross-checks the path form against the cut form for
    // every spanning tree of K.
    ForEachSpanningTreeOfComplete(g.num_nodes(), [&](const Tree& t) {
      Rat value = RequirementValue(g, t);
      if (!best || value < *best) {
        best = value;
        minimizers.clear();
      }
      if (value == *best) minimizers.push_back(t);
    });
    EXPECT_EQ(*best, gh_value);
    for (const Tree& t : minimizers) {
      for (const NodePair& f : t.edges) {
        EXPECT_EQ(FundamentalCut(g, t, f).capacity,
                  MinimumStCut(g, f.first, f.second).value);
      }
    }
  }
}

TEST(BruteForceTCutTest, Examples) {
  Graph g = Path3();
  TCutResult r = BruteForceMinTCut(g, {0, 2});
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(SameCrossingEdges(r.cut, MakeCut(g, Shore(g, {"c"}))));
  Graph one = Graph::FromIds({"a", "b"}, {{"a", "b", Rat(9, 4)}});
  EXPECT_EQ(BruteForceMinTCut(one, {0, 1}).value, Rat(9, 4));
  EXPECT_EQ(BruteForceMinTCut(Cycle4(), {0, 1, 2, 3}).value, 2);
  try {
    BruteForceMinTCut(g, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOddTerminalSet);
  }
}

TEST(BruteForceTCutProperty, TwoTerminalsGiveTheMinimumStCut) {
  Rng rng(27);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = verify::RandomConnectedGraph(
        rng, {.num_nodes = verify::UniformInt(rng, 2, 8)});
    std::vector<int> t = verify::RandomNodeSubset(rng, g.num_nodes(), 2);
    EXPECT_EQ(BruteForceMinTCut(g, t).value,
              MinimumStCut(g, t[0], t[1]).value);
  }
}

TEST(BruteForceSteinerTest, Examples) {
  Graph star = Star();
  SteinerResult r = BruteForceSteiner(star, {1, 2, 3});
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.edges.size(), 3u);
  SteinerResult single = BruteForceSteiner(star, {2});
  EXPECT_EQ(single.value, 0);
  EXPECT_TRUE(single.edges.empty());
  Graph c4 = Cycle4();
  EXPECT_EQ(BruteForceSteiner(c4, {0, 1, 2, 3}).value, Kruskal(c4).weight);
}

TEST(TreePathTest, PathAndSymmetricDifference) {
  Tree h = MakeTree(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(TreePath(h, 0, 2), (std::vector<NodePair>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(TreePath(h, 1, 1).empty());
  std::vector<NodePair> x = {{0, 1}};
  std::vector<NodePair> y = {{1, 2}};
  EXPECT_TRUE(SymmetricDifference(x, x).empty());
  EXPECT_EQ(SymmetricDifference(x, y), (std::vector<NodePair>{{0, 1}, {1, 2}}));
}

}  // namespace
}  // namespace extform::graphs
