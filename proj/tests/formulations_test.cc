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
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <vector>

#include "extform/error.h"
#include "extform/formulations/disjunctive.h"
#include "extform/formulations/extract.h"
#include "extform/formulations/flows.h"
#include "extform/formulations/gomory_hu.h"
#include "extform/formulations/handle.h"
#include "extform/formulations/trees.h"
#include "extform/graphs/algorithms.h"
#include "extform/graphs/brute_force.h"
#include "extform/graphs/graph.h"
#include "extform/ratlp/certificate.h"
#include "extform/ratlp/lp_format.h"
#include "extform/ratlp/simplex.h"
#include "extform/verify/random_instances.h"

namespace extform::formulations {
namespace {

using graphs::Graph;
using ratlp::Model;
using ratlp::ObjectiveSense;
using ratlp::SolveOutcome;
using ratlp::SolveStatus;
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

Graph Star() {
  return Graph::FromIds({"m", "s1", "s2", "s3"}, {{"m", "s1", Rat(1)},
                                                  {"m", "s2", Rat(1)},
                                                  {"m", "s3", Rat(1)}});
}

Graph K3(Rat ab, Rat ac, Rat bc) {
  return Graph::FromIds({"a", "b", "c"},
                        {{"a", "b", ab}, {"a", "c", ac}, {"b", "c", bc}});
}

Graph SingleEdge(Rat q) { return Graph::FromIds({"a", "b"}, {{"a", "b", q}}); }

Graph RandomGraph(Rng& rng, int min_nodes, int max_nodes) {
  verify::GraphOptions opts;
  opts.num_nodes = verify::UniformInt(rng, min_nodes, max_nodes);
  return verify::RandomConnectedGraph(rng, opts);
}

// Solves and requires every certificate re-check to pass.
SolveOutcome SolveAudited(const Model& model) {
  SolveOutcome out = ratlp::Solve(model);
  std::vector<ratlp::AuditFinding> findings = ratlp::AuditOutcome(model, out);
  for (const ratlp::AuditFinding& f : findings) {
    EXPECT_TRUE(f.passed) << f.check << ": " << f.detail;
  }
  return out;
}

Model FixBlock(const FormulationHandle& h, const std::string& symbol,
               const std::vector<Rat>& values) {
  ratlp::ModelBuilder b(h.model);
  const Block& block = h.block(symbol);
  for (int k = 0; k < block.size(); ++k) {
    b.AddConstraint("fix" + std::to_string(k), {{block.begin + k, Rat(1)}},
                    ratlp::RowSense::kEqual, values[k]);
  }
  return b.Build();
}

bool Feasible(const Model& m, const std::vector<Rat>& x) {
  for (int r = 0; r < m.num_constraints(); ++r) {
    const Rat lhs = m.EvaluateRow(r, x);
    const Rat& rhs = m.constraint(r).rhs;
    switch (m.constraint(r).sense) {
      case ratlp::RowSense::kGreaterEqual:
        if (lhs < rhs) return false;
        break;
      case ratlp::RowSense::kLessEqual:
        if (lhs > rhs) return false;
        break;
      case ratlp::RowSense::kEqual:
        if (lhs != rhs) return false;
        break;
    }
  }
  for (int j = 0; j < m.num_variables(); ++j) {
    const ratlp::Variable& v = m.variable(j);
    if ((v.lower && x[j] < *v.lower) || (v.upper && x[j] > *v.upper)) return false;
  }
  return true;
}

std::vector<Rat> BlockValues(const FormulationHandle& h, const std::string& symbol,
                             const std::vector<Rat>& x) {
  const Block& block = h.block(symbol);
  return std::vector<Rat>(x.begin() + block.begin, x.begin() + block.end);
}

// Test-local oracles, independent of the graphs module algorithms.

// Connectivity of the edge subset `chosen` over all n nodes.
bool SpansAndAcyclic(int n, const std::vector<graphs::NodePair>& chosen) {
  if (static_cast<int>(chosen.size()) != n - 1) return false;
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const graphs::NodePair& e : chosen) {
    int a = find(e.first), b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Minimum spanning tree weight by enumerating all (n-1)-edge subsets.
Rat MstByEnumeration(const Graph& g) {
  const int m = g.num_edges();
  std::optional<Rat> best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<graphs::NodePair> chosen;
    Rat w(0);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        chosen.emplace_back(g.edge(e).u, g.edge(e).v);
        w += g.edge(e).c;
      }
    }
    if (SpansAndAcyclic(g.num_nodes(), chosen) && (!best || w < *best)) best = w;
  }
  return *best;
}

std::optional<Rat> BellmanFord(const Graph& g, int s, int t) {
  std::vector<std::optional<Rat>> dist(g.num_nodes());
  dist[s] = Rat(0);
  for (int round = 0; round < g.num_nodes(); ++round) {
    for (const graphs::Edge& e : g.edges()) {
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (dist[a] && (!dist[b] || *dist[a] + e.c < *dist[b])) {
          dist[b] = *dist[a] + e.c;
        }
      }
    }
  }
  return dist[t];
}

Rat CutCapacity(const Graph& g, unsigned shore) {
  Rat c(0);
  for (const graphs::Edge& e : g.edges()) {
    if ((shore >> e.u & 1) != (shore >> e.v & 1)) c += e.c;
  }
  return c;
}

Rat MinStCutByShores(const Graph& g, int s, int t) {
  std::optional<Rat> best;
  for (unsigned shore = 0; shore < (1u << g.num_nodes()); ++shore) {
    if (!(shore >> s & 1) || (shore >> t & 1)) continue;
    Rat c = CutCapacity(g, shore);
    if (!best || c < *best) best = c;
  }
  return *best;
}

// Sum over tree edges f of the capacity of the cut separating the two
// components of H - f, with H given as n - 1 node pairs.
Rat RequirementByComponents(const Graph& g, int n,
                            const std::vector<graphs::NodePair>& tree) {
  Rat total(0);
  for (std::size_t skip = 0; skip < tree.size(); ++skip) {
    unsigned side = 1u << tree[skip].first;
    bool grown = true;
    while (grown) {
      grown = false;
      for (std::size_t k = 0; k < tree.size(); ++k) {
        if (k == skip) continue;
        const auto [u, v] = tree[k];
        if ((side >> u & 1) != (side >> v & 1)) {
          side |= (1u << u) | (1u << v);
          grown = true;
        }
      }
    }
    (void)n;
    total += CutCapacity(g, side);
  }
  return total;
}

// Minimum requirement over all spanning trees of K_n, by edge subsets.
Rat MinRequirementByEnumeration(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<graphs::NodePair> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::optional<Rat> best;
  const int l = static_cast<int>(pairs.size());
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    if (__builtin_popcount(mask) != n - 1) continue;
    std::vector<graphs::NodePair> chosen;
    for (int k = 0; k < l; ++k) {
      if (mask >> k & 1) chosen.push_back(pairs[k]);
    }
    if (!SpansAndAcyclic(n, chosen)) continue;
    Rat r = RequirementByComponents(g, n, chosen);
    if (!best || r < *best) best = r;
  }
  return *best;
}

PolyhedronDesc Interval(int lo, int hi) {
  return PolyhedronDesc{1, {{Rat(1)}, {Rat(-1)}}, {Rat(lo), Rat(-hi)}};
}

// Disjunctive hull.

TEST(BalasHullTest, IntervalPairMaximum) {
  FormulationHandle h = BuildBalasHull({Interval(0, 1), Interval(2, 3)},
                                       {Rat(1)}, ObjectiveSense::kMaximize);
  h.CheckBlocks();
  SolveOutcome out = SolveAudited(h.model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 3);
  EXPECT_EQ(BlockValues(h, "lambda", out.primal), (std::vector<Rat>{0, 1}));
}

TEST(BalasHullTest, IntervalPairMinimum) {
  FormulationHandle h = BuildBalasHull({Interval(0, 1), Interval(2, 3)},
                                       {Rat(1)}, ObjectiveSense::kMinimize);
  SolveOutcome out = SolveAudited(h.model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 0);
}

TEST(BalasHullTest, IdenticalPiecesAnyLambdaIsOptimal) {
  FormulationHandle h = BuildBalasHull({Interval(0, 1), Interval(0, 1)},
                                       {Rat(1)}, ObjectiveSense::kMaximize);
  SolveOutcome out = SolveAudited(h.model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 1);
  // The split lambda = (1/2, 1/2) with x^1 = x^2 = 1/2 reaches the same value.
  Model fixed = FixBlock(h, "lambda", {Rat(1, 2), Rat(1, 2)});
  SolveOutcome half = SolveAudited(fixed);
  ASSERT_TRUE(half.optimal());
  EXPECT_EQ(half.objective, 1);
}

TEST(BalasHullTest, DimensionMismatchThrows) {
  PolyhedronDesc bad{2, {{Rat(1)}}, {Rat(0)}};
  EXPECT_THROW(BuildBalasHull({bad}, {Rat(1), Rat(1)}, ObjectiveSense::kMaximize),
               Error);
  EXPECT_THROW(BuildBalasHull({Interval(0, 1)}, {Rat(1), Rat(1)},
                              ObjectiveSense::kMaximize),
               Error);
}

TEST(BalasHullTest, RandomPolygonsMatchBestPiece) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    verify::HullInstance inst = verify::RandomHullInstance(rng);
    FormulationHandle h = BuildBalasHull(inst.polys, inst.w, inst.sense);
    SolveOutcome out = SolveAudited(h.model);
    ASSERT_TRUE(out.optimal());
    std::optional<Rat> best;
    for (const PolyhedronDesc& p : inst.polys) {
      SolveOutcome s =
          SolveAudited(SubproblemModel(AsExtension(p), inst.w, inst.sense));
      ASSERT_TRUE(s.optimal());
      const bool better = inst.sense == ObjectiveSense::kMaximize
                              ? s.objective > *best
                              : s.objective < *best;
      if (!best || better) best = s.objective;
    }
    EXPECT_EQ(out.objective, *best) << "trial " << trial;
  }
}

// Coupled system.

TEST(CoupledTest, SimplexCouplingReproducesHull) {
  std::vector<PolyhedronDesc> polys = {Interval(0, 1), Interval(2, 3)};
  std::vector<ExtensionDesc> subs = {AsExtension(polys[0]), AsExtension(polys[1])};
  for (ObjectiveSense sense : {ObjectiveSense::kMaximize, ObjectiveSense::kMinimize}) {
    SolveOutcome hull = SolveAudited(BuildBalasHull(polys, {Rat(1)}, sense).model);
    SolveOutcome coupled =
        SolveAudited(BuildCoupled(subs, SimplexCoupling(2), {Rat(1)}, sense).model);
    ASSERT_TRUE(hull.optimal());
    ASSERT_TRUE(coupled.optimal());
    EXPECT_EQ(hull.objective, coupled.objective);
  }
}

TEST(CoupledTest, ClosureShortestPathsWithTreeCouplingGiveClosureMst) {
  Graph g = Path3();
  verify::CoupledInstance inst = verify::SteinerCoupledInstance(g, {0, 1, 2});
  for (bool aggregate : {true, false}) {
    CoupledOptions opts;
    opts.include_aggregate = aggregate;
    FormulationHandle h =
        BuildCoupled(inst.subproblems, inst.coupling, inst.w, inst.sense, opts);
    h.CheckBlocks();
    SolveOutcome out = SolveAudited(h.model);
    ASSERT_TRUE(out.optimal());
    // Distances ab = 2, ac = 3, bc = 1; cheapest pair of them is 3.
    EXPECT_EQ(out.objective, 3);
  }
}

TEST(CoupledTest, UnboundedPieceMakesSystemUnbounded) {
  PolyhedronDesc quadrant{1, {{Rat(1)}}, {Rat(0)}};
  FormulationHandle h =
      BuildCoupled({AsExtension(quadrant), AsExtension(Interval(0, 1))},
                   SimplexCoupling(2), {Rat(1)}, ObjectiveSense::kMaximize);
  SolveOutcome out = SolveAudited(h.model);
  EXPECT_EQ(out.status, SolveStatus::kUnbounded);
}

TEST(CoupledTest, IndexMismatchThrows) {
  EXPECT_THROW(BuildCoupled({AsExtension(Interval(0, 1))}, SimplexCoupling(2),
                            {Rat(1)}, ObjectiveSense::kMaximize),
               Error);
}

TEST(CoupledTest, ModelAsExtensionKeepsFeasibleSet) {
  FormulationHandle tree = BuildTreeExtension(K3(Rat(1), Rat(2), Rat(3)));
  ExtensionDesc e = ModelAsExtension(tree.model, 3);
  EXPECT_EQ(e.dimension, 3);
  EXPECT_EQ(e.aux_dimension, tree.model.num_variables() - 3);
  // Minimizing (1,2,3) over the converted system gives the same tree weight.
  ratlp::ModelBuilder b;
  for (int j = 0; j < e.dimension + e.aux_dimension; ++j) {
    b.AddFreeVariable("v" + std::to_string(j));
  }
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    ratlp::LinearExpr terms;
    for (std::size_t j = 0; j < e.rows[r].size(); ++j) {
      if (e.rows[r][j] != 0) terms.push_back({static_cast<int>(j), e.rows[r][j]});
    }
    b.AddConstraint("r" + std::to_string(r), terms,
                    ratlp::RowSense::kGreaterEqual, e.rhs[r]);
  }
  b.SetObjective(ObjectiveSense::kMinimize,
                 {{0, Rat(1)}, {1, Rat(2)}, {2, Rat(3)}});
  SolveOutcome out = SolveAudited(b.Build());
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 3);
}

// Spanning-tree extensions.

TEST(TreeExtensionTest, TriangleOptimum) {
  Graph g = K3(Rat(1), Rat(2), Rat(3));
  EXPECT_EQ(MstByEnumeration(g), 3);
  FormulationHandle split = BuildTreeExtension(g);
  split.CheckBlocks();
  SolveOutcome out = SolveAudited(split.model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 3);
  FormulationHandle arb = BuildArborescenceExtension(g, 0);
  arb.CheckBlocks();
  SolveOutcome a = SolveAudited(arb.model);
  ASSERT_TRUE(a.optimal());
  EXPECT_EQ(a.objective, 3);
}

// A 0/1 lambda extends to a feasible point exactly when it is a spanning
// tree; checked on K_4 for every 3-edge subset and on K_3 for all subsets.
TEST(TreeExtensionTest, IntegralPointsAreExactlySpanningTrees) {
  for (int n : {3, 4}) {
    std::vector<std::string> ids = verify::LetterIds(n);
    std::vector<std::tuple<std::string, std::string, Rat>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges.emplace_back(ids[u], ids[v], Rat(1));
    }
    Graph g = Graph::FromIds(ids, edges);
    const int m = g.num_edges();
    for (bool arborescence : {false, true}) {
      FormulationHandle h = arborescence ? BuildArborescenceExtension(g, 0)
                                         : BuildTreeExtension(g);
      int feasible = 0;
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<Rat> chi(m);
        std::vector<graphs::NodePair> chosen;
        for (int e = 0; e < m; ++e) {
          chi[e] = (mask >> e) & 1;
          if (mask >> e & 1) chosen.emplace_back(g.edge(e).u, g.edge(e).v);
        }
        SolveOutcome out = SolveAudited(FixBlock(h, "lambda", chi));
        const bool is_tree = SpansAndAcyclic(n, chosen);
        EXPECT_EQ(out.optimal(), is_tree) << "n=" << n << " mask=" << mask;
        feasible += out.optimal() ? 1 : 0;
      }
      EXPECT_EQ(feasible, n == 3 ? 3 : 16);
    }
  }
}

TEST(TreeExtensionTest, SingleEdgeForcesLambdaOne) {
  Graph g = SingleEdge(Rat(5, 2));
  SolveOutcome out = SolveAudited(BuildTreeExtension(g).model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.primal[0], 1);
  FormulationHandle arb = BuildArborescenceExtension(g, 0);
  SolveOutcome a = SolveAudited(arb.model);
  ASSERT_TRUE(a.optimal());
  std::vector<Rat> nu = BlockValues(arb, "nu", a.primal);
  EXPECT_EQ(nu[0] + nu[1], 1);
}

TEST(TreeExtensionTest, PathArborescenceRoutesThroughMiddle) {
  Graph g = Path3();
  FormulationHandle arb = BuildArborescenceExtension(g, 0);
  SolveOutcome out = SolveAudited(arb.model);
  ASSERT_TRUE(out.optimal());
  // Commodities b and c; arcs 2e = (u, v), 2e + 1 = (v, u) per local edge.
  std::vector<Rat> sigma = BlockValues(arb, "sigma", out.primal);
  std::vector<Rat> nu = BlockValues(arb, "nu", out.primal);
  const int arcs = 4;
  // Commodity c (index 1): a->b (arc 0) and b->c (arc 2).
  EXPECT_EQ(sigma[1 * arcs + 0], 1);
  EXPECT_EQ(sigma[1 * arcs + 2], 1);
  EXPECT_EQ(sigma[1 * arcs + 1], 0);
  EXPECT_EQ(sigma[1 * arcs + 3], 0);
  for (int a = 0; a < arcs; ++a) EXPECT_GE(nu[a], sigma[1 * arcs + a]);
}

TEST(TreeExtensionTest, RandomGraphsMatchKruskalAndEnumeration) {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = RandomGraph(rng, 2, 6);
    const Rat oracle = MstByEnumeration(g);
    EXPECT_EQ(graphs::Kruskal(g).weight, oracle);
    SolveOutcome split = SolveAudited(BuildTreeExtension(g).model);
    SolveOutcome arb = SolveAudited(BuildArborescenceExtension(g, 0).model);
    ASSERT_TRUE(split.optimal());
    ASSERT_TRUE(arb.optimal());
    EXPECT_EQ(split.objective, oracle) << "trial " << trial;
    EXPECT_EQ(arb.objective, oracle) << "trial " << trial;
  }
}

TEST(TreeExtensionTest, ArborescenceRootDoesNotMatter) {
  Rng rng(22);
  Graph g = RandomGraph(rng, 5, 5);
  const Rat oracle = MstByEnumeration(g);
  for (int root = 0; root < g.num_nodes(); ++root) {
    SolveOutcome out = SolveAudited(BuildArborescenceExtension(g, root).model);
    ASSERT_TRUE(out.optimal());
    EXPECT_EQ(out.objective, oracle);
  }
}

// The one-parent rows are needed for every ordered pair of nodes: keeping
// them only on graph edges admits points below the tree weight on sparse
// graphs. The default stays exact on the same instances.
TEST(TreeExtensionTest, ParentRowsOnEdgesOnlyAreNotExact) {
  Rng rng(23);
  int undercut = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = RandomGraph(rng, 4, 6);
    const Rat oracle = graphs::Kruskal(g).weight;
    SolveOutcome exact = SolveAudited(BuildTreeExtension(g).model);
    ASSERT_TRUE(exact.optimal());
    EXPECT_EQ(exact.objective, oracle);
    SolveOutcome once =
        SolveAudited(BuildTreeExtension(g, ParentRows::kEdgesOnce).model);
    ASSERT_TRUE(once.optimal());
    EXPECT_LE(once.objective, oracle);
    if (once.objective < oracle) ++undercut;
  }
  EXPECT_GT(undercut, 0);
}

TEST(TreeExtensionTest, TooFewNodesThrows) {
  Graph one = Graph::FromIds({"a"}, {});
  EXPECT_THROW(BuildTreeExtension(one), Error);
}

// Shortest path and s-t cut LPs.

TEST(ShortestPathLpTest, DetourBeatsDirectEdge) {
  Graph g = Graph::FromIds({"s", "a", "t"}, {{"s", "a", Rat(1)},
                                             {"a", "t", Rat(1)},
                                             {"s", "t", Rat(3)}});
  SolveOutcome out = SolveAudited(BuildShortestPathLp(g, 0, 2).model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 2);
}

TEST(ShortestPathLpTest, SingleEdgeAndDisconnected) {
  SolveOutcome one = SolveAudited(BuildShortestPathLp(SingleEdge(Rat(7, 3)), 0, 1).model);
  ASSERT_TRUE(one.optimal());
  EXPECT_EQ(one.objective, Rat(7, 3));
  Graph split = Graph::FromIds({"a", "b", "c", "d"},
                               {{"a", "b", Rat(1)}, {"c", "d", Rat(1)}});
  SolveOutcome none = SolveAudited(BuildShortestPathLp(split, 0, 3).model);
  EXPECT_EQ(none.status, SolveStatus::kInfeasible);
  EXPECT_THROW(BuildShortestPathLp(split, 1, 1), Error);
}

TEST(ShortestPathLpTest, RandomPairsMatchBellmanFord) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = RandomGraph(rng, 2, 7);
    std::vector<int> st = verify::RandomNodeSubset(rng, g.num_nodes(), 2);
    SolveOutcome out = SolveAudited(BuildShortestPathLp(g, st[0], st[1]).model);
    ASSERT_TRUE(out.optimal());
    EXPECT_EQ(out.objective, *BellmanFord(g, st[0], st[1]));
  }
}

TEST(StCutLpTest, Examples) {
  SolveOutcome path = SolveAudited(BuildStCutLp(Path3(), 0, 2).model);
  ASSERT_TRUE(path.optimal());
  EXPECT_EQ(path.objective, 1);
  SolveOutcome edge = SolveAudited(BuildStCutLp(SingleEdge(Rat(9, 4)), 0, 1).model);
  ASSERT_TRUE(edge.optimal());
  EXPECT_EQ(edge.objective, Rat(9, 4));
  SolveOutcome cycle = SolveAudited(BuildStCutLp(Cycle4(), 0, 2).model);
  ASSERT_TRUE(cycle.optimal());
  EXPECT_EQ(cycle.objective, 2);
  EXPECT_THROW(BuildStCutLp(Path3(), 1, 1), Error);
}

TEST(StCutLpTest, RandomPairsMatchShoreEnumeration) {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = RandomGraph(rng, 2, 7);
    std::vector<int> st = verify::RandomNodeSubset(rng, g.num_nodes(), 2);
    SolveOutcome out = SolveAudited(BuildStCutLp(g, st[0], st[1]).model);
    ASSERT_TRUE(out.optimal());
    EXPECT_EQ(out.objective, MinStCutByShores(g, st[0], st[1]));
  }
}

// Steiner approximation.

TEST(SteinerApproxTest, StarLeaves) {
  Graph g = Star();
  std::vector<int> s = {1, 2, 3};
  EXPECT_EQ(graphs::BruteForceSteiner(g, s).value, 3);
  for (TreeBackend backend : {TreeBackend::kSplit, TreeBackend::kArborescence}) {
    FormulationHandle h = BuildSteinerApprox(g, s, backend);
    h.CheckBlocks();
    SolveOutcome out = SolveAudited(h.model);
    ASSERT_TRUE(out.optimal());
    EXPECT_EQ(out.objective, 4);
    EXPECT_LE(out.objective, 2 * 3);
  }
}

TEST(SteinerApproxTest, TwoTerminalsGiveDistance) {
  Rng rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = RandomGraph(rng, 2, 7);
    std::vector<int> s = verify::RandomNodeSubset(rng, g.num_nodes(), 2);
    SolveOutcome out = SolveAudited(BuildSteinerApprox(g, s).model);
    ASSERT_TRUE(out.optimal());
    EXPECT_EQ(out.objective, *BellmanFord(g, s[0], s[1]));
  }
}

TEST(SteinerApproxTest, TreeGraphGivesClosureMst) {
  // On a tree every closure distance is a path length; S = all nodes of the
  // path gives the path weight.
  SolveOutcome out = SolveAudited(BuildSteinerApprox(Path3(), {0, 1, 2}).model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 3);
}

TEST(SteinerApproxTest, RandomBackendsAgreeWithClosureMst) {
  Rng rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = RandomGraph(rng, 3, 7);
    const int k = verify::UniformInt(rng, 2, std::min(4, g.num_nodes()));
    std::vector<int> s = verify::RandomNodeSubset(rng, g.num_nodes(), k);
    // Closure MST from pairwise Bellman-Ford distances by enumeration.
    std::vector<std::string> ids;
    std::vector<std::tuple<std::string, std::string, Rat>> pairs;
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) ids.push_back(g.node(v));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        pairs.emplace_back(ids[i], ids[j], *BellmanFord(g, sorted[i], sorted[j]));
      }
    }
    const Rat oracle = MstByEnumeration(Graph::FromIds(ids, pairs));
    for (TreeBackend backend : {TreeBackend::kSplit, TreeBackend::kArborescence}) {
      SolveOutcome out = SolveAudited(BuildSteinerApprox(g, s, backend).model);
      ASSERT_TRUE(out.optimal());
      EXPECT_EQ(out.objective, oracle) << "trial " << trial;
    }
  }
}

TEST(SteinerApproxTest, Errors) {
  Graph split = Graph::FromIds({"a", "b", "c", "d"},
                               {{"a", "b", Rat(1)}, {"c", "d", Rat(1)}});
  try {
    BuildSteinerApprox(split, {0, 3});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
  EXPECT_THROW(BuildSteinerApprox(Path3(), {1}), Error);
}

// Gomory-Hu LP and extraction.

TEST(GomoryHuLpTest, PathExample) {
  Graph g = Path3();
  FormulationHandle h = BuildGomoryHuLp(g);
  h.CheckBlocks();
  SolveOutcome out = SolveAudited(h.model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 3);
  // lambda order ab, ac, bc.
  EXPECT_EQ(BlockValues(h, "lambda", out.primal), (std::vector<Rat>{1, 0, 1}));
  graphs::Tree t = ExtractTree(h, out.primal);
  EXPECT_EQ(t.edges, (std::vector<graphs::NodePair>{{0, 1}, {1, 2}}));
  std::vector<FundamentalCutReading> cuts = ExtractFundamentalCuts(h, g, out.primal);
  ASSERT_EQ(cuts.size(), 2u);
  EXPECT_EQ(cuts[0].f, graphs::NodePair(0, 1));
  EXPECT_EQ(cuts[0].cut.shore, (std::vector<bool>{true, false, false}));
  EXPECT_EQ(cuts[0].cut.capacity, 2);
  // x^f vanishes for the non-tree pair ac.
  const Block& xf = h.block("x_f");
  for (int e = 0; e < g.num_edges(); ++e) {
    EXPECT_EQ(out.primal[xf.begin + 1 * g.num_edges() + e], 0);
  }
}

TEST(GomoryHuLpTest, SingleEdgeAndCycle) {
  SolveOutcome edge = SolveAudited(BuildGomoryHuLp(SingleEdge(Rat(5, 3))).model);
  ASSERT_TRUE(edge.optimal());
  EXPECT_EQ(edge.objective, Rat(5, 3));
  SolveOutcome cycle = SolveGomoryHuLp(BuildGomoryHuLp(Cycle4()));
  ASSERT_TRUE(cycle.optimal());
  EXPECT_EQ(cycle.objective, 6);
  EXPECT_EQ(MinRequirementByEnumeration(Cycle4()), 6);
}

TEST(GomoryHuLpTest, RandomGraphsMatchRequirementEnumeration) {
  Rng rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = RandomGraph(rng, 2, 5);
    FormulationHandle h = BuildGomoryHuLp(g);
    SolveOutcome first = SolveAudited(h.model);
    ASSERT_TRUE(first.optimal());
    EXPECT_EQ(first.objective, MinRequirementByEnumeration(g)) << "trial " << trial;
    SolveOutcome solved = SolveGomoryHuLp(h);
    graphs::Tree t = ExtractTree(h, solved.primal);
    EXPECT_EQ(graphs::RequirementValue(g, t), first.objective);
    EXPECT_NO_THROW(ExtractFundamentalCuts(h, g, solved.primal));
  }
}

TEST(GomoryHuLpTest, DisconnectedThrows) {
  Graph split = Graph::FromIds({"a", "b", "c"}, {{"a", "b", Rat(1)}});
  EXPECT_THROW(BuildGomoryHuLp(split), Error);
}

TEST(ExtractTest, MidpointIsReportedAsNonVertex) {
  Graph g = K3(Rat(1), Rat(1), Rat(1));
  FormulationHandle h = BuildTreeExtension(g);
  SolveOutcome a = SolveAudited(FixBlock(h, "lambda", {Rat(1), Rat(1), Rat(0)}));
  SolveOutcome b = SolveAudited(FixBlock(h, "lambda", {Rat(0), Rat(1), Rat(1)}));
  ASSERT_TRUE(a.optimal());
  ASSERT_TRUE(b.optimal());
  std::vector<Rat> mid(a.primal.size());
  for (std::size_t j = 0; j < mid.size(); ++j) mid[j] = (a.primal[j] + b.primal[j]) / 2;
  EXPECT_TRUE(Feasible(h.model, mid));
  try {
    ExtractTree(h, mid);
    FAIL() << "expected a non-vertex diagnostic";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonVertex);
  }
}

TEST(ExtractTest, TreeLpWithUniqueMst) {
  Graph g = K3(Rat(1), Rat(2), Rat(3));
  FormulationHandle h = BuildTreeExtension(g);
  SolveOutcome out = SolveAudited(h.model);
  ASSERT_TRUE(out.optimal());
  graphs::Tree t = ExtractTree(h, out.primal);
  EXPECT_EQ(t.edges, (std::vector<graphs::NodePair>{{0, 1}, {0, 2}}));
}

TEST(ExtractTest, NonTreeSupportIsReported) {
  Graph g = K3(Rat(1), Rat(2), Rat(3));
  FormulationHandle h = BuildTreeExtension(g);
  std::vector<Rat> x(h.model.num_variables(), Rat(0));
  x[h.block("lambda").begin] = 1;
  try {
    ExtractTree(h, x);
    FAIL() << "expected a support diagnostic";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSupportMismatch);
  }
}

// Gomory-Hu tree polytope extension.

TEST(GhExtensionTest, PathPinsTheUniqueTree) {
  FormulationHandle h = BuildGhTreePolytopeExtension(Path3());
  h.CheckBlocks();
  const Block& lambda = h.block("lambda");
  for (int k = 0; k < lambda.size(); ++k) {
    for (ObjectiveSense sense : {ObjectiveSense::kMinimize, ObjectiveSense::kMaximize}) {
      ratlp::ModelBuilder b(h.model);
      b.SetObjective(sense, {{lambda.begin + k, Rat(1)}});
      SolveOutcome out = SolveAudited(b.Build());
      ASSERT_TRUE(out.optimal());
      EXPECT_EQ(out.objective, k == 1 ? 0 : 1);
    }
  }
}

TEST(GhExtensionTest, SymmetricInstanceHasSeveralTrees) {
  // Two parallel a-d routes of equal capacity.
  FormulationHandle h = BuildGhTreePolytopeExtension(Cycle4());
  const Block& lambda = h.block("lambda");
  std::set<std::vector<Rat>> seen;
  Rng rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    ratlp::ModelBuilder b(h.model);
    ratlp::LinearExpr w;
    for (int k = 0; k < lambda.size(); ++k) {
      w.push_back({lambda.begin + k, Rat(verify::UniformInt(rng, -9, 9))});
    }
    b.SetObjective(ObjectiveSense::kMaximize, w);
    Model m = b.Build();
    SolveOutcome out = SolveAudited(m);
    ASSERT_TRUE(out.optimal());
    FormulationHandle probe = h;
    probe.model = m;
    SolveOutcome lex = SolveAudited(LexicographicLambdaModel(probe, out.objective));
    ASSERT_TRUE(lex.optimal());
    std::vector<Rat> chi = BlockValues(h, "lambda", lex.primal);
    for (const Rat& v : chi) EXPECT_TRUE(v == 0 || v == 1);
    seen.insert(chi);
  }
  EXPECT_GE(seen.size(), 2u);
}

// T-cut LP.

TEST(TCutLpTest, PathExample) {
  Graph g = Path3();
  FormulationHandle h = BuildTCutLp(g, {0, 2});
  h.CheckBlocks();
  SolveOutcome out = SolveAudited(h.model);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.objective, 1);
  graphs::Cut cut = ExtractTCut(h, g, out.primal);
  EXPECT_TRUE(graphs::SameCrossingEdges(
      cut, graphs::MakeCut(g, std::vector<bool>{false, false, true})));
  EXPECT_EQ(cut.capacity, 1);
}

TEST(TCutLpTest, SingleEdgeAndCycle) {
  SolveOutcome edge = SolveAudited(BuildTCutLp(SingleEdge(Rat(4, 7)), {0, 1}).model);
  ASSERT_TRUE(edge.optimal());
  EXPECT_EQ(edge.objective, Rat(4, 7));
  SolveOutcome cycle = SolveAudited(BuildTCutLp(Cycle4(), {0, 1, 2, 3}).model);
  ASSERT_TRUE(cycle.optimal());
  EXPECT_EQ(cycle.objective, 2);
}

TEST(TCutLpTest, Errors) {
  try {
    BuildTCutLp(Path3(), {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOddTerminalSet);
  }
  TCutOptions small;
  small.max_nodes = 3;
  try {
    BuildTCutLp(Cycle4(), {0, 1}, small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCapExceeded);
  }
}

TEST(TCutLpTest, RandomSmallGraphsMatchShoreEnumeration) {
  Rng rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = RandomGraph(rng, 2, 4);
    const int k = 2 * verify::UniformInt(rng, 1, g.num_nodes() / 2);
    std::vector<int> t = verify::RandomNodeSubset(rng, g.num_nodes(), k);
    std::optional<Rat> best;
    for (unsigned shore = 1; shore + 1 < (1u << g.num_nodes()); ++shore) {
      int inside = 0;
      for (int v : t) inside += shore >> v & 1;
      if (inside % 2 == 0) continue;
      Rat c = CutCapacity(g, shore);
      if (!best || c < *best) best = c;
    }
    FormulationHandle h = BuildTCutLp(g, t);
    SolveOutcome out = SolveAudited(h.model);
    ASSERT_TRUE(out.optimal());
    EXPECT_EQ(out.objective, *best) << "trial " << trial;
    EXPECT_EQ(ExtractTCut(h, g, out.primal).capacity, *best);
  }
}

// Handles.

TEST(HandleTest, BlockIndexJsonListsEveryBlock) {
  FormulationHandle h = BuildGomoryHuLp(Path3());
  nlohmann::json doc = nlohmann::json::parse(h.BlockIndexJson());
  EXPECT_EQ(doc["kind"], h.kind);
  ASSERT_EQ(doc["blocks"].size(), h.blocks.size());
  int expected_begin = 0;
  for (const auto& block : doc["blocks"]) {
    EXPECT_EQ(block["begin"].get<int>(), expected_begin);
    expected_begin = block["end"].get<int>();
  }
  EXPECT_EQ(expected_begin, h.model.num_variables());
  EXPECT_EQ(h.Var("lambda", 2), h.block("lambda").begin + 2);
  EXPECT_THROW(h.block("missing"), Error);
}

TEST(HandleTest, BuiltModelsRoundTripThroughLpText) {
  std::vector<Model> models = {
      BuildTreeExtension(Path3()).model, BuildGomoryHuLp(Path3()).model,
      BuildSteinerApprox(Star(), {1, 2, 3}).model, BuildTCutLp(Path3(), {0, 2}).model};
  for (const Model& m : models) {
    const std::string text = ratlp::WriteLp(m);
    Model back = ratlp::ReadLp(text);
    EXPECT_EQ(ratlp::WriteLp(back), text);
    SolveOutcome a = ratlp::Solve(m);
    SolveOutcome b = ratlp::Solve(back);
    ASSERT_TRUE(a.optimal());
    ASSERT_TRUE(b.optimal());
    EXPECT_EQ(a.objective, b.objective);
  }
}

}  // namespace
}  // namespace extform::formulations
