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

#include "extform/verify/random_instances.h"

#include <algorithm>
#include <numeric>

#include "extform/error.h"
#include "extform/formulations/trees.h"

namespace extform::verify {

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat RandomRational(Rng& rng, int min_num, int max_num, int max_den) {
  int q = UniformInt(rng, 1, max_den);
  int p = UniformInt(rng, min_num * q, max_num * q);
  Rat value(p, q);
  value.canonicalize();
  return value;
}

std::vector<std::string> LetterIds(int n) {
  if (n > 26) throw Error(ErrorCode::kInvalidArgument, "at most 26 letter ids");
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.emplace_back(1, static_cast<char>('a' + i));
  return ids;
}

graphs::Graph RandomConnectedGraph(Rng& rng, const GraphOptions& options) {
  const int n = options.num_nodes;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<graphs::Edge> edges;
  auto add = [&](int u, int v) {
    used[u][v] = used[v][u] = true;
    edges.push_back({std::min(u, v), std::max(u, v),
                     RandomRational(rng, options.min_capacity,
                                    options.max_capacity,
                                    options.max_denominator)});
  };
  for (int i = 1; i < n; ++i) add(order[i], order[UniformInt(rng, 0, i - 1)]);
  std::bernoulli_distribution extra(options.extra_edge_probability);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used[u][v] && extra(rng)) add(u, v);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return graphs::Graph::Create(LetterIds(n), std::move(edges));
}

std::vector<int> RandomNodeSubset(Rng& rng, int num_nodes, int count) {
  std::vector<int> all(num_nodes);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

using formulations::ExtensionDesc;
using formulations::PolyhedronDesc;

struct Point {
  Rat x;
  Rat y;
};

Rat Cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Counterclockwise hull vertices of 3 or 4 random points with nonzero area.
std::vector<Point> RandomHullVertices(Rng& rng, int range) {
  while (true) {
    std::vector<Point> pts;
    const int count = UniformInt(rng, 3, 4);
    for (int i = 0; i < count; ++i) {
      pts.push_back({Rat(UniformInt(rng, -range, range)),
                     Rat(UniformInt(rng, -range, range))});
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    // Andrew's monotone chain.
    std::vector<Point> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t start = hull.size();
      for (const Point& p : pts) {
        while (hull.size() >= start + 2 &&
               sgn(Cross(hull[hull.size() - 2], hull.back(), p)) <= 0) {
          hull.pop_back();
        }
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() >= 3) return hull;
  }
}

ExtensionDesc CubeCoupling(int k) {
  ExtensionDesc e;
  e.dimension = k;
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> row(k);
    row[i] = 1;
    e.rows.push_back(row);
    e.rhs.emplace_back(0);
    row[i] = -1;
    e.rows.push_back(row);
    e.rhs.emplace_back(-1);
  }
  return e;
}

ExtensionDesc UniformCoupling(int k, int r) {
  ExtensionDesc e = CubeCoupling(k);
  e.rows.emplace_back(k, Rat(1));
  e.rhs.emplace_back(r);
  e.rows.emplace_back(k, Rat(-1));
  e.rhs.emplace_back(-r);
  return e;
}

ExtensionDesc TriangleTreeCoupling() {
  graphs::Graph k3 = graphs::Graph::FromIds(
      {"a", "b", "c"},
      {{"a", "b", Rat(0)}, {"a", "c", Rat(0)}, {"b", "c", Rat(0)}});
  return formulations::ModelAsExtension(formulations::BuildTreeExtension(k3).model, 3);
}

PolyhedronDesc Quadrant() {
  return PolyhedronDesc{2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {Rat(0), Rat(0)}};
}

}  // namespace

PolyhedronDesc RandomPolygon(Rng& rng, int range) {
  std::vector<Point> hull = RandomHullVertices(rng, range);
  PolyhedronDesc p;
  p.dimension = 2;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    // Inward normal of the counterclockwise edge a -> b.
    Rat nx = -(b.y - a.y);
    Rat ny = b.x - a.x;
    p.rows.push_back({nx, ny});
    p.rhs.push_back(nx * a.x + ny * a.y);
  }
  return p;
}

ExtensionDesc RandomPolygonExtension(Rng& rng, int range) {
  std::vector<Point> hull = RandomHullVertices(rng, range);
  const int q = static_cast<int>(hull.size());
  ExtensionDesc e;
  e.dimension = 2;
  e.aux_dimension = q;
  for (int coord = 0; coord < 2; ++coord) {
    for (int sign : {1, -1}) {
      std::vector<Rat> row(2 + q);
      row[coord] = sign;
      for (int j = 0; j < q; ++j) {
        row[2 + j] = -sign * (coord == 0 ? hull[j].x : hull[j].y);
      }
      e.rows.push_back(row);
      e.rhs.emplace_back(0);
    }
  }
  for (int sign : {1, -1}) {
    std::vector<Rat> row(2 + q);
    for (int j = 0; j < q; ++j) row[2 + j] = sign;
    e.rows.push_back(row);
    e.rhs.emplace_back(sign);
  }
  for (int j = 0; j < q; ++j) {
    std::vector<Rat> row(2 + q);
    row[2 + j] = 1;
    e.rows.push_back(row);
    e.rhs.emplace_back(0);
  }
  return e;
}

HullInstance RandomHullInstance(Rng& rng) {
  HullInstance inst;
  const int k = UniformInt(rng, 1, 3);
  for (int i = 0; i < k; ++i) inst.polys.push_back(RandomPolygon(rng));
  int wx = 0, wy = 0;
  while (wx == 0 && wy == 0) {
    wx = UniformInt(rng, -5, 5);
    wy = UniformInt(rng, -5, 5);
  }
  inst.w = {Rat(wx), Rat(wy)};
  inst.sense = UniformInt(rng, 0, 1) ? ratlp::ObjectiveSense::kMaximize
                                     : ratlp::ObjectiveSense::kMinimize;
  return inst;
}

CoupledInstance RandomCoupledInstance(Rng& rng) {
  CoupledInstance inst;
  const int kind = UniformInt(rng, 0, 3);
  const int k = kind == 3 ? 3 : UniformInt(rng, 2, 4);
  for (int i = 0; i < k; ++i) {
    if (UniformInt(rng, 0, 1)) {
      inst.subproblems.push_back(formulations::AsExtension(RandomPolygon(rng)));
    } else {
      inst.subproblems.push_back(RandomPolygonExtension(rng));
    }
  }
  switch (kind) {
    case 0:
      inst.coupling = formulations::SimplexCoupling(k);
      inst.label = "simplex";
      break;
    case 1:
      inst.coupling = CubeCoupling(k);
      inst.label = "cube";
      break;
    case 2: {
      const int r = UniformInt(rng, 1, k - 1);
      inst.coupling = UniformCoupling(k, r);
      inst.label = "uniform-" + std::to_string(r);
      break;
    }
    default:
      inst.coupling = TriangleTreeCoupling();
      inst.label = "triangle-trees";
  }
  inst.w = {Rat(UniformInt(rng, -5, 5)), Rat(UniformInt(rng, -5, 5))};
  inst.sense = UniformInt(rng, 0, 1) ? ratlp::ObjectiveSense::kMaximize
                                     : ratlp::ObjectiveSense::kMinimize;
  inst.label += std::string("/") +
                (inst.sense == ratlp::ObjectiveSense::kMaximize ? "max" : "min");
  return inst;
}

CoupledInstance ConstructedUnboundedInstance(int variant) {
  Rng rng(1000 + variant);
  CoupledInstance inst;
  inst.sense = ratlp::ObjectiveSense::kMaximize;
  inst.w = {Rat(1), Rat(2)};
  inst.subproblems.push_back(formulations::AsExtension(Quadrant()));
  inst.subproblems.push_back(formulations::AsExtension(RandomPolygon(rng)));
  inst.subproblems.push_back(RandomPolygonExtension(rng));
  switch (variant) {
    case 0:
      inst.label = "quadrant/simplex";
      inst.coupling = formulations::SimplexCoupling(3);
      break;
    case 1:
      inst.label = "quadrant/cube";
      inst.coupling = CubeCoupling(3);
      break;
    case 2: {
      // lambda_0 = 0 on the whole coupling polytope: the quadrant still
      // contributes its recession cone.
      inst.label = "quadrant/simplex-without-first";
      inst.coupling = formulations::SimplexCoupling(3);
      inst.coupling.rows.push_back({Rat(-1), Rat(0), Rat(0)});
      inst.coupling.rhs.emplace_back(0);
      break;
    }
    case 3:
      inst.label = "quadrant/triangle-trees";
      inst.coupling = TriangleTreeCoupling();
      break;
    case 4: {
      // The ray {t (1, 1) | t >= 0} written with an auxiliary t, under an
      // "exactly 2 of 3" coupling.
      inst.label = "ray-extension/uniform-2";
      ExtensionDesc ray;
      ray.dimension = 2;
      ray.aux_dimension = 1;
      for (int coord = 0; coord < 2; ++coord) {
        for (int sign : {1, -1}) {
          std::vector<Rat> row(3);
          row[coord] = sign;
          row[2] = -sign;
          ray.rows.push_back(row);
          ray.rhs.emplace_back(0);
        }
      }
      ray.rows.push_back({Rat(0), Rat(0), Rat(1)});
      ray.rhs.emplace_back(0);
      inst.subproblems[0] = ray;
      inst.coupling = UniformCoupling(3, 2);
      break;
    }
    default:
      inst.label = "quadrant/simplex/bounded-direction";
      inst.coupling = formulations::SimplexCoupling(3);
      inst.w = {Rat(-1), Rat(-3)};
  }
  return inst;
}

CoupledInstance SteinerCoupledInstance(const graphs::Graph& g,
                                       const std::vector<int>& terminals) {
  std::vector<int> s = terminals;
  std::sort(s.begin(), s.end(),
            [&](int a, int b) { return g.node(a) < g.node(b); });
  graphs::Digraph d = graphs::Digraph::FromGraph(g);
  const int num_arcs = static_cast<int>(d.arcs().size());
  CoupledInstance inst;
  inst.label = "metric-closure-tree";
  inst.sense = ratlp::ObjectiveSense::kMinimize;
  for (const graphs::Arc& a : d.arcs()) inst.w.push_back(a.c);
  std::vector<std::string> ids;
  std::vector<std::tuple<std::string, std::string, Rat>> pairs;
  for (int v : s) ids.push_back(g.node(v));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      pairs.emplace_back(ids[i], ids[j], Rat(0));
      PolyhedronDesc flow;
      flow.dimension = num_arcs;
      for (int a = 0; a < num_arcs; ++a) {
        std::vector<Rat> row(num_arcs);
        row[a] = 1;
        flow.rows.push_back(std::move(row));
        flow.rhs.emplace_back(0);
      }
      for (int v = 0; v < g.num_nodes(); ++v) {
        std::vector<Rat> row(num_arcs);
        for (int a = 0; a < num_arcs; ++a) {
          if (d.arc(a).tail == v) row[a] += 1;
          if (d.arc(a).head == v) row[a] -= 1;
        }
        const Rat supply(v == s[i] ? 1 : (v == s[j] ? -1 : 0));
        std::vector<Rat> neg = row;
        for (Rat& c : neg) c = -c;
        flow.rows.push_back(std::move(row));
        flow.rhs.push_back(supply);
        flow.rows.push_back(std::move(neg));
        flow.rhs.push_back(-supply);
      }
      inst.subproblems.push_back(formulations::AsExtension(flow));
    }
  }
  graphs::Graph k_s = graphs::Graph::FromIds(ids, pairs);
  inst.coupling = formulations::ModelAsExtension(
      formulations::BuildTreeExtension(k_s).model, k_s.num_edges());
  return inst;
}

}  // namespace extform::verify
