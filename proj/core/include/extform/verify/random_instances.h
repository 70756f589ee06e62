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

#ifndef EXTFORM_VERIFY_RANDOM_INSTANCES_H_
#define EXTFORM_VERIFY_RANDOM_INSTANCES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "extform/formulations/disjunctive.h"
#include "extform/graphs/graph.h"
#include "extform/ratlp/model.h"

namespace extform::verify {

using Rng = std::mt19937_64;

int UniformInt(Rng& rng, int lo, int hi);

// p/q with 1 <= q <= max_den and min_num * q <= p <= max_num * q, i.e. a
// value in [min_num, max_num].
Rat RandomRational(Rng& rng, int min_num, int max_num, int max_den = 8);

// Node ids "a", "b", ... so that id order equals index order.
std::vector<std::string> LetterIds(int n);

struct GraphOptions {
  int num_nodes = 5;
  // Each non-tree pair becomes an edge with this probability.
  double extra_edge_probability = 0.35;
  int min_capacity = 1;
  int max_capacity = 6;
  int max_denominator = 8;
};

// Random spanning tree plus extra edges; always connected.
graphs::Graph RandomConnectedGraph(Rng& rng, const GraphOptions& options);

// `count` distinct nodes of g, sorted by index.
std::vector<int> RandomNodeSubset(Rng& rng, int num_nodes, int count);

// Bounded polygon in R^2: the convex hull of 3 or 4 random integer points
// in [-range, range]^2, described by its facet rows.
formulations::PolyhedronDesc RandomPolygon(Rng& rng, int range = 4);

// The same kind of polygon given as the projection of
// {(x, nu) | x = sum_j nu_j p_j, sum nu = 1, nu >= 0}.
formulations::ExtensionDesc RandomPolygonExtension(Rng& rng, int range = 4);

struct HullInstance {
  std::vector<formulations::PolyhedronDesc> polys;
  std::vector<Rat> w;
  ratlp::ObjectiveSense sense = ratlp::ObjectiveSense::kMaximize;
};

// 1 to 3 polygons, nonzero integer objective, random sense.
HullInstance RandomHullInstance(Rng& rng);

struct CoupledInstance {
  std::string label;
  std::vector<formulations::ExtensionDesc> subproblems;
  formulations::ExtensionDesc coupling;
  std::vector<Rat> w;
  ratlp::ObjectiveSense sense = ratlp::ObjectiveSense::kMaximize;
};

// Polygon subproblems in facet or extension form, coupled by a simplex,
// a cube, a uniform "exactly r of k" polytope, or the spanning-tree
// extension of a triangle.
CoupledInstance RandomCoupledInstance(Rng& rng);

// Instances with an unbounded first subproblem: the nonnegative quadrant
// (variants 0-3 and 5) or a ray in extension form (variant 4). Variants 0-4
// are unbounded; the objective of variant 5 points away from the recession
// cone, so it is bounded.
CoupledInstance ConstructedUnboundedInstance(int variant);

// The metric-closure spanning-tree problem on terminal set S as a coupled
// instance: one unit s-t flow polytope over the arcs of G per pair of S
// (lexicographic pair order), coupled by the spanning-tree extension of the
// complete graph on S, minimizing arc cost. Its optimum is the minimum
// spanning tree weight of the metric closure restricted to S.
CoupledInstance SteinerCoupledInstance(const graphs::Graph& g,
                                       const std::vector<int>& terminals);

}  // namespace extform::verify

#endif  // EXTFORM_VERIFY_RANDOM_INSTANCES_H_
