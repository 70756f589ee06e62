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

#ifndef EXTFORM_FORMULATIONS_TREES_H_
#define EXTFORM_FORMULATIONS_TREES_H_

#include <string>
#include <vector>

#include "extform/formulations/handle.h"
#include "extform/graphs/graph.h"
#include "extform/ratlp/model.h"

namespace extform::formulations {

enum class TreeBackend {
  // lambda, mu system: edge count, split rows and one-parent rows.
  kSplit,
  // Arborescence flows nu, sigma from a root, with lambda = nu_uv + nu_vu.
  kArborescence,
};

// Which ordered pairs (u, v) receive the one-parent row
//   lambda_uv + sum_{w != u, v; uw in E} mu_{uw, w, v} = 1.
enum class ParentRows {
  kAllOrderedPairs,  // every u != v; exact on every graph
  kEdgeOrientations, // both orientations of every edge
  kEdgesOnce,        // one row per edge, first endpoint as u
};

// Variables of a spanning-tree system appended to a builder. Edges are local
// node-index pairs over `num_nodes` nodes.
struct TreeLayout {
  int lambda = 0;
  int mu = 0;
  int num_nodes = 0;
  std::vector<NodePair> edges;

  int MuVar(int k, int side, int v) const {
    return mu + (2 * k + side) * num_nodes + v;
  }
};

// Appends lambda and mu blocks plus all rows of the split system.
TreeLayout AddSpanningTreeSystem(ratlp::ModelBuilder& b,
                                 FormulationHandle& h,
                                 const std::vector<std::string>& ids,
                                 const std::vector<NodePair>& edges,
                                 ParentRows parent_rows =
                                     ParentRows::kAllOrderedPairs);

// Appends lambda, nu and sigma blocks: root-r arborescence flows on the
// bidirected graph coupled by lambda_uv = nu_uv + nu_vu. Returns the first
// lambda variable.
int AddArborescenceSystem(ratlp::ModelBuilder& b, FormulationHandle& h,
                          const std::vector<std::string>& ids,
                          const std::vector<NodePair>& edges, int root);

// Spanning-tree extension of G minimizing sum c(e) lambda_e.
// Throws Error(kInvalidArgument) when G has fewer than two nodes.
FormulationHandle BuildTreeExtension(
    const graphs::Graph& g, ParentRows parent_rows = ParentRows::kAllOrderedPairs);

// Arborescence extension of G rooted at `root`, minimizing sum c(e) lambda_e.
FormulationHandle BuildArborescenceExtension(const graphs::Graph& g, int root);

}  // namespace extform::formulations

#endif  // EXTFORM_FORMULATIONS_TREES_H_
