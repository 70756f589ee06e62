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

#ifndef EXTFORM_FORMULATIONS_FLOWS_H_
#define EXTFORM_FORMULATIONS_FLOWS_H_

#include <vector>

#include "extform/formulations/handle.h"
#include "extform/formulations/trees.h"
#include "extform/graphs/graph.h"

namespace extform::formulations {

// Unit s-t flow on the bidirected graph, 0 <= x <= 1, minimizing arc cost.
// Block: x (arc order of graphs::Digraph). Throws Error(kInvalidArgument)
// when s = t.
FormulationHandle BuildShortestPathLp(const graphs::Graph& g, int s, int t);

// z_s = 0, z_t = 1, x_uv >= |z_u - z_v|, minimizing sum c(e) x_e.
// Blocks: z, x.
FormulationHandle BuildStCutLp(const graphs::Graph& g, int s, int t);

// Metric-closure spanning-tree LP for terminal set S: one flow of value
// lambda_e per pair e = {s, t} of S (s the endpoint with the smaller id),
// arc capacities lambda_e, coupled with a spanning-tree system on the
// complete graph over S. Blocks: lambda, mu | nu, sigma, x_e.
// Throws Error(kDisconnected) for disconnected G and
// Error(kInvalidArgument) when |S| < 2.
FormulationHandle BuildSteinerApprox(const graphs::Graph& g,
                                     const std::vector<int>& terminals,
                                     TreeBackend backend = TreeBackend::kSplit);

}  // namespace extform::formulations

#endif  // EXTFORM_FORMULATIONS_FLOWS_H_
