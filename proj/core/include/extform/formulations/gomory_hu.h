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

#ifndef EXTFORM_FORMULATIONS_GOMORY_HU_H_
#define EXTFORM_FORMULATIONS_GOMORY_HU_H_

#include <vector>

#include "extform/formulations/handle.h"
#include "extform/graphs/graph.h"
#include "extform/ratlp/simplex.h"

namespace extform::formulations {

// Minimum-requirement tree LP: the split spanning-tree system on the complete
// graph K over V(G) (edges in lexicographic id order) plus, for every
// f in E(K) and {u, v} in E(G),
//   x^f_uv + mu_{f,t_f,u} - mu_{f,t_f,v} >= 0 and the mirrored row,
// x^f >= 0, minimizing sum_f sum_e c(e) x^f_e. t_f is the endpoint of f with
// the smaller id. Blocks: lambda, mu, x_f.
// Throws Error(kDisconnected) or Error(kInvalidArgument) for |V| < 2.
FormulationHandle BuildGomoryHuLp(const graphs::Graph& g);

// The model of `h` restricted to objective value `optimum`, minimizing
// sum_k 2^k lambda_k. When the lambda projection of that optimal face is a
// 0/1 polytope, the re-solve's lambda is one of its vertices.
ratlp::Model LexicographicLambdaModel(const FormulationHandle& gh, const Rat& optimum);

// Solves the Gomory-Hu LP. When the basic optimum has a fractional lambda
// block, re-solves over the optimal face minimizing
// sum_k 2^k lambda_k, whose optimum is a single 0/1 lambda. The returned
// outcome then carries the re-solve's primal point only (no duals).
ratlp::SolveOutcome SolveGomoryHuLp(const FormulationHandle& gh,
                                    const ratlp::SolveOptions& options = {});

// Optimal face system of the Gomory-Hu LP; its lambda projection is the
// convex hull of the Gomory-Hu trees of G. Zero objective.
// Blocks: lambda, mu, x_f, eta (duals).
FormulationHandle BuildGhTreePolytopeExtension(
    const graphs::Graph& g, const ratlp::SolveOptions& options = {});

// Powers of two 1, 2, 4, ... over the lambda block.
ratlp::LinearExpr LexicographicLambdaObjective(const FormulationHandle& h);

struct TCutOptions {
  int max_nodes = 6;
  ratlp::SolveOptions solve;
};

// Minimum T-cut LP: lexicographically pinned Gomory-Hu tree (optimal face of
// min d^T lambda over the Gomory-Hu polytope extension), r-s path systems
// for s in T \ {r}, the parity chain alpha^0..alpha^k, the selection simplex
// 0 <= theta <= nu, and y^f_e >= x^f_e + theta_f - 1 with x^f_e <= 1.
// Blocks: lambda, mu, x_f, eta, pi, y_s, alpha, nu, theta, y_f.
// Throws Error(kOddTerminalSet), Error(kDisconnected) or
// Error(kSizeCapExceeded).
FormulationHandle BuildTCutLp(const graphs::Graph& g,
                              const std::vector<int>& terminals,
                              const TCutOptions& options = {});

}  // namespace extform::formulations

#endif  // EXTFORM_FORMULATIONS_GOMORY_HU_H_
