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

#ifndef EXTFORM_FORMULATIONS_DISJUNCTIVE_H_
#define EXTFORM_FORMULATIONS_DISJUNCTIVE_H_

#include <vector>

#include "extform/formulations/handle.h"
#include "extform/ratlp/model.h"

namespace extform::formulations {

// P = {x in R^n | A x >= b}, rows stored densely.
struct PolyhedronDesc {
  int dimension = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
};

// {(x, y) | A x + B y >= b} with x in R^dimension, y in R^aux_dimension.
// Each row has dimension + aux_dimension entries, x part first.
struct ExtensionDesc {
  int dimension = 0;
  int aux_dimension = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
};

ExtensionDesc AsExtension(const PolyhedronDesc& p);

// Standard simplex {lambda in R^k | sum lambda = 1, lambda >= 0}.
ExtensionDesc SimplexCoupling(int k);

// Throws Error(kInvalidArgument) on inconsistent dimensions.
void Validate(const PolyhedronDesc& p);
void Validate(const ExtensionDesc& e);

// Convex hull of a union of polyhedra:
//   x - sum_i x^i = 0,  A^i x^i - lambda_i b^i >= 0,  sum lambda = 1,
//   lambda >= 0, optimizing w^T x.
// Blocks: x, x_i (polyhedron-major), lambda.
FormulationHandle BuildBalasHull(const std::vector<PolyhedronDesc>& polys,
                                 const std::vector<Rat>& w,
                                 ratlp::ObjectiveSense sense);

struct CoupledOptions {
  // Keep the aggregate x variable and the rows x - sum_i x^i = 0; otherwise
  // the objective is stated on sum_i x^i directly.
  bool include_aggregate = true;
};

// Two-level system over subproblems (A^i | B^i) and a coupling extension
// (C | D) whose original space is indexed by the subproblems:
//   A^i x^i + B^i y^i - lambda_i b^i >= 0,  C lambda + D mu >= d.
// Blocks: [x], x_i, eta (subproblem auxiliaries), lambda, mu.
//
// The coupling is expected to describe a 0/1-polytope and each subproblem a
// pointed polyhedron; neither property is checked.
FormulationHandle BuildCoupled(const std::vector<ExtensionDesc>& subproblems,
                               const ExtensionDesc& coupling,
                               const std::vector<Rat>& w,
                               ratlp::ObjectiveSense sense,
                               const CoupledOptions& options = {});

// {x | A x >= b} (or its extension) as a standalone Model optimizing w^T x
// over the first `dimension` variables.
ratlp::Model SubproblemModel(const ExtensionDesc& e, const std::vector<Rat>& w,
                             ratlp::ObjectiveSense sense);

// The feasible set of `model` as an extension whose first `dimension`
// variables are the original space: >= rows kept, <= rows negated, equality
// rows and finite bounds split into two >= rows. The objective is dropped.
ExtensionDesc ModelAsExtension(const ratlp::Model& model, int dimension);

}  // namespace extform::formulations

#endif  // EXTFORM_FORMULATIONS_DISJUNCTIVE_H_
