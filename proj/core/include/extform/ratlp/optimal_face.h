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

#ifndef EXTFORM_RATLP_OPTIMAL_FACE_H_
#define EXTFORM_RATLP_OPTIMAL_FACE_H_

#include <string_view>
#include <vector>

#include "extform/ratlp/model.h"
#include "extform/ratlp/simplex.h"

namespace extform::ratlp {

// Where the dual multipliers of the source model live in the face system.
struct OptimalFaceMap {
  int num_primal = 0;            // source variables keep indices [0, n)
  int first_dual = 0;            // duals occupy [first_dual, end_dual)
  int end_dual = 0;
  std::vector<int> row_dual;     // source constraint -> dual variable
  std::vector<int> lower_dual;   // source variable -> dual variable or -1
  std::vector<int> upper_dual;
};

// Builds the primal-dual system whose feasible points are exactly the pairs
// (x, y) with x optimal for `model` and y optimal for its dual:
//
//   primal rows and bounds of `model`,
//   y^T A = c^T over the normal form (one row per source variable),
//   c^T x - y^T b = 0,
//   y >= 0 on inequality rows.
//
// Multipliers of zero-valued bound rows are not materialized: a bound
// x_j >= 0 turns its dual equation into y^T A_j <= c_j, whose slack is that
// multiplier. All new names are prefixed with `tag` so the construction can
// be nested. The returned model has a zero objective.
//
// Throws Error(kPrecondition) unless Solve(model) is optimal.
Model BuildOptimalFaceSystem(const Model& model, std::string_view tag,
                             const SolveOptions& options = {},
                             OptimalFaceMap* map = nullptr);

// Same, with the precondition taken from an existing outcome of `model`.
Model BuildOptimalFaceSystem(const Model& model, const SolveOutcome& solved,
                             std::string_view tag,
                             OptimalFaceMap* map = nullptr);

}  // namespace extform::ratlp

#endif  // EXTFORM_RATLP_OPTIMAL_FACE_H_
