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

#include "extform/ratlp/optimal_face.h"

#include <string>
#include <utility>
#include <vector>

#include "extform/error.h"

namespace extform::ratlp {

Model BuildOptimalFaceSystem(const Model& model, std::string_view tag,
                             const SolveOptions& options,
                             OptimalFaceMap* map) {
  return BuildOptimalFaceSystem(model, Solve(model, options), tag, map);
}

Model BuildOptimalFaceSystem(const Model& model, const SolveOutcome& solved,
                             std::string_view tag, OptimalFaceMap* map) {
  if (!solved.optimal()) {
    throw Error(ErrorCode::kPrecondition,
                "optimal face requires a finite optimum, solver reported " +
                    std::string(SolveStatusName(solved.status)));
  }
  const std::string prefix(tag);
  const int n = model.num_variables();
  const int sign =
      model.objective().sense == ObjectiveSense::kMaximize ? -1 : 1;
  std::vector<Rat> cost(n);
  for (const Term& t : model.objective().terms) cost[t.var] = sign * t.coef;

  ModelBuilder builder(model);
  OptimalFaceMap local;
  local.num_primal = n;
  local.first_dual = n;
  local.row_dual.resize(model.num_constraints());
  local.lower_dual.assign(n, -1);
  local.upper_dual.assign(n, -1);

  // Dual columns, gathered per source variable as they are created.
  std::vector<LinearExpr> dual_rows(n);
  LinearExpr gap;  // c^T x - y^T b
  for (int j = 0; j < n; ++j) {
    if (sgn(cost[j]) != 0) gap.push_back({j, cost[j]});
  }
  for (int i = 0; i < model.num_constraints(); ++i) {
    const Constraint& c = model.constraint(i);
    std::optional<Rat> lo, hi;
    if (c.sense == RowSense::kGreaterEqual) lo = Rat(0);
    if (c.sense == RowSense::kLessEqual) hi = Rat(0);
    const int y = builder.AddVariable(prefix + ".y[" + c.name + "]", lo, hi);
    local.row_dual[i] = y;
    for (const Term& t : c.terms) dual_rows[t.var].push_back({y, t.coef});
    if (sgn(c.rhs) != 0) gap.push_back({y, -c.rhs});
  }
  std::vector<bool> lower_implicit(n, false), upper_implicit(n, false);
  for (int j = 0; j < n; ++j) {
    const Variable& v = model.variable(j);
    if (v.lower) {
      if (sgn(*v.lower) == 0) {
        lower_implicit[j] = true;
      } else {
        const int z = builder.AddVariable(prefix + ".zl[" + v.name + "]");
        local.lower_dual[j] = z;
        dual_rows[j].push_back({z, Rat(1)});
        gap.push_back({z, -*v.lower});
      }
    }
    if (v.upper) {
      if (sgn(*v.upper) == 0) {
        upper_implicit[j] = true;
      } else {
        const int z = builder.AddVariable(prefix + ".zu[" + v.name + "]");
        local.upper_dual[j] = z;
        dual_rows[j].push_back({z, Rat(-1)});
        gap.push_back({z, *v.upper});
      }
    }
  }
  local.end_dual = builder.num_variables();

  for (int j = 0; j < n; ++j) {
    if (lower_implicit[j] && upper_implicit[j]) continue;
    RowSense sense = RowSense::kEqual;
    if (lower_implicit[j]) sense = RowSense::kLessEqual;
    if (upper_implicit[j]) sense = RowSense::kGreaterEqual;
    builder.AddConstraint(prefix + ".dual[" + model.variable(j).name + "]",
                          std::move(dual_rows[j]), sense, cost[j]);
  }
  builder.AddConstraint(prefix + ".gap", std::move(gap), RowSense::kEqual,
                        Rat(0));
  builder.SetObjective(ObjectiveSense::kMinimize, {});
  if (map != nullptr) *map = std::move(local);
  return builder.Build();
}

}  // namespace extform::ratlp
