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

#include "extform/ratlp/normal_form.h"

#include <utility>

namespace extform::ratlp {

NormalForm Normalize(const Model& model) {
  NormalForm nf;
  nf.num_variables = model.num_variables();
  nf.objective_sign =
      model.objective().sense == ObjectiveSense::kMaximize ? -1 : 1;
  nf.objective = model.objective().terms;
  if (nf.objective_sign < 0) {
    for (Term& t : nf.objective) t.coef = -t.coef;
  }

  nf.rows.reserve(model.num_constraints() + 2 * model.num_variables());
  nf.constraint_row.resize(model.num_constraints());
  for (int i = 0; i < model.num_constraints(); ++i) {
    const Constraint& c = model.constraint(i);
    NormalRow row{c.terms, c.sense == RowSense::kEqual, c.rhs,
                  NormalRowKind::kConstraint, i, 1};
    if (c.sense == RowSense::kLessEqual) {
      row.sign = -1;
      row.rhs = -row.rhs;
      for (Term& t : row.terms) t.coef = -t.coef;
    }
    nf.constraint_row[i] = nf.num_rows();
    nf.rows.push_back(std::move(row));
  }

  nf.lower_row.assign(model.num_variables(), -1);
  nf.upper_row.assign(model.num_variables(), -1);
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    if (v.lower) {
      nf.lower_row[j] = nf.num_rows();
      nf.rows.push_back({{{j, Rat(1)}}, false, *v.lower,
                         NormalRowKind::kLowerBound, j, 1});
    }
    if (v.upper) {
      nf.upper_row[j] = nf.num_rows();
      nf.rows.push_back({{{j, Rat(-1)}}, false, -*v.upper,
                         NormalRowKind::kUpperBound, j, -1});
    }
  }
  return nf;
}

}  // namespace extform::ratlp
