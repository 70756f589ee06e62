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

#ifndef EXTFORM_RATLP_NORMAL_FORM_H_
#define EXTFORM_RATLP_NORMAL_FORM_H_

#include <vector>

#include "extform/ratlp/model.h"
#include "extform/ratlp/rational.h"

namespace extform::ratlp {

enum class NormalRowKind { kConstraint, kLowerBound, kUpperBound };

// One row of the canonical system: terms >= rhs, or terms = rhs.
struct NormalRow {
  LinearExpr terms;
  bool equality = false;
  Rat rhs;
  NormalRowKind kind = NormalRowKind::kConstraint;
  int source = 0;  // constraint index, or variable index for bound rows
  int sign = 1;    // this row equals `sign` times the source row
};

// min d^T x  s.t.  A x >= b (inequality rows), A x = b (equality rows), with
// every variable free. Bounds appear as explicit rows. Rows are ordered:
// source constraints first, then for each variable its lower-bound row and
// its upper-bound row when finite.
struct NormalForm {
  int num_variables = 0;
  std::vector<NormalRow> rows;
  LinearExpr objective;
  // Source objective value = objective_sign * (normal objective value).
  int objective_sign = 1;
  std::vector<int> constraint_row;
  std::vector<int> lower_row;  // -1 when the bound is infinite
  std::vector<int> upper_row;

  int num_rows() const { return static_cast<int>(rows.size()); }
};

NormalForm Normalize(const Model& model);

}  // namespace extform::ratlp

#endif  // EXTFORM_RATLP_NORMAL_FORM_H_
