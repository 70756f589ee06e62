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

#ifndef EXTFORM_RATLP_CERTIFICATE_H_
#define EXTFORM_RATLP_CERTIFICATE_H_

#include <string>
#include <vector>

#include "extform/ratlp/model.h"
#include "extform/ratlp/rational.h"
#include "extform/ratlp/simplex.h"

namespace extform::ratlp {

// Result of one exact re-check of a solver outcome.
struct AuditFinding {
  std::string check;
  bool passed = false;
  Rat lhs;
  Rat rhs;
  std::string detail;
};

// Re-derives the claims carried by `outcome` against Normalize(model) using
// exact arithmetic only:
//   optimal    primal feasibility, objective recomputation, dual feasibility,
//              strong duality, complementary slackness;
//   unbounded  A r >= 0 (= 0 on equality rows) and d^T r < 0;
//   infeasible y >= 0, y^T A = 0, y^T b > 0.
// An aborted outcome yields a single failing finding.
std::vector<AuditFinding> AuditOutcome(const Model& model,
                                       const SolveOutcome& outcome);

bool AllPassed(const std::vector<AuditFinding>& findings);

}  // namespace extform::ratlp

#endif  // EXTFORM_RATLP_CERTIFICATE_H_
