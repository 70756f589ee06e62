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

#ifndef EXTFORM_RATLP_SIMPLEX_H_
#define EXTFORM_RATLP_SIMPLEX_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "extform/ratlp/model.h"
#include "extform/ratlp/rational.h"

namespace extform::ratlp {

enum class PricingRule {
  // Smallest eligible index enters, smallest index leaves on ratio ties.
  kBland,
  // Most negative reduced cost enters. After a run of degenerate pivots the
  // engine falls back to Bland's rule until the objective strictly improves.
  kLargestCoefficient,
};

struct SolveOptions {
  PricingRule pricing = PricingRule::kBland;
  std::int64_t pivot_cap = 2'000'000;
  // Eta-file length that triggers a fresh basis factorization.
  int refactor_interval = 96;
  // Consecutive degenerate pivots tolerated under kLargestCoefficient.
  int degenerate_streak_limit = 24;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kAborted };

std::string_view SolveStatusName(SolveStatus status);

enum class BasisKind { kVariable, kRowSlack, kArtificial };

struct BasisEntry {
  BasisKind kind;
  int index;  // variable index, or constraint index for slacks/artificials
};

// Exact result of a solve. Dual vectors are indexed by the rows of
// Normalize(model) and use its sign convention: y >= 0 on inequality rows,
// y^T A = d^T, and d^T x = y^T b at optimality.
struct SolveOutcome {
  SolveStatus status = SolveStatus::kAborted;
  // kOptimal: a basic optimal solution and its objective in the source sense.
  std::vector<Rat> primal;
  Rat objective;
  std::vector<Rat> dual;
  std::vector<BasisEntry> basis;
  // kInfeasible: y >= 0 (inequality rows) with y^T A = 0 and y^T b > 0.
  std::vector<Rat> farkas;
  // kUnbounded: A r >= 0 (= 0 on equality rows) and d^T r < 0.
  std::vector<Rat> ray;
  std::int64_t pivots = 0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

SolveOutcome Solve(const Model& model, const SolveOptions& options = {});

}  // namespace extform::ratlp

#endif  // EXTFORM_RATLP_SIMPLEX_H_
