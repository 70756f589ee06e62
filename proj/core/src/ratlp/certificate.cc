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

#include "extform/ratlp/certificate.h"

#include <string>
#include <vector>

#include "extform/ratlp/normal_form.h"

namespace extform::ratlp {
namespace {

Rat Dot(const LinearExpr& expr, const std::vector<Rat>& x) {
  Rat sum;
  for (const Term& t : expr) sum += t.coef * x[t.var];
  return sum;
}

// y^T A over all normal-form rows, indexed by variable.
std::vector<Rat> Transpose(const NormalForm& nf, const std::vector<Rat>& y) {
  std::vector<Rat> out(nf.num_variables);
  for (int r = 0; r < nf.num_rows(); ++r) {
    if (sgn(y[r]) == 0) continue;
    for (const Term& t : nf.rows[r].terms) out[t.var] += y[r] * t.coef;
  }
  return out;
}

AuditFinding Count(std::string check, long violations, std::string detail) {
  return {std::move(check), violations == 0, Rat(violations), Rat(0),
          std::move(detail)};
}

void AuditOptimal(const Model& model, const NormalForm& nf,
                  const SolveOutcome& out, std::vector<AuditFinding>& found) {
  const std::vector<Rat>& x = out.primal;
  if (static_cast<int>(x.size()) != nf.num_variables ||
      static_cast<int>(out.dual.size()) != nf.num_rows()) {
    found.push_back(Count("shape", 1, "primal/dual vector length mismatch"));
    return;
  }
  long infeasible = 0;
  long slack_violations = 0;
  long dual_sign = 0;
  std::string first_bad;
  Rat dual_objective;
  for (int r = 0; r < nf.num_rows(); ++r) {
    const NormalRow& row = nf.rows[r];
    const Rat activity = Dot(row.terms, x);
    const Rat slack = activity - row.rhs;
    const bool ok = row.equality ? sgn(slack) == 0 : sgn(slack) >= 0;
    if (!ok) {
      ++infeasible;
      if (first_bad.empty()) first_bad = "row " + std::to_string(r);
    }
    const Rat& y = out.dual[r];
    if (!row.equality && sgn(y) < 0) ++dual_sign;
    if (sgn(y) != 0 && sgn(slack) != 0) ++slack_violations;
    dual_objective += y * row.rhs;
  }
  found.push_back(Count("primal-feasibility", infeasible, first_bad));

  const Rat recomputed = model.EvaluateObjective(x);
  found.push_back({"objective-recompute", recomputed == out.objective,
                   recomputed, out.objective, ""});

  const std::vector<Rat> ya = Transpose(nf, out.dual);
  std::vector<Rat> d(nf.num_variables);
  for (const Term& t : nf.objective) d[t.var] = t.coef;
  long mismatched = 0;
  for (int j = 0; j < nf.num_variables; ++j) {
    if (ya[j] != d[j]) ++mismatched;
  }
  found.push_back(Count("dual-feasibility", mismatched + dual_sign,
                        std::to_string(mismatched) +
                            " columns with y^T A != d, " +
                            std::to_string(dual_sign) + " negative duals"));

  const Rat primal_objective = Dot(nf.objective, x);
  found.push_back({"strong-duality", primal_objective == dual_objective,
                   primal_objective, dual_objective, "normal-form min sense"});
  found.push_back(Count("complementary-slackness", slack_violations, ""));
}

void AuditUnbounded(const NormalForm& nf, const SolveOutcome& out,
                    std::vector<AuditFinding>& found) {
  if (static_cast<int>(out.ray.size()) != nf.num_variables) {
    found.push_back(Count("shape", 1, "ray length mismatch"));
    return;
  }
  long bad = 0;
  for (const NormalRow& row : nf.rows) {
    const int s = sgn(Dot(row.terms, out.ray));
    if (row.equality ? s != 0 : s < 0) ++bad;
  }
  found.push_back(Count("ray-recession", bad, "rows with A r violating sign"));
  const Rat gain = Dot(nf.objective, out.ray);
  found.push_back({"ray-improving", sgn(gain) < 0, gain, Rat(0), "d^T r < 0"});
}

void AuditInfeasible(const NormalForm& nf, const SolveOutcome& out,
                     std::vector<AuditFinding>& found) {
  if (static_cast<int>(out.farkas.size()) != nf.num_rows()) {
    found.push_back(Count("shape", 1, "certificate length mismatch"));
    return;
  }
  long negative = 0;
  Rat yb;
  for (int r = 0; r < nf.num_rows(); ++r) {
    if (!nf.rows[r].equality && sgn(out.farkas[r]) < 0) ++negative;
    yb += out.farkas[r] * nf.rows[r].rhs;
  }
  const std::vector<Rat> ya = Transpose(nf, out.farkas);
  long nonzero = 0;
  for (const Rat& v : ya) {
    if (sgn(v) != 0) ++nonzero;
  }
  found.push_back(Count("farkas-combination", nonzero + negative,
                        "y^T A must vanish with y >= 0 on inequalities"));
  found.push_back({"farkas-positive", sgn(yb) > 0, yb, Rat(0), "y^T b > 0"});
}

}  // namespace

std::vector<AuditFinding> AuditOutcome(const Model& model,
                                       const SolveOutcome& outcome) {
  std::vector<AuditFinding> found;
  const NormalForm nf = Normalize(model);
  switch (outcome.status) {
    case SolveStatus::kOptimal:
      AuditOptimal(model, nf, outcome, found);
      break;
    case SolveStatus::kUnbounded:
      AuditUnbounded(nf, outcome, found);
      break;
    case SolveStatus::kInfeasible:
      AuditInfeasible(nf, outcome, found);
      break;
    case SolveStatus::kAborted:
      found.push_back(Count("not-aborted", 1, "pivot cap reached"));
      break;
  }
  return found;
}

bool AllPassed(const std::vector<AuditFinding>& findings) {
  for (const AuditFinding& f : findings) {
    if (!f.passed) return false;
  }
  return true;
}

}  // namespace extform::ratlp
