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

#include "extform/ratlp/model.h"

#include <algorithm>
#include <string>
#include <utility>

#include "extform/error.h"

namespace extform::ratlp {

std::string_view RowSenseSymbol(RowSense sense) {
  switch (sense) {
    case RowSense::kGreaterEqual:
      return ">=";
    case RowSense::kEqual:
      return "=";
    case RowSense::kLessEqual:
      return "<=";
  }
  return "?";
}

namespace {

void Canonicalize(LinearExpr& expr, int num_variables,
                  std::string_view context) {
  for (const Term& t : expr) {
    if (t.var < 0 || t.var >= num_variables) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coefficient on undeclared variable " +
                      std::to_string(t.var) + " in " + std::string(context));
    }
  }
  std::stable_sort(expr.begin(), expr.end(),
                   [](const Term& a, const Term& b) { return a.var < b.var; });
  LinearExpr merged;
  merged.reserve(expr.size());
  for (Term& t : expr) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coef) == 0; });
  expr = std::move(merged);
}

Rat Dot(const LinearExpr& expr, std::span<const Rat> x) {
  Rat sum;
  for (const Term& t : expr) sum += t.coef * x[t.var];
  return sum;
}

}  // namespace

Model Model::Create(std::vector<Variable> variables,
                    std::vector<Constraint> constraints, Objective objective) {
  Model model;
  model.index_.reserve(variables.size());
  for (int j = 0; j < static_cast<int>(variables.size()); ++j) {
    const Variable& v = variables[j];
    if (!model.index_.emplace(v.name, j).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate variable name '" + v.name + "'");
    }
    if (v.lower && v.upper && *v.lower > *v.upper) {
      throw Error(ErrorCode::kInvalidArgument,
                  "crossed bounds on variable '" + v.name + "'");
    }
  }
  const int n = static_cast<int>(variables.size());
  for (Constraint& c : constraints) Canonicalize(c.terms, n, c.name);
  Canonicalize(objective.terms, n, "objective");
  model.variables_ = std::move(variables);
  model.constraints_ = std::move(constraints);
  model.objective_ = std::move(objective);
  return model;
}

std::optional<int> Model::FindVariable(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Model::NumNonzeros() const {
  std::size_t total = 0;
  for (const Constraint& c : constraints_) total += c.terms.size();
  return total;
}

Rat Model::EvaluateObjective(std::span<const Rat> x) const {
  return Dot(objective_.terms, x);
}

Rat Model::EvaluateRow(int row, std::span<const Rat> x) const {
  return Dot(constraints_[row].terms, x);
}

Model Model::WithObjective(Objective objective) const {
  Canonicalize(objective.terms, num_variables(), "objective");
  Model copy = *this;
  copy.objective_ = std::move(objective);
  return copy;
}

ModelBuilder::ModelBuilder(const Model& base)
    : variables_(base.variables()),
      constraints_(base.constraints()),
      objective_(base.objective()) {}

int ModelBuilder::AddVariable(std::string name, std::optional<Rat> lower,
                              std::optional<Rat> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  return static_cast<int>(variables_.size()) - 1;
}

int ModelBuilder::AddConstraint(std::string name, LinearExpr terms,
                                RowSense sense, Rat rhs) {
  constraints_.push_back(
      {std::move(name), std::move(terms), sense, std::move(rhs)});
  return static_cast<int>(constraints_.size()) - 1;
}

void ModelBuilder::SetObjective(ObjectiveSense sense, LinearExpr terms) {
  objective_ = {sense, std::move(terms)};
}

Model ModelBuilder::Build() const {
  return Model::Create(variables_, constraints_, objective_);
}

}  // namespace extform::ratlp
