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

#ifndef EXTFORM_RATLP_MODEL_H_
#define EXTFORM_RATLP_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "extform/ratlp/rational.h"

namespace extform::ratlp {

enum class RowSense { kGreaterEqual, kEqual, kLessEqual };
enum class ObjectiveSense { kMinimize, kMaximize };

std::string_view RowSenseSymbol(RowSense sense);

struct Term {
  int var;
  Rat coef;
};
using LinearExpr = std::vector<Term>;

// A missing bound means -inf (lower) or +inf (upper).
struct Variable {
  std::string name;
  std::optional<Rat> lower;
  std::optional<Rat> upper;
};

struct Constraint {
  std::string name;
  LinearExpr terms;
  RowSense sense = RowSense::kGreaterEqual;
  Rat rhs;
};

struct Objective {
  ObjectiveSense sense = ObjectiveSense::kMinimize;
  LinearExpr terms;
};

// Sparse linear program over exact rationals. Immutable after Create();
// every row and the objective are stored sorted by variable index with
// duplicate entries merged and zero coefficients dropped.
class Model {
 public:
  Model() = default;

  // Validates and canonicalizes. Throws Error(kInvalidArgument) on a
  // duplicate variable name, a coefficient on an undeclared variable, or
  // crossed bounds.
  static Model Create(std::vector<Variable> variables,
                      std::vector<Constraint> constraints,
                      Objective objective);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(int index) const { return variables_[index]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint& constraint(int index) const { return constraints_[index]; }
  const Objective& objective() const { return objective_; }

  std::optional<int> FindVariable(std::string_view name) const;

  std::size_t NumNonzeros() const;

  Rat EvaluateObjective(std::span<const Rat> x) const;
  Rat EvaluateRow(int row, std::span<const Rat> x) const;

  // Same feasible region, different objective.
  Model WithObjective(Objective objective) const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  Objective objective_;
  std::unordered_map<std::string, int> index_;
};

// Incremental construction of a Model.
class ModelBuilder {
 public:
  ModelBuilder() = default;
  // Starts from a copy of `base` (variables, rows and objective).
  explicit ModelBuilder(const Model& base);

  int AddVariable(std::string name, std::optional<Rat> lower = Rat(0),
                  std::optional<Rat> upper = std::nullopt);
  int AddFreeVariable(std::string name) {
    return AddVariable(std::move(name), std::nullopt, std::nullopt);
  }
  int AddConstraint(std::string name, LinearExpr terms, RowSense sense,
                    Rat rhs);
  void SetObjective(ObjectiveSense sense, LinearExpr terms);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

  Model Build() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  Objective objective_;
};

}  // namespace extform::ratlp

#endif  // EXTFORM_RATLP_MODEL_H_
