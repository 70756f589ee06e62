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

#include "extform/formulations/disjunctive.h"

#include <string>

#include "extform/error.h"

namespace extform::formulations {
namespace {

using ratlp::LinearExpr;
using ratlp::ModelBuilder;
using ratlp::RowSense;

std::string Index(int i) { return "[" + std::to_string(i) + "]"; }

std::string Index(int i, int j) {
  return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void CheckObjective(const std::vector<Rat>& w, int n) {
  if (static_cast<int>(w.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "objective has " + std::to_string(w.size()) +
                    " entries, expected " + std::to_string(n));
  }
}

}  // namespace

void Validate(const PolyhedronDesc& p) {
  Validate(AsExtension(p));
}

void Validate(const ExtensionDesc& e) {
  if (e.dimension < 0 || e.aux_dimension < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative dimension");
  }
  if (e.rows.size() != e.rhs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "row and rhs counts differ");
  }
  for (const auto& row : e.rows) {
    if (static_cast<int>(row.size()) != e.dimension + e.aux_dimension) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row length differs from the declared dimension");
    }
  }
}

ExtensionDesc AsExtension(const PolyhedronDesc& p) {
  return ExtensionDesc{p.dimension, 0, p.rows, p.rhs};
}

ExtensionDesc SimplexCoupling(int k) {
  ExtensionDesc e;
  e.dimension = k;
  e.rows.emplace_back(k, Rat(1));
  e.rhs.emplace_back(1);
  e.rows.emplace_back(k, Rat(-1));
  e.rhs.emplace_back(-1);
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> row(k);
    row[i] = 1;
    e.rows.push_back(row);
    e.rhs.emplace_back(0);
  }
  return e;
}

FormulationHandle BuildBalasHull(const std::vector<PolyhedronDesc>& polys,
                                 const std::vector<Rat>& w,
                                 ratlp::ObjectiveSense sense) {
  if (polys.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "hull needs at least one polyhedron");
  }
  const int n = polys[0].dimension;
  for (const PolyhedronDesc& p : polys) {
    Validate(p);
    if (p.dimension != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "polyhedra live in different dimensions");
    }
  }
  CheckObjective(w, n);
  const int k = static_cast<int>(polys.size());
  FormulationHandle h;
  h.kind = "balas-hull";
  ModelBuilder b;
  for (int j = 0; j < n; ++j) b.AddFreeVariable("x" + Index(j));
  AddBlock(h, "x", 0, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) b.AddFreeVariable("x_i" + Index(i, j));
  }
  AddBlock(h, "x_i", n, n + k * n);
  const int lambda = b.num_variables();
  for (int i = 0; i < k; ++i) b.AddVariable("lambda" + Index(i));
  AddBlock(h, "lambda", lambda, lambda + k);

  for (int j = 0; j < n; ++j) {
    LinearExpr row = {{j, Rat(1)}};
    for (int i = 0; i < k; ++i) row.push_back({n + i * n + j, Rat(-1)});
    b.AddConstraint("link" + Index(j), row, RowSense::kEqual, Rat(0));
  }
  for (int i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < polys[i].rows.size(); ++r) {
      LinearExpr row;
      for (int j = 0; j < n; ++j) row.push_back({n + i * n + j, polys[i].rows[r][j]});
      row.push_back({lambda + i, -polys[i].rhs[r]});
      b.AddConstraint("poly" + Index(i, static_cast<int>(r)), row,
                      RowSense::kGreaterEqual, Rat(0));
    }
  }
  LinearExpr simplex;
  for (int i = 0; i < k; ++i) simplex.push_back({lambda + i, Rat(1)});
  b.AddConstraint("simplex", simplex, RowSense::kEqual, Rat(1));
  LinearExpr obj;
  for (int j = 0; j < n; ++j) obj.push_back({j, w[j]});
  b.SetObjective(sense, obj);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

FormulationHandle BuildCoupled(const std::vector<ExtensionDesc>& subproblems,
                               const ExtensionDesc& coupling,
                               const std::vector<Rat>& w,
                               ratlp::ObjectiveSense sense,
                               const CoupledOptions& options) {
  if (subproblems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no subproblems");
  }
  const int k = static_cast<int>(subproblems.size());
  const int n = subproblems[0].dimension;
  for (const ExtensionDesc& e : subproblems) {
    Validate(e);
    if (e.dimension != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "subproblems live in different dimensions");
    }
  }
  Validate(coupling);
  if (coupling.dimension != k) {
    throw Error(ErrorCode::kInvalidArgument,
                "coupling dimension " + std::to_string(coupling.dimension) +
                    " differs from the number of subproblems " +
                    std::to_string(k));
  }
  CheckObjective(w, n);

  FormulationHandle h;
  h.kind = "coupled";
  ModelBuilder b;
  if (options.include_aggregate) {
    for (int j = 0; j < n; ++j) b.AddFreeVariable("x" + Index(j));
    AddBlock(h, "x", 0, n);
  }
  const int xi = b.num_variables();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) b.AddFreeVariable("x_i" + Index(i, j));
  }
  AddBlock(h, "x_i", xi, b.num_variables());
  const int eta = b.num_variables();
  std::vector<int> aux_begin(k);
  for (int i = 0; i < k; ++i) {
    aux_begin[i] = b.num_variables();
    for (int j = 0; j < subproblems[i].aux_dimension; ++j) {
      b.AddFreeVariable("eta" + Index(i, j));
    }
  }
  AddBlock(h, "eta", eta, b.num_variables());
  const int lambda = b.num_variables();
  for (int i = 0; i < k; ++i) b.AddFreeVariable("lambda" + Index(i));
  AddBlock(h, "lambda", lambda, b.num_variables());
  const int mu = b.num_variables();
  for (int j = 0; j < coupling.aux_dimension; ++j) {
    b.AddFreeVariable("mu" + Index(j));
  }
  AddBlock(h, "mu", mu, b.num_variables());

  if (options.include_aggregate) {
    for (int j = 0; j < n; ++j) {
      LinearExpr row = {{j, Rat(1)}};
      for (int i = 0; i < k; ++i) row.push_back({xi + i * n + j, Rat(-1)});
      b.AddConstraint("link" + Index(j), row, RowSense::kEqual, Rat(0));
    }
  }
  for (int i = 0; i < k; ++i) {
    const ExtensionDesc& e = subproblems[i];
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      LinearExpr row;
      for (int j = 0; j < n; ++j) row.push_back({xi + i * n + j, e.rows[r][j]});
      for (int j = 0; j < e.aux_dimension; ++j) {
        row.push_back({aux_begin[i] + j, e.rows[r][n + j]});
      }
      row.push_back({lambda + i, -e.rhs[r]});
      b.AddConstraint("sub" + Index(i, static_cast<int>(r)), row,
                      RowSense::kGreaterEqual, Rat(0));
    }
  }
  for (std::size_t r = 0; r < coupling.rows.size(); ++r) {
    LinearExpr row;
    for (int i = 0; i < k; ++i) row.push_back({lambda + i, coupling.rows[r][i]});
    for (int j = 0; j < coupling.aux_dimension; ++j) {
      row.push_back({mu + j, coupling.rows[r][k + j]});
    }
    b.AddConstraint("coupling" + Index(static_cast<int>(r)), row,
                    RowSense::kGreaterEqual, coupling.rhs[r]);
  }
  LinearExpr obj;
  for (int j = 0; j < n; ++j) {
    if (options.include_aggregate) {
      obj.push_back({j, w[j]});
    } else {
      for (int i = 0; i < k; ++i) obj.push_back({xi + i * n + j, w[j]});
    }
  }
  b.SetObjective(sense, obj);
  h.model = b.Build();
  h.CheckBlocks();
  return h;
}

ratlp::Model SubproblemModel(const ExtensionDesc& e, const std::vector<Rat>& w,
                             ratlp::ObjectiveSense sense) {
  Validate(e);
  CheckObjective(w, e.dimension);
  ModelBuilder b;
  for (int j = 0; j < e.dimension; ++j) b.AddFreeVariable("x" + Index(j));
  for (int j = 0; j < e.aux_dimension; ++j) b.AddFreeVariable("y" + Index(j));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    LinearExpr row;
    for (int j = 0; j < e.dimension + e.aux_dimension; ++j) {
      row.push_back({j, e.rows[r][j]});
    }
    b.AddConstraint("row" + Index(static_cast<int>(r)), row,
                    RowSense::kGreaterEqual, e.rhs[r]);
  }
  LinearExpr obj;
  for (int j = 0; j < e.dimension; ++j) obj.push_back({j, w[j]});
  b.SetObjective(sense, obj);
  return b.Build();
}

ExtensionDesc ModelAsExtension(const ratlp::Model& model, int dimension) {
  ExtensionDesc e;
  e.dimension = dimension;
  e.aux_dimension = model.num_variables() - dimension;
  const int n = model.num_variables();
  auto add = [&](const ratlp::LinearExpr& terms, const Rat& rhs, int sign) {
    std::vector<Rat> row(n);
    for (const ratlp::Term& t : terms) row[t.var] = sign * t.coef;
    e.rows.push_back(std::move(row));
    e.rhs.push_back(sign * rhs);
  };
  for (const ratlp::Constraint& c : model.constraints()) {
    if (c.sense != ratlp::RowSense::kLessEqual) add(c.terms, c.rhs, 1);
    if (c.sense != ratlp::RowSense::kGreaterEqual) add(c.terms, c.rhs, -1);
  }
  for (int j = 0; j < n; ++j) {
    const ratlp::Variable& v = model.variable(j);
    if (v.lower) add({{j, Rat(1)}}, *v.lower, 1);
    if (v.upper) add({{j, Rat(1)}}, *v.upper, -1);
  }
  return e;
}

}  // namespace extform::formulations
