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

#include "extform/ratlp/simplex.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "extform/error.h"

namespace extform::ratlp {

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kAborted:
      return "aborted";
  }
  return "unknown";
}

namespace {

using SparseColumn = std::vector<std::pair<int, Rat>>;

enum class State : std::uint8_t { kBasic, kAtLower, kAtUpper, kFreeZero };

// Elementary column transformation of the product-form inverse: the
// identity with column `row` replaced by (pivot at `row`, entries elsewhere).
struct Eta {
  int row;
  Rat pivot;
  SparseColumn entries;
};

// Bounded primal simplex on  A x - s = 0,  l <= (x, s) <= u, where each row
// slack s_i carries the row's sense and right-hand side as bounds. Phase one
// adds one artificial column per row whose slack starts out of bounds.
class Engine {
 public:
  Engine(const Model& model, const SolveOptions& options);

  SolveOutcome Run();

 private:
  enum class Step { kPivot, kOptimal, kUnbounded, kAborted };

  bool IsFixed(int col) const {
    return has_lower_[col] && has_upper_[col] && lower_[col] == upper_[col];
  }
  void SetNonbasicAtStart(int col);
  void Refactor();
  void Ftran(std::vector<Rat>& v) const;
  void Btran(std::vector<Rat>& u) const;
  void LoadColumn(int col, std::vector<Rat>& v) const;
  void ComputeDuals(std::vector<Rat>& y) const;
  void ReducedCost(int col, const std::vector<Rat>& y, Rat& d) const;
  Step Iterate(bool bland);
  Step RunPhase();
  // Pivots free structural columns into the basis; a column that no basic
  // variable blocks in either direction spans a line and stays nonbasic.
  void CrashFreeColumns();
  // Ratio test along `dir` for entering column `q`. Returns false when no
  // variable blocks. On success sets leave_pos_ (-1 for a bound flip).
  bool RatioTest(int q, int dir);
  void ApplyStep(int q, int dir);
  Rat PhaseObjective() const;
  void FillNormalDuals(const std::vector<Rat>& y, std::vector<Rat>& out);

  const Model& model_;
  SolveOptions options_;
  int m_ = 0;
  int n_ = 0;
  int num_cols_ = 0;
  std::vector<SparseColumn> cols_;
  std::vector<bool> has_lower_, has_upper_;
  std::vector<Rat> lower_, upper_;
  std::vector<Rat> cost_;
  std::vector<Rat> value_;
  std::vector<State> state_;
  std::vector<int> head_;
  std::vector<int> position_;
  std::vector<int> art_row_;  // artificial column -> row
  std::vector<Eta> etas_;
  int etas_at_refactor_ = 0;
  std::int64_t pivots_ = 0;
  bool aborted_ = false;

  // Scratch for the current iteration.
  std::vector<Rat> alpha_;
  std::vector<Rat> y_;
  Rat theta_;
  int leave_pos_ = -1;
  bool leave_to_upper_ = false;
  bool last_degenerate_ = false;
  int unbounded_col_ = -1;
  int unbounded_dir_ = 0;
};

Engine::Engine(const Model& model, const SolveOptions& options)
    : model_(model), options_(options) {
  m_ = model.num_constraints();
  n_ = model.num_variables();
  num_cols_ = n_ + m_;
  cols_.resize(num_cols_);
  for (int i = 0; i < m_; ++i) {
    for (const Term& t : model.constraint(i).terms) {
      cols_[t.var].emplace_back(i, t.coef);
    }
    cols_[n_ + i].emplace_back(i, Rat(-1));
  }
  has_lower_.assign(num_cols_, false);
  has_upper_.assign(num_cols_, false);
  lower_.resize(num_cols_);
  upper_.resize(num_cols_);
  for (int j = 0; j < n_; ++j) {
    const Variable& v = model.variable(j);
    if (v.lower) {
      has_lower_[j] = true;
      lower_[j] = *v.lower;
    }
    if (v.upper) {
      has_upper_[j] = true;
      upper_[j] = *v.upper;
    }
  }
  for (int i = 0; i < m_; ++i) {
    const Constraint& c = model.constraint(i);
    const int s = n_ + i;
    if (c.sense != RowSense::kLessEqual) {
      has_lower_[s] = true;
      lower_[s] = c.rhs;
    }
    if (c.sense != RowSense::kGreaterEqual) {
      has_upper_[s] = true;
      upper_[s] = c.rhs;
    }
  }
  cost_.assign(num_cols_, Rat(0));
  value_.assign(num_cols_, Rat(0));
  state_.assign(num_cols_, State::kAtLower);
  position_.assign(num_cols_, -1);
  head_.assign(m_, -1);
}

void Engine::SetNonbasicAtStart(int col) {
  if (has_lower_[col]) {
    state_[col] = State::kAtLower;
    value_[col] = lower_[col];
  } else if (has_upper_[col]) {
    state_[col] = State::kAtUpper;
    value_[col] = upper_[col];
  } else {
    state_[col] = State::kFreeZero;
    value_[col] = 0;
  }
}

void Engine::LoadColumn(int col, std::vector<Rat>& v) const {
  for (Rat& x : v) x = 0;
  for (const auto& [row, a] : cols_[col]) v[row] = a;
}

void Engine::Ftran(std::vector<Rat>& v) const {
  Rat t;
  for (const Eta& eta : etas_) {
    Rat& vp = v[eta.row];
    if (sgn(vp) == 0) continue;
    vp /= eta.pivot;
    for (const auto& [i, a] : eta.entries) {
      t = a * vp;
      v[i] -= t;
    }
  }
}

void Engine::Btran(std::vector<Rat>& u) const {
  Rat t;
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    const Eta& eta = *it;
    Rat& up = u[eta.row];
    for (const auto& [i, a] : eta.entries) {
      if (sgn(u[i]) == 0) continue;
      t = a * u[i];
      up -= t;
    }
    if (sgn(up) != 0) up /= eta.pivot;
  }
}

void Engine::Refactor() {
  etas_.clear();
  std::vector<int> basic;
  basic.reserve(m_);
  for (int col = 0; col < num_cols_; ++col) {
    if (state_[col] == State::kBasic) basic.push_back(col);
  }
  if (static_cast<int>(basic.size()) != m_) {
    throw Error(ErrorCode::kInternal, "basis has wrong cardinality");
  }
  std::vector<bool> row_done(m_, false);
  std::vector<int> new_head(m_, -1);
  std::vector<int> structural;
  // Unit columns (slacks, artificials) pivot on their own row.
  for (int col : basic) {
    if (col < n_) {
      structural.push_back(col);
      continue;
    }
    const auto& [row, a] = cols_[col].front();
    if (row_done[row]) throw Error(ErrorCode::kInternal, "singular basis");
    row_done[row] = true;
    new_head[row] = col;
    if (a != 1) etas_.push_back({row, a, {}});
  }
  // Remaining columns in order of increasing length; the pivot row is the
  // open row touched by the fewest remaining columns.
  std::stable_sort(structural.begin(), structural.end(), [&](int a, int b) {
    return cols_[a].size() < cols_[b].size();
  });
  std::vector<int> row_count(m_, 0);
  for (int col : structural) {
    for (const auto& entry : cols_[col]) ++row_count[entry.first];
  }
  std::vector<Rat> v(m_);
  for (int col : structural) {
    LoadColumn(col, v);
    Ftran(v);
    int best = -1;
    for (int i = 0; i < m_; ++i) {
      if (row_done[i] || sgn(v[i]) == 0) continue;
      if (best < 0 || row_count[i] < row_count[best] ||
          (row_count[i] == row_count[best] &&
           BitLength(v[i]) < BitLength(v[best]))) {
        best = i;
      }
    }
    if (best < 0) throw Error(ErrorCode::kInternal, "singular basis");
    Eta eta{best, v[best], {}};
    for (int i = 0; i < m_; ++i) {
      if (i != best && sgn(v[i]) != 0) eta.entries.emplace_back(i, v[i]);
    }
    etas_.push_back(std::move(eta));
    row_done[best] = true;
    new_head[best] = col;
    for (const auto& entry : cols_[col]) --row_count[entry.first];
  }
  head_ = std::move(new_head);
  for (int i = 0; i < m_; ++i) position_[head_[i]] = i;
  etas_at_refactor_ = static_cast<int>(etas_.size());
}

void Engine::ComputeDuals(std::vector<Rat>& y) const {
  y.resize(m_);
  for (int i = 0; i < m_; ++i) y[i] = cost_[head_[i]];
  Btran(y);
}

void Engine::ReducedCost(int col, const std::vector<Rat>& y, Rat& d) const {
  d = cost_[col];
  for (const auto& [row, a] : cols_[col]) {
    if (sgn(y[row]) != 0) d -= a * y[row];
  }
}

bool Engine::RatioTest(int q, int dir) {
  bool found = false;
  int best_col = -1;
  leave_pos_ = -1;
  Rat t;
  auto consider = [&](const Rat& candidate, int col, int pos, bool to_upper) {
    if (!found || candidate < theta_ ||
        (candidate == theta_ && col < best_col)) {
      found = true;
      theta_ = candidate;
      best_col = col;
      leave_pos_ = pos;
      leave_to_upper_ = to_upper;
    }
  };
  if (dir > 0 && has_upper_[q]) consider(upper_[q] - value_[q], q, -1, true);
  if (dir < 0 && has_lower_[q]) consider(value_[q] - lower_[q], q, -1, false);
  for (int i = 0; i < m_; ++i) {
    const int s = sgn(alpha_[i]);
    if (s == 0) continue;
    const int b = head_[i];
    // x_b moves by -dir * alpha_i per unit step.
    const int move = -dir * s;
    if (move < 0 && has_lower_[b]) {
      t = (value_[b] - lower_[b]) / abs(alpha_[i]);
      consider(t, b, i, false);
    } else if (move > 0 && has_upper_[b]) {
      t = (upper_[b] - value_[b]) / abs(alpha_[i]);
      consider(t, b, i, true);
    }
  }
  return found;
}

void Engine::ApplyStep(int q, int dir) {
  last_degenerate_ = sgn(theta_) == 0;
  if (!last_degenerate_) {
    Rat step = dir > 0 ? theta_ : Rat(-theta_);
    value_[q] += step;
    Rat t;
    for (int i = 0; i < m_; ++i) {
      if (sgn(alpha_[i]) == 0) continue;
      t = step * alpha_[i];
      value_[head_[i]] -= t;
    }
  }
  if (leave_pos_ < 0) {
    state_[q] = leave_to_upper_ ? State::kAtUpper : State::kAtLower;
    value_[q] = leave_to_upper_ ? upper_[q] : lower_[q];
    return;
  }
  const int r = leave_pos_;
  const int leaving = head_[r];
  state_[leaving] = leave_to_upper_ ? State::kAtUpper : State::kAtLower;
  value_[leaving] = leave_to_upper_ ? upper_[leaving] : lower_[leaving];
  position_[leaving] = -1;
  state_[q] = State::kBasic;
  head_[r] = q;
  position_[q] = r;
  Eta eta{r, alpha_[r], {}};
  for (int i = 0; i < m_; ++i) {
    if (i != r && sgn(alpha_[i]) != 0) eta.entries.emplace_back(i, alpha_[i]);
  }
  etas_.push_back(std::move(eta));
  if (static_cast<int>(etas_.size()) - etas_at_refactor_ >=
      options_.refactor_interval) {
    Refactor();
  }
}

Engine::Step Engine::Iterate(bool bland) {
  if (pivots_ >= options_.pivot_cap) return Step::kAborted;
  ComputeDuals(y_);
  int q = -1;
  Rat best_abs;
  Rat d;
  Rat best_d;
  for (int col = 0; col < num_cols_; ++col) {
    const State st = state_[col];
    if (st == State::kBasic || IsFixed(col)) continue;
    ReducedCost(col, y_, d);
    const int s = sgn(d);
    const bool eligible = (st == State::kAtLower && s < 0) ||
                          (st == State::kAtUpper && s > 0) ||
                          (st == State::kFreeZero && s != 0);
    if (!eligible) continue;
    if (bland) {
      q = col;
      best_d = d;
      break;
    }
    if (q < 0 || abs(d) > best_abs) {
      q = col;
      best_abs = abs(d);
      best_d = d;
    }
  }
  if (q < 0) return Step::kOptimal;
  const int dir = sgn(best_d) < 0 ? 1 : -1;
  alpha_.resize(m_);
  LoadColumn(q, alpha_);
  Ftran(alpha_);
  if (!RatioTest(q, dir)) {
    unbounded_col_ = q;
    unbounded_dir_ = dir;
    return Step::kUnbounded;
  }
  ApplyStep(q, dir);
  ++pivots_;
  return Step::kPivot;
}

Engine::Step Engine::RunPhase() {
  const bool always_bland = options_.pricing == PricingRule::kBland;
  int streak = 0;
  bool bland_mode = always_bland;
  while (true) {
    const Step step = Iterate(bland_mode);
    if (step != Step::kPivot) return step;
    if (always_bland) continue;
    if (last_degenerate_) {
      if (++streak >= options_.degenerate_streak_limit) bland_mode = true;
    } else {
      streak = 0;
      bland_mode = false;
    }
  }
}

void Engine::CrashFreeColumns() {
  for (int col = 0; col < n_; ++col) {
    if (state_[col] != State::kFreeZero) continue;
    if (pivots_ >= options_.pivot_cap) return;
    alpha_.resize(m_);
    LoadColumn(col, alpha_);
    Ftran(alpha_);
    for (int dir : {1, -1}) {
      if (RatioTest(col, dir) && leave_pos_ >= 0) {
        ApplyStep(col, dir);
        ++pivots_;
        break;
      }
    }
  }
}

Rat Engine::PhaseObjective() const {
  Rat total;
  for (int col = 0; col < num_cols_; ++col) {
    if (sgn(cost_[col]) != 0) total += cost_[col] * value_[col];
  }
  return total;
}

// Maps row duals y and the reduced costs of structural columns onto the
// rows of Normalize(model).
void Engine::FillNormalDuals(const std::vector<Rat>& y, std::vector<Rat>& out) {
  int num_rows = m_;
  std::vector<int> lower_row(n_, -1), upper_row(n_, -1);
  for (int j = 0; j < n_; ++j) {
    if (has_lower_[j]) lower_row[j] = num_rows++;
    if (has_upper_[j]) upper_row[j] = num_rows++;
  }
  out.assign(num_rows, Rat(0));
  for (int i = 0; i < m_; ++i) {
    out[i] = model_.constraint(i).sense == RowSense::kLessEqual ? Rat(-y[i])
                                                                : y[i];
  }
  Rat d;
  for (int j = 0; j < n_; ++j) {
    if (state_[j] == State::kBasic) continue;
    ReducedCost(j, y, d);
    if (sgn(d) > 0 && lower_row[j] >= 0) out[lower_row[j]] = d;
    if (sgn(d) < 0 && upper_row[j] >= 0) out[upper_row[j]] = -d;
  }
}

SolveOutcome Engine::Run() {
  SolveOutcome out;
  for (int j = 0; j < n_; ++j) SetNonbasicAtStart(j);

  // Row activities at the starting nonbasic point decide which slacks can be
  // basic and which rows need an artificial column.
  std::vector<Rat> activity(m_);
  for (int j = 0; j < n_; ++j) {
    if (sgn(value_[j]) == 0) continue;
    for (const auto& [row, a] : cols_[j]) activity[row] += a * value_[j];
  }
  for (int i = 0; i < m_; ++i) {
    const int s = n_ + i;
    const Rat& r = activity[i];
    std::optional<Rat> violated;
    if (has_lower_[s] && r < lower_[s]) violated = lower_[s];
    if (has_upper_[s] && r > upper_[s]) violated = upper_[s];
    if (!violated) {
      state_[s] = State::kBasic;
      value_[s] = r;
      continue;
    }
    const bool at_upper = has_upper_[s] && *violated == upper_[s] &&
                          !(has_lower_[s] && r < lower_[s]);
    state_[s] = at_upper ? State::kAtUpper : State::kAtLower;
    value_[s] = *violated;
    const Rat gap = *violated - r;
    ++num_cols_;
    cols_.push_back({{i, Rat(sgn(gap))}});
    has_lower_.push_back(true);
    has_upper_.push_back(false);
    lower_.emplace_back(0);
    upper_.emplace_back(0);
    cost_.emplace_back(1);
    value_.push_back(abs(gap));
    state_.push_back(State::kBasic);
    position_.push_back(-1);
    art_row_.push_back(i);
  }
  Refactor();
  CrashFreeColumns();

  const bool has_phase_one = num_cols_ > n_ + m_;
  if (has_phase_one) {
    const Step step = RunPhase();
    out.pivots = pivots_;
    if (step == Step::kAborted) return out;
    if (step == Step::kUnbounded) {
      throw Error(ErrorCode::kInternal, "phase one reported unbounded");
    }
    if (sgn(PhaseObjective()) > 0) {
      out.status = SolveStatus::kInfeasible;
      ComputeDuals(y_);
      FillNormalDuals(y_, out.farkas);
      return out;
    }
    for (int col = n_ + m_; col < num_cols_; ++col) {
      has_upper_[col] = true;
      upper_[col] = 0;
      cost_[col] = 0;
    }
  }

  const bool maximize =
      model_.objective().sense == ObjectiveSense::kMaximize;
  for (const Term& t : model_.objective().terms) {
    cost_[t.var] = maximize ? Rat(-t.coef) : t.coef;
  }
  const Step step = RunPhase();
  out.pivots = pivots_;
  if (step == Step::kAborted) return out;
  if (step == Step::kUnbounded) {
    out.status = SolveStatus::kUnbounded;
    out.ray.assign(n_, Rat(0));
    if (unbounded_col_ < n_) out.ray[unbounded_col_] = unbounded_dir_;
    for (int i = 0; i < m_; ++i) {
      const int b = head_[i];
      if (b < n_ && sgn(alpha_[i]) != 0) {
        out.ray[b] = unbounded_dir_ > 0 ? Rat(-alpha_[i]) : alpha_[i];
      }
    }
    return out;
  }

  out.status = SolveStatus::kOptimal;
  out.primal.assign(value_.begin(), value_.begin() + n_);
  out.objective = model_.EvaluateObjective(out.primal);
  ComputeDuals(y_);
  FillNormalDuals(y_, out.dual);
  for (int i = 0; i < m_; ++i) {
    const int col = head_[i];
    if (col < n_) {
      out.basis.push_back({BasisKind::kVariable, col});
    } else if (col < n_ + m_) {
      out.basis.push_back({BasisKind::kRowSlack, col - n_});
    } else {
      out.basis.push_back({BasisKind::kArtificial, art_row_[col - n_ - m_]});
    }
  }
  std::sort(out.basis.begin(), out.basis.end(),
            [](const BasisEntry& a, const BasisEntry& b) {
              return std::pair(static_cast<int>(a.kind), a.index) <
                     std::pair(static_cast<int>(b.kind), b.index);
            });
  return out;
}

}  // namespace

SolveOutcome Solve(const Model& model, const SolveOptions& options) {
  Engine engine(model, options);
  return engine.Run();
}

}  // namespace extform::ratlp
