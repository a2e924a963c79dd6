// Copyright 2026 The coopshare Authors
//
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

#include "coopshare/exact_lp.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "coopshare/errors.hpp"

namespace coopshare {

void LinearProgram::set_lower(int var, Rat bound) {
  if (lower.empty()) {
    lower.resize(static_cast<std::size_t>(var_count));
  }
  lower[static_cast<std::size_t>(var)] = std::move(bound);
}

void LinearProgram::set_upper(int var, Rat bound) {
  if (upper.empty()) {
    upper.resize(static_cast<std::size_t>(var_count));
  }
  upper[static_cast<std::size_t>(var)] = std::move(bound);
}

namespace {

// ---------------------------------------------------------------------------
// Dictionary simplex over the standard form  max c·y, A y <= b, y >= 0.
//
// Row i reads  y_basic[i] = rhs[i] + sum_j D[i][j] * y_nonbasic[j].
// Phase one maximizes -y_aux for an auxiliary variable added to every row;
// both phases pivot by Bland's rule (smallest entering variable id, leaving
// ties broken on the smallest basic id), so the run is finite and fully
// deterministic.
// ---------------------------------------------------------------------------
class DictionarySimplex {
 public:
  DictionarySimplex(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs,
                    int structural_count)
      : nv_(structural_count), aux_id_(structural_count) {
    const int m = static_cast<int>(rows.size());
    basic_.reserve(static_cast<std::size_t>(m));
    nonbasic_.resize(static_cast<std::size_t>(nv_) + 1);
    for (int j = 0; j < nv_; ++j) {
      nonbasic_[static_cast<std::size_t>(j)] = j;
    }
    nonbasic_[static_cast<std::size_t>(nv_)] = aux_id_;

    table_.reserve(static_cast<std::size_t>(m));
    rhs_ = std::move(rhs);
    for (int i = 0; i < m; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      std::vector<Rat> entry(static_cast<std::size_t>(nv_) + 1);
      for (int j = 0; j < nv_; ++j) {
        entry[static_cast<std::size_t>(j)] = -row[static_cast<std::size_t>(j)];
      }
      entry[static_cast<std::size_t>(nv_)] = Rat(1);  // aux column
      table_.push_back(std::move(entry));
      basic_.push_back(aux_id_ + 1 + i);  // slack ids follow the aux id
    }
  }

  /// Runs phase one. Returns false when the system is infeasible.
  bool make_feasible() {
    obj_.assign(width(), Rat());
    obj_const_ = Rat();
    obj_[aux_column()] = Rat(-1);  // maximize -y_aux

    int worst = -1;
    for (int i = 0; i < row_count(); ++i) {
      if (rhs_[static_cast<std::size_t>(i)].is_negative() &&
          (worst < 0 || rhs_[static_cast<std::size_t>(i)] <
                            rhs_[static_cast<std::size_t>(worst)])) {
        worst = i;
      }
    }
    if (worst >= 0) {
      pivot(worst, static_cast<int>(aux_column()));
      run_simplex();
    }
    if (!objective_value().is_zero()) {
      return false;  // optimum of -y_aux is negative
    }
    drop_aux();
    return true;
  }

  /// Phase two for the structural objective `c` (length = structural count).
  /// Returns false when unbounded.
  bool maximize(const std::vector<Rat>& c) {
    obj_.assign(width(), Rat());
    obj_const_ = Rat();
    for (std::size_t j = 0; j < width(); ++j) {
      const int id = nonbasic_[j];
      if (id < nv_) {
        obj_[j] += c[static_cast<std::size_t>(id)];
      }
    }
    for (int i = 0; i < row_count(); ++i) {
      const int id = basic_[static_cast<std::size_t>(i)];
      if (id < nv_ && !c[static_cast<std::size_t>(id)].is_zero()) {
        const Rat& weight = c[static_cast<std::size_t>(id)];
        obj_const_ += weight * rhs_[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < width(); ++j) {
          obj_[j] += weight * table_[static_cast<std::size_t>(i)][j];
        }
      }
    }
    return run_simplex();
  }

  /// Structural solution of the current dictionary.
  std::vector<Rat> solution() const {
    std::vector<Rat> y(static_cast<std::size_t>(nv_));
    for (int i = 0; i < row_count(); ++i) {
      const int id = basic_[static_cast<std::size_t>(i)];
      if (id < nv_) {
        y[static_cast<std::size_t>(id)] = rhs_[static_cast<std::size_t>(i)];
      }
    }
    return y;
  }

  const Rat& objective_value() const { return obj_const_; }

 private:
  int row_count() const { return static_cast<int>(table_.size()); }
  std::size_t width() const { return nonbasic_.size(); }
  std::size_t aux_column() const {
    for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
      if (nonbasic_[j] == aux_id_) {
        return j;
      }
    }
    assert(false && "aux column missing");
    return 0;
  }

  /// Bland's rule loop. Returns false on an unbounded direction.
  bool run_simplex() {
    for (;;) {
      int enter = -1;
      for (std::size_t j = 0; j < width(); ++j) {
        if (obj_[j].is_positive() &&
            (enter < 0 || nonbasic_[j] < nonbasic_[static_cast<std::size_t>(
                                             enter)])) {
          enter = static_cast<int>(j);
        }
      }
      if (enter < 0) {
        return true;  // optimal
      }
      const int leave = ratio_test(enter);
      if (leave < 0) {
        return false;  // unbounded
      }
      pivot(leave, enter);
    }
  }

  /// Most binding row for the entering column; ties on the smallest basic id.
  int ratio_test(int enter) const {
    int leave = -1;
    Rat best;
    for (int i = 0; i < row_count(); ++i) {
      const Rat& coeff =
          table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (!coeff.is_negative()) {
        continue;
      }
      Rat ratio = rhs_[static_cast<std::size_t>(i)] / -coeff;
      if (leave < 0 || ratio < best ||
          (ratio == best && basic_[static_cast<std::size_t>(i)] <
                                basic_[static_cast<std::size_t>(leave)])) {
        best = std::move(ratio);
        leave = i;
      }
    }
    return leave;
  }

  void pivot(int leave, int enter) {
    const auto r = static_cast<std::size_t>(leave);
    const auto s = static_cast<std::size_t>(enter);
    const Rat coeff = table_[r][s];
    assert(!coeff.is_zero());

    // Re-solve row r for the entering variable.
    rhs_[r] /= -coeff;
    for (std::size_t j = 0; j < width(); ++j) {
      if (j == s) {
        table_[r][j] = Rat(1) / coeff;
      } else {
        table_[r][j] /= -coeff;
      }
    }

    // Substitute into the other rows and the objective.
    for (int i = 0; i < row_count(); ++i) {
      if (i == leave) {
        continue;
      }
      substitute(table_[static_cast<std::size_t>(i)],
                 rhs_[static_cast<std::size_t>(i)], r, s);
    }
    substitute(obj_, obj_const_, r, s);

    std::swap(basic_[r], nonbasic_[s]);
  }

  void substitute(std::vector<Rat>& row, Rat& constant, std::size_t r,
                  std::size_t s) {
    const Rat factor = row[s];
    if (factor.is_zero()) {
      return;
    }
    constant += factor * rhs_[r];
    for (std::size_t j = 0; j < width(); ++j) {
      if (j == s) {
        row[j] = factor * table_[r][j];
      } else {
        row[j] += factor * table_[r][j];
      }
    }
  }

  /// Removes the auxiliary variable after a successful phase one.
  void drop_aux() {
    for (int i = 0; i < row_count(); ++i) {
      if (basic_[static_cast<std::size_t>(i)] != aux_id_) {
        continue;
      }
      // The auxiliary variable is basic at zero; pivot it out on any
      // non-zero entry, or drop the row if it became 0 = 0.
      assert(rhs_[static_cast<std::size_t>(i)].is_zero());
      int enter = -1;
      for (std::size_t j = 0; j < width(); ++j) {
        if (nonbasic_[j] != aux_id_ &&
            !table_[static_cast<std::size_t>(i)][j].is_zero() &&
            (enter < 0 ||
             nonbasic_[j] < nonbasic_[static_cast<std::size_t>(enter)])) {
          enter = static_cast<int>(j);
        }
      }
      if (enter >= 0) {
        pivot(i, enter);
      } else {
        table_.erase(table_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basic_.erase(basic_.begin() + i);
      }
      break;
    }
    const std::size_t col = aux_column();
    for (auto& row : table_) {
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
    }
    obj_.erase(obj_.begin() + static_cast<std::ptrdiff_t>(col));
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(col));
  }

  int nv_;       // structural variable count
  int aux_id_;   // variable id of the phase-one auxiliary
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<std::vector<Rat>> table_;
  std::vector<Rat> rhs_;
  std::vector<Rat> obj_;
  Rat obj_const_;
};

// ---------------------------------------------------------------------------
// Bound handling: every original variable is rewritten over one or two
// non-negative standard-form variables.
// ---------------------------------------------------------------------------
struct VarMap {
  enum class Kind { Shifted, Flipped, Split } kind = Kind::Split;
  int col = 0;       // primary column
  int col_neg = 0;   // negative part for Split
  Rat anchor;        // shift (Shifted) or upper bound (Flipped)
};

struct StandardForm {
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  std::vector<VarMap> vars;
  int column_count = 0;
  bool trivially_infeasible = false;
};

const std::optional<Rat>& bound_at(const std::vector<std::optional<Rat>>& v,
                                   std::size_t i) {
  static const std::optional<Rat> none;
  return v.empty() ? none : v[i];
}

void validate(const LinearProgram& lp) {
  const auto n = static_cast<std::size_t>(lp.var_count);
  if (lp.var_count < 0 || lp.objective.size() != n) {
    throw DimensionError("objective length must equal the variable count");
  }
  if (!lp.lower.empty() && lp.lower.size() != n) {
    throw DimensionError("lower bound list length mismatch");
  }
  if (!lp.upper.empty() && lp.upper.size() != n) {
    throw DimensionError("upper bound list length mismatch");
  }
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) {
      throw DimensionError("constraint row length mismatch");
    }
  }
}

StandardForm standardize(const LinearProgram& lp) {
  StandardForm sf;
  const auto n = static_cast<std::size_t>(lp.var_count);
  sf.vars.resize(n);

  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = bound_at(lp.lower, j);
    const auto& hi = bound_at(lp.upper, j);
    VarMap& vm = sf.vars[j];
    if (lo && hi && *hi < *lo) {
      sf.trivially_infeasible = true;
    }
    if (lo) {
      vm.kind = VarMap::Kind::Shifted;
      vm.col = sf.column_count++;
      vm.anchor = *lo;
    } else if (hi) {
      vm.kind = VarMap::Kind::Flipped;
      vm.col = sf.column_count++;
      vm.anchor = *hi;
    } else {
      vm.kind = VarMap::Kind::Split;
      vm.col = sf.column_count++;
      vm.col_neg = sf.column_count++;
    }
  }

  const auto add_row = [&sf](std::vector<Rat> row, Rat rhs, bool negate) {
    if (negate) {
      for (auto& v : row) {
        v = -v;
      }
      rhs = -rhs;
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(rhs));
  };

  for (const auto& constraint : lp.constraints) {
    std::vector<Rat> row(static_cast<std::size_t>(sf.column_count));
    Rat rhs = constraint.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& a = constraint.coefficients[j];
      if (a.is_zero()) {
        continue;
      }
      const VarMap& vm = sf.vars[j];
      switch (vm.kind) {
        case VarMap::Kind::Shifted:
          row[static_cast<std::size_t>(vm.col)] += a;
          rhs -= a * vm.anchor;
          break;
        case VarMap::Kind::Flipped:
          row[static_cast<std::size_t>(vm.col)] -= a;
          rhs -= a * vm.anchor;
          break;
        case VarMap::Kind::Split:
          row[static_cast<std::size_t>(vm.col)] += a;
          row[static_cast<std::size_t>(vm.col_neg)] -= a;
          break;
      }
    }
    switch (constraint.relation) {
      case Relation::LessEq:
        add_row(std::move(row), std::move(rhs), false);
        break;
      case Relation::GreaterEq:
        add_row(std::move(row), std::move(rhs), true);
        break;
      case Relation::Equal:
        add_row(row, rhs, false);
        add_row(std::move(row), std::move(rhs), true);
        break;
    }
  }

  // Two-sided bounds become single rows over the shifted variable.
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = bound_at(lp.lower, j);
    const auto& hi = bound_at(lp.upper, j);
    if (lo && hi) {
      std::vector<Rat> row(static_cast<std::size_t>(sf.column_count));
      row[static_cast<std::size_t>(sf.vars[j].col)] = Rat(1);
      add_row(std::move(row), *hi - *lo, false);
    }
  }
  return sf;
}

std::vector<Rat> original_point(const StandardForm& sf,
                                const std::vector<Rat>& y) {
  std::vector<Rat> x(sf.vars.size());
  for (std::size_t j = 0; j < sf.vars.size(); ++j) {
    const VarMap& vm = sf.vars[j];
    switch (vm.kind) {
      case VarMap::Kind::Shifted:
        x[j] = vm.anchor + y[static_cast<std::size_t>(vm.col)];
        break;
      case VarMap::Kind::Flipped:
        x[j] = vm.anchor - y[static_cast<std::size_t>(vm.col)];
        break;
      case VarMap::Kind::Split:
        x[j] = y[static_cast<std::size_t>(vm.col)] -
               y[static_cast<std::size_t>(vm.col_neg)];
        break;
    }
  }
  return x;
}

}  // namespace

LpResult solve_max(const LinearProgram& lp) {
  validate(lp);
  LpResult result;
  StandardForm sf = standardize(lp);
  if (sf.trivially_infeasible) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  DictionarySimplex dict(std::move(sf.rows), std::move(sf.rhs),
                         sf.column_count);
  if (!dict.make_feasible()) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  std::vector<Rat> c(static_cast<std::size_t>(sf.column_count));
  for (std::size_t j = 0; j < sf.vars.size(); ++j) {
    const Rat& a = lp.objective[j];
    if (a.is_zero()) {
      continue;
    }
    const VarMap& vm = sf.vars[j];
    switch (vm.kind) {
      case VarMap::Kind::Shifted:
        c[static_cast<std::size_t>(vm.col)] += a;
        break;
      case VarMap::Kind::Flipped:
        c[static_cast<std::size_t>(vm.col)] -= a;
        break;
      case VarMap::Kind::Split:
        c[static_cast<std::size_t>(vm.col)] += a;
        c[static_cast<std::size_t>(vm.col_neg)] -= a;
        break;
    }
  }
  if (!dict.maximize(c)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.point = original_point(sf, dict.solution());
  for (std::size_t j = 0; j < result.point.size(); ++j) {
    result.value += lp.objective[j] * result.point[j];
  }
  return result;
}

bool feasible(const LinearProgram& lp) {
  validate(lp);
  StandardForm sf = standardize(lp);
  if (sf.trivially_infeasible) {
    return false;
  }
  DictionarySimplex dict(std::move(sf.rows), std::move(sf.rhs),
                         sf.column_count);
  return dict.make_feasible();
}

namespace {

std::vector<int> unique_targets(const LinearProgram& base,
                                std::span<const int> targets) {
  if (targets.empty()) {
    throw DomainError("lex_max_min requires at least one target variable");
  }
  std::vector<int> out;
  for (int t : targets) {
    if (t < 0 || t >= base.var_count) {
      throw DomainError("lex_max_min target out of range");
    }
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<Rat> unit_row(int len, int var, const Rat& value) {
  std::vector<Rat> row(static_cast<std::size_t>(len));
  row[static_cast<std::size_t>(var)] = value;
  return row;
}

}  // namespace

LexMaxMinResult lex_max_min(const LinearProgram& base,
                            std::span<const int> targets) {
  validate(base);
  const std::vector<int> target_list = unique_targets(base, targets);

  LinearProgram pinned = base;  // accumulates x_i = t* rows
  std::vector<int> unfixed = target_list;
  std::sort(unfixed.begin(), unfixed.end());
  std::vector<std::optional<Rat>> fixed_value(
      static_cast<std::size_t>(base.var_count));

  LexMaxMinResult out;
  while (!unfixed.empty()) {
    ++out.rounds;

    // Maximize the common floor t over the unfixed targets.
    LinearProgram floor_lp(pinned.var_count + 1);
    const int t_var = pinned.var_count;
    floor_lp.objective[static_cast<std::size_t>(t_var)] = Rat(1);
    if (!pinned.lower.empty()) {
      floor_lp.lower.assign(pinned.lower.begin(), pinned.lower.end());
      floor_lp.lower.emplace_back();
    }
    if (!pinned.upper.empty()) {
      floor_lp.upper.assign(pinned.upper.begin(), pinned.upper.end());
      floor_lp.upper.emplace_back();
    }
    for (const auto& c : pinned.constraints) {
      std::vector<Rat> row(c.coefficients);
      row.emplace_back();
      floor_lp.add_constraint(std::move(row), c.relation, c.rhs);
    }
    for (int i : unfixed) {
      std::vector<Rat> row(static_cast<std::size_t>(floor_lp.var_count));
      row[static_cast<std::size_t>(i)] = Rat(1);
      row[static_cast<std::size_t>(t_var)] = Rat(-1);
      floor_lp.add_constraint(std::move(row), Relation::GreaterEq, Rat(0));
    }

    const LpResult floor_result = solve_max(floor_lp);
    if (floor_result.status == LpStatus::Infeasible) {
      throw InfeasibleProgram("lex_max_min: base program is infeasible");
    }
    if (floor_result.status == LpStatus::Unbounded) {
      throw UnboundedLexTarget(
          "lex_max_min: the common floor is unbounded above");
    }
    const Rat& floor = floor_result.value;

    // Probe which targets can move strictly above the floor while the rest
    // of the unfixed ones stay at or above it.
    LinearProgram probe = pinned;
    for (int i : unfixed) {
      probe.add_constraint(unit_row(probe.var_count, i, Rat(1)),
                           Relation::GreaterEq, floor);
    }
    std::vector<int> still_free;
    std::vector<int> newly_fixed;
    for (int i : unfixed) {
      LinearProgram probe_i = probe;
      probe_i.objective = unit_row(probe.var_count, i, Rat(1));
      const LpResult r = solve_max(probe_i);
      if (r.status == LpStatus::Infeasible) {
        throw Error("lex_max_min: probe program unexpectedly infeasible");
      }
      if (r.status == LpStatus::Optimal && r.value == floor) {
        newly_fixed.push_back(i);
      } else {
        still_free.push_back(i);  // can exceed the floor (or is unbounded)
      }
    }
    if (newly_fixed.empty()) {
      throw Error("lex_max_min: floor maximal yet nothing pinned");
    }

    for (int i : newly_fixed) {
      pinned.add_constraint(unit_row(pinned.var_count, i, Rat(1)),
                            Relation::Equal, floor);
      fixed_value[static_cast<std::size_t>(i)] = floor;
    }
    unfixed = std::move(still_free);
  }

  LinearProgram completion = pinned;
  completion.objective.assign(static_cast<std::size_t>(pinned.var_count),
                              Rat());
  const LpResult final_result = solve_max(completion);
  if (final_result.status != LpStatus::Optimal) {
    throw Error("lex_max_min: completion program not optimal");
  }

  out.point = final_result.point;
  out.target_values.reserve(target_list.size());
  for (int t : target_list) {
    out.target_values.push_back(*fixed_value[static_cast<std::size_t>(t)]);
  }
  return out;
}

}  // namespace coopshare
