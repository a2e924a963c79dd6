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

#ifndef COOPSHARE_EXACT_LP_HPP
#define COOPSHARE_EXACT_LP_HPP

#include <optional>
#include <span>
#include <vector>

#include "coopshare/rational.hpp"

namespace coopshare {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  std::vector<Rat> coefficients;
  Relation relation = Relation::LessEq;
  Rat rhs;
};

/// A rational-coefficient linear program: maximize objective · x subject to
/// the constraint rows and optional per-variable bounds.
struct LinearProgram {
  int var_count = 0;
  std::vector<Rat> objective;
  std::vector<LinearConstraint> constraints;
  /// Per-variable bounds; empty vectors mean "no bound anywhere".
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;

  explicit LinearProgram(int vars = 0)
      : var_count(vars), objective(static_cast<std::size_t>(vars)) {}

  void add_constraint(std::vector<Rat> coefficients, Relation relation,
                      Rat rhs) {
    constraints.push_back(
        LinearConstraint{std::move(coefficients), relation, std::move(rhs)});
  }
  void set_lower(int var, Rat bound);
  void set_upper(int var, Rat bound);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rat> point;  // present when Optimal
  Rat value;               // objective · point, exact
};

/// Exact two-phase dictionary simplex with Bland's rule. Deterministic:
/// identical inputs give identical results, optimal point included.
LpResult solve_max(const LinearProgram& lp);

/// Phase one only: does the constraint system admit a point?
bool feasible(const LinearProgram& lp);

struct LexMaxMinResult {
  /// Final value of each target variable, aligned with the `targets`
  /// argument.
  std::vector<Rat> target_values;
  /// A full feasible assignment attaining those values.
  std::vector<Rat> point;
  /// Outer rounds used; at most the number of distinct targets.
  int rounds = 0;
};

/// Iterated max-min: computes the assignment whose non-decreasingly sorted
/// target values are lexicographically maximal over the feasible set.
/// Each round maximizes a common floor t over the still-unfixed targets,
/// then pins every target that cannot exceed t (one probe LP per target).
/// Throws InfeasibleProgram when the base program is infeasible and
/// UnboundedLexTarget when the floor is unbounded above.
LexMaxMinResult lex_max_min(const LinearProgram& base,
                            std::span<const int> targets);

}  // namespace coopshare

#endif  // COOPSHARE_EXACT_LP_HPP
