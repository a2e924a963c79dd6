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

#ifndef COOPSHARE_PAYMENTS_HPP
#define COOPSHARE_PAYMENTS_HPP

#include "coopshare/core.hpp"
#include "coopshare/game.hpp"
#include "coopshare/rational.hpp"

namespace coopshare {

/// Vickrey payments: vp_i = v(N) - v(N \ {i}).
Allocation vickrey(const TuGame& game);

/// The budget every scaling scheme defaults to: v(N).
Rat default_budget(const TuGame& game);

/// Scaled Vickrey payments together with the per-player factors.
struct ScalingResult {
  Allocation payments;
  std::vector<Rat> alphas;  // payments_i = alphas_i * vp_i, each in [0, 1]
  Rat budget;
};

/// Equal scaling: one common factor budget / Σ vp_i.
/// Throws InfeasibleScaling when the budget exceeds Σ vp_i and DomainError
/// for a negative budget. When all payments are zero and the budget is zero
/// the factor is 1 by convention.
ScalingResult esv(const TuGame& game, const Rat& budget);

/// Threshold payments: payment_i = max(0, vp_i - t) for the minimal t >= 0
/// bringing the total within budget.
struct ThresholdResult {
  Allocation payments;
  Rat threshold;
  Rat budget;
};

ThresholdResult threshold_vickrey(const TuGame& game, const Rat& budget);

/// Individually scaled Vickrey payments: lexicographically maximal scaling
/// vector over the budget row, all coalitional-rationality rows, and
/// alpha in [0, 1]. Players with vp_i = 0 pay 0 and carry alpha_i = 1 by
/// convention; they are excluded from the lexicographic objective.
/// Throws EmptyCore / InfeasibleScaling / DomainError (negative vp).
ScalingResult isv(const TuGame& game, const Rat& budget);

/// The literal budget-only reading of the scaling program (no
/// coalitional-rationality rows). Provably collapses to equal scaling on
/// the positive-payment players; kept as an executable record of why the
/// core-constrained program above is the one that matters.
ScalingResult isv_budget_only(const TuGame& game, const Rat& budget);

}  // namespace coopshare

#endif  // COOPSHARE_PAYMENTS_HPP
