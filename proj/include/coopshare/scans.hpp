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

#ifndef COOPSHARE_SCANS_HPP
#define COOPSHARE_SCANS_HPP

// Exhaustive subset-table scans, each in two variants: a serial reference
// and an OpenMP kernel. The pairs are bit-identical by construction — every
// parallel reduction is over a commutative, associative merge (min-key or
// max-with-union) — and the test suite holds them to that. bench/ compares
// their running times.

#include <optional>
#include <span>

#include "coopshare/coalition.hpp"
#include "coopshare/game.hpp"
#include "coopshare/rational.hpp"

namespace coopshare::scans {

// --- convexity -------------------------------------------------------------
//
// Supermodularity holds for all pairs iff it holds for all "exchange" pairs
// (B ∪ {i}, B ∪ {j}) with i, j ∉ B. The fast kernels scan those n²·2^(n-2)
// local pairs; the all-pairs reference walks the full 2^n × 2^n definition.
// Witnesses are reported for the smallest (B, i, j) in (mask, i, j) order,
// encoded as the violating pair (B ∪ {i}, B ∪ {j}).

std::optional<SupermodViolation> supermod_violation_serial(const TuGame& game);
std::optional<SupermodViolation> supermod_violation_parallel(
    const TuGame& game);

/// Literal-definition reference: scans every coalition pair (S, T) in
/// (S mask, T mask) order. O(4^n); intended for tests at small n.
std::optional<SupermodViolation> supermod_violation_allpairs(
    const TuGame& game);

// --- superadditivity --------------------------------------------------------

/// A disjoint pair with v(S) + v(T) > v(S ∪ T).
struct SuperaddViolation {
  Coalition s;
  Coalition t;
};

std::optional<SuperaddViolation> superadd_violation_serial(const TuGame& game);
std::optional<SuperaddViolation> superadd_violation_parallel(
    const TuGame& game);

// --- maximal weighted average coalition --------------------------------------

struct MaxAvgScan {
  /// Union of every coalition attaining the maximal average.
  Coalition maximizer_union;
  /// The maximal average value v(S) / w(S).
  Rat average;
  /// Whether the union itself attains the maximum.
  bool union_attains = false;
};

/// Scans all non-empty coalitions for the maximal weighted average value.
/// `weights` must have one strictly positive entry per player.
MaxAvgScan max_average_serial(const TuGame& game, std::span<const Rat> weights);
MaxAvgScan max_average_parallel(const TuGame& game,
                                std::span<const Rat> weights);

// --- coalitional rationality -----------------------------------------------

/// First coalition (in mask order, grand coalition included) whose members
/// are paid strictly less than their stand-alone value.
std::optional<Coalition> core_violation_serial(const TuGame& game,
                                               std::span<const Rat> payoffs);
std::optional<Coalition> core_violation_parallel(const TuGame& game,
                                                 std::span<const Rat> payoffs);

}  // namespace coopshare::scans

#endif  // COOPSHARE_SCANS_HPP
