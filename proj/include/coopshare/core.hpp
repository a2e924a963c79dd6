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

#ifndef COOPSHARE_CORE_HPP
#define COOPSHARE_CORE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "coopshare/coalition.hpp"
#include "coopshare/exact_lp.hpp"
#include "coopshare/execution.hpp"
#include "coopshare/game.hpp"
#include "coopshare/rational.hpp"

namespace coopshare {

/// One exact payoff per player, aligned with the game's player order.
struct Allocation {
  std::vector<Rat> payoffs;

  Allocation() = default;
  explicit Allocation(std::vector<Rat> p) : payoffs(std::move(p)) {}

  int size() const { return static_cast<int>(payoffs.size()); }
  const Rat& operator[](std::size_t i) const { return payoffs[i]; }
  Rat& operator[](std::size_t i) { return payoffs[i]; }

  Rat sum() const {
    Rat s;
    for (const Rat& v : payoffs) {
      s += v;
    }
    return s;
  }

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.payoffs == b.payoffs;
  }
};

struct CoreVerdict {
  bool in_core = false;
  /// First coalition in mask order paid strictly less than its value.
  std::optional<Coalition> violated;
  /// Σ x_i - v(N); zero when budget balance holds.
  Rat budget_gap;
};

/// Core membership: budget balance plus coalitional rationality for every
/// coalition. Throws DimensionError on length mismatch.
CoreVerdict check_core(const TuGame& game, const Allocation& x,
                       ExecMode mode = ExecMode::Auto);

/// Budget balance plus individual rationality (x_i >= v({i})).
bool is_imputation(const TuGame& game, const Allocation& x);

/// The core constraint system as a linear program over the payoff variables:
/// one >= row per proper non-empty coalition plus the budget equality.
/// The objective is zero; callers overwrite it.
LinearProgram core_program(const TuGame& game);

/// Highest payoff of `player` over all core elements, by exact LP.
/// Throws EmptyCore when the core is empty.
Rat max_core_payoff(const TuGame& game, int player);

bool core_nonempty(const TuGame& game);

/// Deterministic-in-seed sample of core points: vertices found by
/// maximizing random rational objectives, then pairwise midpoints until
/// `count` distinct points exist. Returns fewer only when the core has
/// fewer distinct points (a single-point core yields one).
std::vector<Allocation> sample_core(const TuGame& game, int count,
                                    std::uint64_t seed);

}  // namespace coopshare

#endif  // COOPSHARE_CORE_HPP
