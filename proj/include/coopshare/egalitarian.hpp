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

#ifndef COOPSHARE_EGALITARIAN_HPP
#define COOPSHARE_EGALITARIAN_HPP

#include <utility>
#include <vector>

#include "coopshare/coalition.hpp"
#include "coopshare/core.hpp"
#include "coopshare/execution.hpp"
#include "coopshare/game.hpp"
#include "coopshare/lorenz.hpp"
#include "coopshare/rational.hpp"

namespace coopshare {

/// The coalition with maximal weighted average value v(S) / w(S) over all
/// non-empty coalitions. Ties are resolved by taking the union of every
/// maximizer; if that union does not itself attain the maximum (possible
/// only off the convex domain) NonConvexTieStructure is thrown.
std::pair<Coalition, Rat> max_avg_coalition(const TuGame& game,
                                            const WeightVector& weights,
                                            ExecMode mode = ExecMode::Auto);

struct EaRound {
  /// Selected coalition, in original player indices.
  Coalition coalition;
  Rat average;
  /// (original player, assigned payoff) for the coalition's members.
  std::vector<std::pair<int, Rat>> payoffs;
};

struct EaTrace {
  std::vector<EaRound> rounds;
  Allocation final;
  /// Whether the input satisfied the convexity hypothesis of the
  /// egalitarian-allocation theorems; the allocation is still produced
  /// when it did not.
  bool convex_input = false;
};

/// Weighted egalitarian allocation: repeatedly extract the coalition with
/// maximal weighted average value, pay its members w_p times that average,
/// and continue on the reduced game until no players remain.
EaTrace wea(const TuGame& game, const WeightVector& weights,
            ExecMode mode = ExecMode::Auto);

}  // namespace coopshare

#endif  // COOPSHARE_EGALITARIAN_HPP
