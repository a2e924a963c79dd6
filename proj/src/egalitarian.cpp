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

#include "coopshare/egalitarian.hpp"

#include <utility>

#include "coopshare/errors.hpp"
#include "coopshare/scans.hpp"

namespace coopshare {

namespace {

scans::MaxAvgScan scan_max_avg(const TuGame& game,
                               const WeightVector& weights, ExecMode mode) {
  if (game.player_count() < 1) {
    throw DomainError("max_avg_coalition needs at least one player");
  }
  if (weights.size() != game.player_count()) {
    throw DimensionError("weight count does not match the player count");
  }
  const auto scan =
      scans::use_parallel(mode, game.player_count())
          ? scans::max_average_parallel(game, weights.entries())
          : scans::max_average_serial(game, weights.entries());
  if (!scan.union_attains) {
    throw NonConvexTieStructure(
        "the union of maximal-average coalitions is not a maximizer; "
        "the tie-break is only defined on convex games");
  }
  return scan;
}

}  // namespace

std::pair<Coalition, Rat> max_avg_coalition(const TuGame& game,
                                            const WeightVector& weights,
                                            ExecMode mode) {
  const auto scan = scan_max_avg(game, weights, mode);
  return {scan.maximizer_union, scan.average};
}

EaTrace wea(const TuGame& game, const WeightVector& weights, ExecMode mode) {
  if (weights.size() != game.player_count()) {
    throw DimensionError("weight count does not match the player count");
  }

  EaTrace trace;
  trace.convex_input = is_convex(game, mode).convex();
  trace.final =
      Allocation(std::vector<Rat>(static_cast<std::size_t>(game.player_count())));

  TuGame current = game;
  std::vector<Rat> current_weights = weights.entries();
  // original player id of each index in the reduced game
  std::vector<int> alive = game.grand_coalition().members();

  while (current.player_count() > 0) {
    const auto scan =
        scan_max_avg(current, WeightVector(current_weights), mode);
    const Coalition selected = scan.maximizer_union;

    EaRound round;
    round.average = scan.average;
    std::uint32_t original_mask = 0;
    for (int local : selected.members()) {
      const int original = alive[static_cast<std::size_t>(local)];
      original_mask |= std::uint32_t{1} << original;
      const Rat payoff =
          current_weights[static_cast<std::size_t>(local)] * scan.average;
      trace.final[static_cast<std::size_t>(original)] = payoff;
      round.payoffs.emplace_back(original, payoff);
    }
    round.coalition = Coalition(original_mask);
    trace.rounds.push_back(std::move(round));

    if (selected == current.grand_coalition()) {
      break;
    }
    current = derived_game(current, selected);
    std::vector<Rat> next_weights;
    std::vector<int> next_alive;
    for (int local = 0; local < static_cast<int>(alive.size()); ++local) {
      if (!selected.contains(local)) {
        next_weights.push_back(
            std::move(current_weights[static_cast<std::size_t>(local)]));
        next_alive.push_back(alive[static_cast<std::size_t>(local)]);
      }
    }
    current_weights = std::move(next_weights);
    alive = std::move(next_alive);
  }
  return trace;
}

}  // namespace coopshare
