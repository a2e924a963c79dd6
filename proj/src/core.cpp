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

#include "coopshare/core.hpp"

#include <random>
#include <set>
#include <utility>

#include "coopshare/errors.hpp"
#include "coopshare/scans.hpp"

namespace coopshare {

namespace {

void require_allocation_dim(const TuGame& game, const Allocation& x) {
  if (x.size() != game.player_count()) {
    throw DimensionError("allocation has " + std::to_string(x.size()) +
                         " entries for a " +
                         std::to_string(game.player_count()) +
                         "-player game");
  }
}

}  // namespace

CoreVerdict check_core(const TuGame& game, const Allocation& x,
                       ExecMode mode) {
  require_allocation_dim(game, x);
  CoreVerdict verdict;
  verdict.budget_gap = x.sum() - game.value(game.grand_coalition());
  verdict.violated = scans::use_parallel(mode, game.player_count())
                         ? scans::core_violation_parallel(game, x.payoffs)
                         : scans::core_violation_serial(game, x.payoffs);
  verdict.in_core = !verdict.violated.has_value() && verdict.budget_gap.is_zero();
  return verdict;
}

bool is_imputation(const TuGame& game, const Allocation& x) {
  require_allocation_dim(game, x);
  if (x.sum() != game.value(game.grand_coalition())) {
    return false;
  }
  for (int i = 0; i < game.player_count(); ++i) {
    if (x[static_cast<std::size_t>(i)] < game.value(Coalition::singleton(i))) {
      return false;
    }
  }
  return true;
}

LinearProgram core_program(const TuGame& game) {
  const int n = game.player_count();
  LinearProgram lp(n);
  const std::uint32_t full = Coalition::full(n).mask;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<Rat> row(static_cast<std::size_t>(n));
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      row[static_cast<std::size_t>(std::countr_zero(m))] = Rat(1);
    }
    lp.add_constraint(std::move(row),
                      mask == full ? Relation::Equal : Relation::GreaterEq,
                      game.value(Coalition(mask)));
  }
  return lp;
}

Rat max_core_payoff(const TuGame& game, int player) {
  if (player < 0 || player >= game.player_count()) {
    throw DomainError("player index out of range");
  }
  LinearProgram lp = core_program(game);
  lp.objective[static_cast<std::size_t>(player)] = Rat(1);
  const LpResult result = solve_max(lp);
  if (result.status != LpStatus::Optimal) {
    throw EmptyCore("the core of this game is empty");
  }
  return result.value;
}

bool core_nonempty(const TuGame& game) {
  return feasible(core_program(game));
}

std::vector<Allocation> sample_core(const TuGame& game, int count,
                                    std::uint64_t seed) {
  if (count < 0) {
    throw DomainError("sample count must be non-negative");
  }
  if (count == 0) {
    return {};
  }
  if (!core_nonempty(game)) {
    throw EmptyCore("cannot sample from an empty core");
  }

  const int n = game.player_count();
  std::mt19937_64 rng(seed);
  LinearProgram lp = core_program(game);

  std::vector<Allocation> points;
  std::set<std::vector<Rat>> seen;
  const auto add_point = [&](std::vector<Rat> p) {
    if (seen.insert(p).second) {
      points.emplace_back(std::move(p));
    }
  };

  // Vertices first: the core is a polytope, so each random objective has an
  // optimal basic solution.
  const int probes = std::max(4, std::min(count, 2 * n + 4));
  for (int k = 0; k < probes && static_cast<int>(points.size()) < count; ++k) {
    for (int i = 0; i < n; ++i) {
      lp.objective[static_cast<std::size_t>(i)] =
          Rat(static_cast<long long>(rng() % 19) - 9,
              static_cast<long long>(1 + rng() % 4));
    }
    const LpResult result = solve_max(lp);
    if (result.status != LpStatus::Optimal) {
      throw Error("sample_core: core program unexpectedly unbounded");
    }
    add_point(result.point);
  }

  // Fill with pairwise midpoints, walking pairs in a fixed order.
  std::size_t i = 0;
  std::size_t j = 1;
  while (static_cast<int>(points.size()) < count && j < points.size()) {
    std::vector<Rat> mid(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < mid.size(); ++k) {
      mid[k] = (points[i].payoffs[k] + points[j].payoffs[k]) / Rat(2);
    }
    add_point(std::move(mid));
    ++i;
    if (i == j) {
      ++j;
      i = 0;
    }
  }

  for (const Allocation& p : points) {
    if (!check_core(game, p).in_core) {
      throw Error("sample_core: generated point failed the core re-check");
    }
  }
  return points;
}

}  // namespace coopshare
