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

#include "coopshare/payments.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "coopshare/errors.hpp"
#include "coopshare/exact_lp.hpp"

namespace coopshare {

Allocation vickrey(const TuGame& game) {
  const int n = game.player_count();
  const Coalition grand = game.grand_coalition();
  const Rat& grand_value = game.value(grand);
  std::vector<Rat> vp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    vp[static_cast<std::size_t>(i)] =
        grand_value - game.value(grand.minus(Coalition::singleton(i)));
  }
  return Allocation(std::move(vp));
}

Rat default_budget(const TuGame& game) {
  return game.value(game.grand_coalition());
}

ScalingResult esv(const TuGame& game, const Rat& budget) {
  if (budget.is_negative()) {
    throw DomainError("scaling budget must be non-negative");
  }
  const Allocation vp = vickrey(game);
  const Rat total = vp.sum();

  ScalingResult result;
  result.budget = budget;
  const int n = game.player_count();
  if (total.is_zero()) {
    if (!budget.is_zero()) {
      throw InfeasibleScaling(
          "total Vickrey payment is 0; only a zero budget is reachable");
    }
    result.alphas.assign(static_cast<std::size_t>(n), Rat(1));
    result.payments = Allocation(std::vector<Rat>(static_cast<std::size_t>(n)));
    return result;
  }
  if (budget > total) {
    throw InfeasibleScaling("budget " + budget.str() +
                            " exceeds the total Vickrey payment " +
                            total.str());
  }
  const Rat alpha = budget / total;
  result.alphas.assign(static_cast<std::size_t>(n), alpha);
  std::vector<Rat> payments(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    payments[static_cast<std::size_t>(i)] =
        alpha * vp[static_cast<std::size_t>(i)];
  }
  result.payments = Allocation(std::move(payments));
  return result;
}

ThresholdResult threshold_vickrey(const TuGame& game, const Rat& budget) {
  if (budget.is_negative()) {
    throw DomainError("threshold budget must be non-negative");
  }
  const Allocation vp = vickrey(game);

  const auto total_above = [&vp](const Rat& t) {
    Rat sum;
    for (const Rat& v : vp.payoffs) {
      if (v > t) {
        sum += v - t;
      }
    }
    return sum;
  };

  Rat threshold;  // 0
  Rat spend = total_above(threshold);
  if (spend > budget) {
    // Walk the kinks of the piecewise-linear spend curve; on the segment
    // where the budget is crossed the equation is linear in t.
    std::vector<Rat> kinks;
    for (const Rat& v : vp.payoffs) {
      if (v.is_positive()) {
        kinks.push_back(v);
      }
    }
    std::sort(kinks.begin(), kinks.end());
    kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

    Rat at = threshold;
    Rat spend_at = spend;
    for (const Rat& kink : kinks) {
      long long active = 0;
      for (const Rat& v : vp.payoffs) {
        if (v > at) {
          ++active;
        }
      }
      const Rat slope(active);
      const Rat spend_next = spend_at - slope * (kink - at);
      if (spend_next <= budget) {
        threshold = at + (spend_at - budget) / slope;
        break;
      }
      at = kink;
      spend_at = spend_next;
    }
  }

  ThresholdResult result;
  result.budget = budget;
  result.threshold = threshold;
  std::vector<Rat> payments(vp.payoffs.size());
  for (std::size_t i = 0; i < vp.payoffs.size(); ++i) {
    if (vp.payoffs[i] > threshold) {
      payments[i] = vp.payoffs[i] - threshold;
    }
  }
  result.payments = Allocation(std::move(payments));
  return result;
}

namespace {

struct ScalingProgram {
  LinearProgram lp;
  std::vector<int> positive;  // players with vp_i > 0, ascending
};

// Variables are the scaling factors of the positive-payment players, in
// ascending player order, each bounded to [0, 1]. Zero-payment players
// contribute nothing to any row.
ScalingProgram scaling_program(const TuGame& game, const Allocation& vp,
                               const Rat& budget, bool with_core_rows) {
  ScalingProgram prog;
  for (int i = 0; i < game.player_count(); ++i) {
    const Rat& v = vp[static_cast<std::size_t>(i)];
    if (v.is_negative()) {
      throw DomainError("player " + std::to_string(i) +
                        " has negative Vickrey payment " + v.str() +
                        "; individual scaling requires vp >= 0");
    }
    if (v.is_positive()) {
      prog.positive.push_back(i);
    }
  }

  const int k = static_cast<int>(prog.positive.size());
  prog.lp = LinearProgram(k);
  for (int j = 0; j < k; ++j) {
    prog.lp.set_lower(j, Rat(0));
    prog.lp.set_upper(j, Rat(1));
  }

  std::vector<Rat> budget_row(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    budget_row[static_cast<std::size_t>(j)] =
        vp[static_cast<std::size_t>(prog.positive[static_cast<std::size_t>(j)])];
  }
  prog.lp.add_constraint(std::move(budget_row), Relation::Equal, budget);

  if (with_core_rows) {
    const std::uint32_t full = Coalition::full(game.player_count()).mask;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::vector<Rat> row(static_cast<std::size_t>(k));
      bool any = false;
      for (int j = 0; j < k; ++j) {
        const int player = prog.positive[static_cast<std::size_t>(j)];
        if ((mask >> player) & 1u) {
          row[static_cast<std::size_t>(j)] =
              vp[static_cast<std::size_t>(player)];
          any = true;
        }
      }
      const Rat& claim = game.value(Coalition(mask));
      if (!any) {
        // Coalitions of zero-payment players receive nothing; the row is
        // either vacuous or unsatisfiable.
        if (claim.is_positive()) {
          prog.lp.add_constraint(row, Relation::GreaterEq, claim);
        }
        continue;
      }
      prog.lp.add_constraint(std::move(row), Relation::GreaterEq, claim);
    }
  }
  return prog;
}

ScalingResult solve_scaling(const TuGame& game, const Rat& budget,
                            bool with_core_rows) {
  if (budget.is_negative()) {
    throw DomainError("scaling budget must be non-negative");
  }
  const Allocation vp = vickrey(game);
  ScalingProgram prog = scaling_program(game, vp, budget, with_core_rows);

  const int n = game.player_count();
  ScalingResult result;
  result.budget = budget;
  result.alphas.assign(static_cast<std::size_t>(n), Rat(1));
  std::vector<Rat> payments(static_cast<std::size_t>(n));

  if (prog.positive.empty()) {
    if (!budget.is_zero()) {
      throw InfeasibleScaling(
          "all Vickrey payments are 0; only a zero budget is reachable");
    }
    result.payments = Allocation(std::move(payments));
    return result;
  }

  std::vector<int> targets(prog.positive.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    targets[j] = static_cast<int>(j);
  }

  LexMaxMinResult lex;
  try {
    lex = lex_max_min(prog.lp, targets);
  } catch (const InfeasibleProgram&) {
    if (with_core_rows && !core_nonempty(game)) {
      throw EmptyCore("individual scaling needs a non-empty core");
    }
    throw InfeasibleScaling(
        "no scaling vector in [0,1]^n satisfies the payment program");
  }

  for (std::size_t j = 0; j < prog.positive.size(); ++j) {
    const auto player = static_cast<std::size_t>(prog.positive[j]);
    result.alphas[player] = lex.target_values[j];
    payments[player] = result.alphas[player] * vp[player];
  }
  result.payments = Allocation(std::move(payments));
  return result;
}

}  // namespace

ScalingResult isv(const TuGame& game, const Rat& budget) {
  return solve_scaling(game, budget, /*with_core_rows=*/true);
}

ScalingResult isv_budget_only(const TuGame& game, const Rat& budget) {
  return solve_scaling(game, budget, /*with_core_rows=*/false);
}

}  // namespace coopshare
