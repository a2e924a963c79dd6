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

#include "coopshare/game.hpp"

#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "coopshare/errors.hpp"
#include "coopshare/scans.hpp"

namespace coopshare {

TuGame::TuGame(int player_count, std::vector<Rat> values,
               std::vector<std::string> labels)
    : n_(player_count), values_(std::move(values)), labels_(std::move(labels)) {
  if (n_ < 0 || n_ > kMaxPlayers) {
    throw TooLarge("player count " + std::to_string(n_) +
                   " outside supported range 0.." +
                   std::to_string(kMaxPlayers));
  }
  if (values_.size() != (std::size_t{1} << n_)) {
    throw DimensionError("value table must have exactly 2^n entries");
  }
  if (!values_[0].is_zero()) {
    throw DomainError("the empty coalition must have value 0");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n_) {
      throw DimensionError("label list length must equal the player count");
    }
    std::set<std::string> seen;
    for (const auto& label : labels_) {
      if (!seen.insert(label).second) {
        throw DomainError("duplicate player label \"" + label + "\"");
      }
    }
  }
}

TuGame TuGame::zero(int player_count) {
  return TuGame(player_count,
                std::vector<Rat>(std::size_t{1} << player_count));
}

const Rat& TuGame::value(Coalition s) const {
  if (s.mask >= (std::uint32_t{1} << n_)) {
    throw InvalidCoalition("coalition mask " + std::to_string(s.mask) +
                           " out of range for a " + std::to_string(n_) +
                           "-player game");
  }
  return values_[s.mask];
}

std::string TuGame::coalition_name(Coalition s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int p : s.members()) {
    if (!first) {
      os << ',';
    }
    first = false;
    if (has_labels()) {
      os << labels_[static_cast<std::size_t>(p)];
    } else {
      os << p;
    }
  }
  os << '}';
  return os.str();
}

ConvexityCheck is_convex(const TuGame& game, ExecMode mode) {
  const auto violation = scans::use_parallel(mode, game.player_count())
                             ? scans::supermod_violation_parallel(game)
                             : scans::supermod_violation_serial(game);
  return ConvexityCheck{violation};
}

bool is_superadditive(const TuGame& game, ExecMode mode) {
  const auto violation = scans::use_parallel(mode, game.player_count())
                             ? scans::superadd_violation_parallel(game)
                             : scans::superadd_violation_serial(game);
  return !violation.has_value();
}

TuGame derived_game(const TuGame& game, Coalition removed) {
  if (removed.empty()) {
    throw InvalidCoalition("derived_game requires a non-empty coalition");
  }
  if (removed.mask >= (std::uint32_t{1} << game.player_count())) {
    throw InvalidCoalition("removed coalition out of range");
  }
  const std::vector<int> survivors =
      game.grand_coalition().minus(removed).members();
  const int m = static_cast<int>(survivors.size());
  const Rat paid_out = game.value(removed);

  std::vector<Rat> values(std::size_t{1} << m);
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << m); ++sub) {
    std::uint32_t original = removed.mask;
    for (int k = 0; k < m; ++k) {
      if ((sub >> k) & 1u) {
        original |= std::uint32_t{1} << survivors[static_cast<std::size_t>(k)];
      }
    }
    values[sub] = game.value(Coalition(original)) - paid_out;
  }

  std::vector<std::string> labels;
  if (game.has_labels()) {
    labels.reserve(survivors.size());
    for (int p : survivors) {
      labels.push_back(game.label(p));
    }
  }
  return TuGame(m, std::move(values), std::move(labels));
}

TuGame from_exchange(const ExchangeInstance& exchange) {
  const int supply_count = static_cast<int>(exchange.supplies.size());
  const int demand_count = static_cast<int>(exchange.demands.size());
  const int n = supply_count + demand_count;
  if (n > kMaxPlayers) {
    throw TooLarge("exchange with " + std::to_string(n) +
                   " bids exceeds the " + std::to_string(kMaxPlayers) +
                   "-player cap");
  }

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  std::set<std::string> seen;
  for (const auto& list : {exchange.supplies, exchange.demands}) {
    for (const auto& bid : list) {
      if (!seen.insert(bid.label).second) {
        throw DomainError("duplicate bid label \"" + bid.label + "\"");
      }
      labels.push_back(bid.label);
    }
  }

  // v(S): maximum-profit matching inside S. Take the lowest supply in S and
  // either leave it unmatched or pair it with a demand in S at non-negative
  // profit; both choices recurse into strictly smaller masks, so one
  // ascending pass fills the table.
  std::vector<Rat> values(std::size_t{1} << n);
  const std::uint32_t supply_bits = Coalition::full(supply_count).mask;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const std::uint32_t supplies_in = mask & supply_bits;
    if (supplies_in == 0) {
      continue;  // demands alone trade nothing
    }
    const int s = std::countr_zero(supplies_in);
    const Rat& supply_price =
        exchange.supplies[static_cast<std::size_t>(s)].price;
    Rat best = values[mask & ~(1u << s)];
    for (int d = supply_count; d < n; ++d) {
      if (!((mask >> d) & 1u)) {
        continue;
      }
      const Rat profit =
          exchange.demands[static_cast<std::size_t>(d - supply_count)].price -
          supply_price;
      if (profit.is_negative()) {
        continue;
      }
      const Rat with_pair =
          profit + values[mask & ~(1u << s) & ~(1u << d)];
      if (with_pair > best) {
        best = with_pair;
      }
    }
    values[mask] = std::move(best);
  }
  return TuGame(n, std::move(values), std::move(labels));
}

TuGame gen_convex(int player_count, std::uint64_t seed, int terms) {
  if (player_count < 1 || player_count > kMaxGeneratedPlayers) {
    throw DomainError("gen_convex supports 1.." +
                      std::to_string(kMaxGeneratedPlayers) + " players");
  }
  if (terms < 0) {
    throw DomainError("gen_convex needs a non-negative term count");
  }
  std::mt19937_64 rng(seed);
  const std::uint32_t full = Coalition::full(player_count).mask;

  std::vector<Rat> values(std::size_t{1} << player_count);
  for (int k = 0; k < terms; ++k) {
    const auto support =
        static_cast<std::uint32_t>(rng() % full) + 1;  // non-empty
    const Rat coefficient(static_cast<long long>(1 + rng() % 12),
                          static_cast<long long>(1 + rng() % 6));
    for (std::uint32_t mask = support; mask <= full; ++mask) {
      if ((mask & support) == support) {
        values[mask] += coefficient;
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(player_count));
  for (int p = 1; p <= player_count; ++p) {
    labels.push_back("p" + std::to_string(p));
  }
  return TuGame(player_count, std::move(values), std::move(labels));
}

}  // namespace coopshare
