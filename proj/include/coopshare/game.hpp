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

#ifndef COOPSHARE_GAME_HPP
#define COOPSHARE_GAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coopshare/coalition.hpp"
#include "coopshare/execution.hpp"
#include "coopshare/rational.hpp"

namespace coopshare {

inline constexpr int kMaxPlayers = 20;
inline constexpr int kMaxGeneratedPlayers = 12;

/// A cooperative game with transferable utility: a player set 0..n-1 and a
/// table of 2^n exact coalition values. Immutable after construction.
class TuGame {
 public:
  /// `values` must have exactly 2^player_count entries, with values[0] == 0.
  /// `labels`, when given, names the players and must have length
  /// player_count.
  TuGame(int player_count, std::vector<Rat> values,
         std::vector<std::string> labels = {});

  static TuGame zero(int player_count);

  int player_count() const { return n_; }
  Coalition grand_coalition() const { return Coalition::full(n_); }

  /// Value of a coalition; value of the empty coalition is always 0.
  /// Throws InvalidCoalition when the mask is out of range.
  const Rat& value(Coalition s) const;

  std::span<const Rat> values() const { return values_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int player) const { return labels_[player]; }

  /// "{a,c}" with player names, or "{0,2}" for unlabeled games.
  std::string coalition_name(Coalition s) const;

 private:
  int n_;
  std::vector<Rat> values_;
  std::vector<std::string> labels_;
};

/// A supermodularity violation: v(s) + v(t) > v(s ∪ t) + v(s ∩ t).
struct SupermodViolation {
  Coalition s;
  Coalition t;
};

struct ConvexityCheck {
  std::optional<SupermodViolation> violation;
  bool convex() const { return !violation.has_value(); }
};

/// Checks supermodularity over all coalition pairs. On failure the returned
/// witness re-violates the inequality when evaluated directly.
ConvexityCheck is_convex(const TuGame& game, ExecMode mode = ExecMode::Auto);

/// True iff v(S ∪ T) >= v(S) + v(T) for all disjoint S, T.
bool is_superadditive(const TuGame& game, ExecMode mode = ExecMode::Auto);

/// The reduced game that remains after paying off `removed`:
/// v'(S) = v(S ∪ removed) - v(removed) for S disjoint from removed.
/// Surviving players are renumbered 0..m-1 preserving their relative order.
/// Throws InvalidCoalition when `removed` is empty or out of range.
TuGame derived_game(const TuGame& game, Coalition removed);

struct ExchangeBid {
  std::string label;
  Rat price;
};

/// A one-item combinatorial exchange: supply bids offer the item at a price,
/// demand bids offer to buy at a price. Labels must be unique across both
/// lists.
struct ExchangeInstance {
  std::vector<ExchangeBid> supplies;
  std::vector<ExchangeBid> demands;
};

/// Builds the TU-game of an exchange. Players are the supply bids followed
/// by the demand bids; v(S) is the maximum total profit of a matching inside
/// S, where supply i may serve demand j only when price_j - price_i >= 0.
TuGame from_exchange(const ExchangeInstance& exchange);

/// Deterministic generator of convex games: a non-negative random
/// combination of `terms` unanimity games. Always passes is_convex.
/// Requires 1 <= player_count <= 12.
TuGame gen_convex(int player_count, std::uint64_t seed, int terms);

}  // namespace coopshare

#endif  // COOPSHARE_GAME_HPP
