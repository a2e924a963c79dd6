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

#include "coopshare/scans.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <bit>
#include <cstdint>
#include <limits>

#include "coopshare/errors.hpp"

namespace coopshare::scans {

namespace {

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();

// Violation keys order witnesses totally so that the parallel min-reduction
// reproduces the serial first-hit exactly.
constexpr std::uint64_t supermod_key(std::uint32_t base, int i, int j) {
  return (static_cast<std::uint64_t>(base) << 10) |
         (static_cast<std::uint64_t>(i) << 5) | static_cast<std::uint64_t>(j);
}

constexpr std::uint64_t pair_key(std::uint32_t s, std::uint32_t t) {
  return (static_cast<std::uint64_t>(s) << 20) | static_cast<std::uint64_t>(t);
}

// Smallest (i, j), i < j, both outside `base`, violating the exchange form
// of supermodularity: v(B∪{i}) + v(B∪{j}) > v(B∪{i,j}) + v(B).
std::uint64_t first_supermod_hit_at(const TuGame& game, std::uint32_t base) {
  const auto values = game.values();
  const int n = game.player_count();
  const Rat& v_base = values[base];
  for (int i = 0; i < n; ++i) {
    if ((base >> i) & 1u) {
      continue;
    }
    const std::uint32_t with_i = base | (1u << i);
    for (int j = i + 1; j < n; ++j) {
      if ((base >> j) & 1u) {
        continue;
      }
      const std::uint32_t with_j = base | (1u << j);
      if (values[with_i] + values[with_j] >
          values[with_i | with_j] + v_base) {
        return supermod_key(base, i, j);
      }
    }
  }
  return kNoHit;
}

std::optional<SupermodViolation> supermod_from_key(std::uint64_t key) {
  if (key == kNoHit) {
    return std::nullopt;
  }
  const auto base = static_cast<std::uint32_t>(key >> 10);
  const int i = static_cast<int>((key >> 5) & 31u);
  const int j = static_cast<int>(key & 31u);
  return SupermodViolation{Coalition(base | (1u << i)),
                           Coalition(base | (1u << j))};
}

// Ascending enumeration of the submasks of `universe`.
constexpr std::uint32_t next_submask(std::uint32_t t, std::uint32_t universe) {
  return (t - universe) & universe;
}

// Smallest disjoint T (ascending) with v(S) + v(T) > v(S ∪ T).
std::uint64_t first_superadd_hit_at(const TuGame& game, std::uint32_t s) {
  const auto values = game.values();
  const std::uint32_t complement =
      Coalition::full(game.player_count()).mask & ~s;
  const Rat& v_s = values[s];
  for (std::uint32_t t = next_submask(0, complement); t != 0;
       t = next_submask(t, complement)) {
    if (v_s + values[t] > values[s | t]) {
      return pair_key(s, t);
    }
  }
  return kNoHit;
}

Rat weight_sum(std::span<const Rat> weights, std::uint32_t mask) {
  Rat sum;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    sum += weights[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return sum;
}

Rat payoff_sum(std::span<const Rat> payoffs, std::uint32_t mask) {
  Rat sum;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    sum += payoffs[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return sum;
}

// Running best of the average scan, kept as the unreduced fraction
// value/weight so that comparisons are cross-multiplications.
struct AvgBest {
  Rat value;
  Rat weight;
  std::uint32_t union_mask = 0;
  bool any = false;

  // Commutative, associative; the tie branch makes the merge order
  // unobservable.
  void absorb(const AvgBest& other) {
    if (!other.any) {
      return;
    }
    if (!any) {
      *this = other;
      return;
    }
    const Rat lhs = other.value * weight;
    const Rat rhs = value * other.weight;
    if (lhs > rhs) {
      *this = other;
    } else if (lhs == rhs) {
      union_mask |= other.union_mask;
    }
  }

  void consider(const Rat& v, Rat w, std::uint32_t mask) {
    AvgBest candidate;
    candidate.value = v;
    candidate.weight = std::move(w);
    candidate.union_mask = mask;
    candidate.any = true;
    absorb(candidate);
  }
};

MaxAvgScan finish_max_average(const TuGame& game, std::span<const Rat> weights,
                              const AvgBest& best) {
  MaxAvgScan out;
  out.maximizer_union = Coalition(best.union_mask);
  out.average = best.value / best.weight;
  const Rat union_value = game.value(out.maximizer_union);
  const Rat union_weight = weight_sum(weights, best.union_mask);
  out.union_attains = union_value * best.weight == best.value * union_weight;
  return out;
}

}  // namespace

bool use_parallel(ExecMode mode, int player_count) {
#ifdef _OPENMP
  switch (mode) {
    case ExecMode::Serial:
      return false;
    case ExecMode::Parallel:
      return true;
    case ExecMode::Auto:
      return player_count >= 11;
  }
  return false;
#else
  (void)mode;
  (void)player_count;
  return false;
#endif
}

std::optional<SupermodViolation> supermod_violation_serial(
    const TuGame& game) {
  const std::uint32_t full = Coalition::full(game.player_count()).mask;
  for (std::uint32_t base = 0; base <= full; ++base) {
    const std::uint64_t key = first_supermod_hit_at(game, base);
    if (key != kNoHit) {
      return supermod_from_key(key);
    }
  }
  return std::nullopt;
}

std::optional<SupermodViolation> supermod_violation_parallel(
    const TuGame& game) {
  const std::int64_t count = std::int64_t{1} << game.player_count();
  std::uint64_t best = kNoHit;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t base = 0; base < count; ++base) {
    const std::uint64_t key =
        first_supermod_hit_at(game, static_cast<std::uint32_t>(base));
    if (key < best) {
      best = key;
    }
  }
  return supermod_from_key(best);
}

std::optional<SupermodViolation> supermod_violation_allpairs(
    const TuGame& game) {
  const auto values = game.values();
  const std::uint32_t full = Coalition::full(game.player_count()).mask;
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (std::uint32_t t = s + 1; t <= full; ++t) {
      if (values[s] + values[t] > values[s | t] + values[s & t]) {
        return SupermodViolation{Coalition(s), Coalition(t)};
      }
    }
  }
  return std::nullopt;
}

std::optional<SuperaddViolation> superadd_violation_serial(
    const TuGame& game) {
  const std::uint32_t full = Coalition::full(game.player_count()).mask;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint64_t key = first_superadd_hit_at(game, s);
    if (key != kNoHit) {
      return SuperaddViolation{Coalition(s),
                               Coalition(static_cast<std::uint32_t>(
                                   key & ((1u << 20) - 1)))};
    }
  }
  return std::nullopt;
}

std::optional<SuperaddViolation> superadd_violation_parallel(
    const TuGame& game) {
  const std::int64_t count = std::int64_t{1} << game.player_count();
  std::uint64_t best = kNoHit;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t s = 1; s < count; ++s) {
    const std::uint64_t key =
        first_superadd_hit_at(game, static_cast<std::uint32_t>(s));
    if (key < best) {
      best = key;
    }
  }
  if (best == kNoHit) {
    return std::nullopt;
  }
  return SuperaddViolation{
      Coalition(static_cast<std::uint32_t>(best >> 20)),
      Coalition(static_cast<std::uint32_t>(best & ((1u << 20) - 1)))};
}

MaxAvgScan max_average_serial(const TuGame& game,
                              std::span<const Rat> weights) {
  if (game.player_count() < 1) {
    throw DomainError("max average scan needs at least one player");
  }
  const auto values = game.values();
  const std::uint32_t full = Coalition::full(game.player_count()).mask;
  AvgBest best;
  for (std::uint32_t s = 1; s <= full; ++s) {
    best.consider(values[s], weight_sum(weights, s), s);
  }
  return finish_max_average(game, weights, best);
}

MaxAvgScan max_average_parallel(const TuGame& game,
                                std::span<const Rat> weights) {
  if (game.player_count() < 1) {
    throw DomainError("max average scan needs at least one player");
  }
  const auto values = game.values();
  const std::int64_t count = std::int64_t{1} << game.player_count();
  AvgBest best;
#pragma omp parallel
  {
    AvgBest local;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 1; s < count; ++s) {
      const auto mask = static_cast<std::uint32_t>(s);
      local.consider(values[mask], weight_sum(weights, mask), mask);
    }
#pragma omp critical(coopshare_max_average_merge)
    best.absorb(local);
  }
  return finish_max_average(game, weights, best);
}

std::optional<Coalition> core_violation_serial(const TuGame& game,
                                               std::span<const Rat> payoffs) {
  const auto values = game.values();
  const std::uint32_t full = Coalition::full(game.player_count()).mask;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (payoff_sum(payoffs, s) < values[s]) {
      return Coalition(s);
    }
  }
  return std::nullopt;
}

std::optional<Coalition> core_violation_parallel(
    const TuGame& game, std::span<const Rat> payoffs) {
  const auto values = game.values();
  const std::int64_t count = std::int64_t{1} << game.player_count();
  std::uint64_t best = kNoHit;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t s = 1; s < count; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    if (static_cast<std::uint64_t>(mask) < best &&
        payoff_sum(payoffs, mask) < values[mask]) {
      best = mask;
    }
  }
  if (best == kNoHit) {
    return std::nullopt;
  }
  return Coalition(static_cast<std::uint32_t>(best));
}

}  // namespace coopshare::scans
