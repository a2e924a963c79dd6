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

#ifndef COOPSHARE_COALITION_HPP
#define COOPSHARE_COALITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace coopshare {

/// A coalition is a subset of the players 0..n-1, stored as a bitmask.
/// Bit i set means player i is a member. The empty coalition is mask 0.
struct Coalition {
  std::uint32_t mask = 0;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t m) : mask(m) {}

  static constexpr Coalition of(std::initializer_list<int> players) {
    std::uint32_t m = 0;
    for (int p : players) {
      m |= std::uint32_t{1} << p;
    }
    return Coalition(m);
  }

  /// The grand coalition over n players.
  static constexpr Coalition full(int n) {
    return Coalition((std::uint32_t{1} << n) - 1);
  }

  static constexpr Coalition singleton(int player) {
    return Coalition(std::uint32_t{1} << player);
  }

  constexpr bool empty() const { return mask == 0; }
  int size() const { return std::popcount(mask); }
  constexpr bool contains(int player) const {
    return (mask >> player) & 1u;
  }
  constexpr bool subset_of(Coalition other) const {
    return (mask & ~other.mask) == 0;
  }
  constexpr Coalition united(Coalition other) const {
    return Coalition(mask | other.mask);
  }
  constexpr Coalition intersected(Coalition other) const {
    return Coalition(mask & other.mask);
  }
  constexpr Coalition minus(Coalition other) const {
    return Coalition(mask & ~other.mask);
  }

  /// Member player indices in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  friend constexpr bool operator==(Coalition a, Coalition b) {
    return a.mask == b.mask;
  }
  friend constexpr bool operator!=(Coalition a, Coalition b) {
    return a.mask != b.mask;
  }
  friend constexpr bool operator<(Coalition a, Coalition b) {
    return a.mask < b.mask;
  }
};

}  // namespace coopshare

#endif  // COOPSHARE_COALITION_HPP
