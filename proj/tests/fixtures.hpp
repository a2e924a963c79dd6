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

#ifndef COOPSHARE_TESTS_FIXTURES_HPP
#define COOPSHARE_TESTS_FIXTURES_HPP

#include "coopshare/game.hpp"
#include "coopshare/verification.hpp"

namespace fixtures {

// Player order of the exchange games is supplies then demands:
// example 1 -> (s1, d1, d2); example 2 -> (s1, s2, d1, d2, d3).
inline coopshare::TuGame example1() {
  return coopshare::from_exchange(coopshare::example1_exchange());
}

inline coopshare::TuGame example2() {
  return coopshare::from_exchange(coopshare::example2_exchange());
}

inline coopshare::TuGame example3() { return coopshare::example3_game(); }

// Index helpers for the exchange fixtures.
namespace ex1 {
inline constexpr int s1 = 0, d1 = 1, d2 = 2;
}
namespace ex2 {
inline constexpr int s1 = 0, s2 = 1, d1 = 2, d2 = 3, d3 = 4;
}

}  // namespace fixtures

#endif  // COOPSHARE_TESTS_FIXTURES_HPP
