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

#include <doctest.h>

#include <random>
#include <set>

#include "coopshare/core.hpp"
#include "coopshare/errors.hpp"
#include "coopshare/payments.hpp"
#include "fixtures.hpp"

using namespace coopshare;

TEST_CASE("core membership of the worked example") {
  const TuGame g = fixtures::example3();
  const Allocation inside({Rat(5, 2), Rat(7, 2), Rat(1)});
  const CoreVerdict ok = check_core(g, inside);
  CHECK(ok.in_core);
  CHECK_FALSE(ok.violated.has_value());
  CHECK(ok.budget_gap == Rat(0));

  const Allocation zeros({Rat(0), Rat(0), Rat(0)});
  const CoreVerdict zero_game =
      check_core(TuGame::zero(3), zeros);
  CHECK(zero_game.in_core);

  CHECK_THROWS_AS(check_core(g, Allocation({Rat(1)})), DimensionError);
}

TEST_CASE("equal scaling of the five-bid game breaks {s1,d2}") {
  using namespace fixtures::ex2;
  const TuGame g = fixtures::example2();
  const ScalingResult scaled = esv(g, Rat(6));
  const CoreVerdict verdict = check_core(g, scaled.payments);
  CHECK_FALSE(verdict.in_core);
  REQUIRE(verdict.violated.has_value());
  CHECK(*verdict.violated == Coalition::of({s1, d2}));
  CHECK(scaled.payments[s1] + scaled.payments[d2] == Rat(9, 2));
  CHECK(g.value(*verdict.violated) == Rat(5));
}

TEST_CASE("budget gap reporting") {
  const TuGame g = fixtures::example3();
  // Overpaying breaks no coalition but misses budget balance.
  const CoreVerdict over = check_core(g, Allocation({Rat(4), Rat(4), Rat(2)}));
  CHECK_FALSE(over.in_core);
  CHECK_FALSE(over.violated.has_value());
  CHECK(over.budget_gap == Rat(3));
}

TEST_CASE("imputation checks") {
  const TuGame g = fixtures::example3();
  CHECK(is_imputation(g, Allocation({Rat(5, 2), Rat(5, 2), Rat(2)})));
  CHECK(is_imputation(g, Allocation({Rat(7), Rat(0), Rat(0)})));
  CHECK_FALSE(is_imputation(g, Allocation({Rat(8), Rat(0), Rat(0)})));
  CHECK_FALSE(is_imputation(g, Allocation({Rat(8), Rat(0), Rat(-1)})));
}

TEST_CASE("maximal core payoffs of the worked example") {
  const TuGame g = fixtures::example3();
  CHECK(max_core_payoff(g, 1) == Rat(7));
  CHECK(max_core_payoff(g, 2) == Rat(2));
  CHECK(max_core_payoff(g, 0) == Rat(5));
  CHECK_THROWS_AS(max_core_payoff(g, 3), DomainError);

  std::vector<Rat> single(2);
  single[1] = Rat(9, 4);
  const TuGame one(1, single);
  CHECK(max_core_payoff(one, 0) == Rat(9, 4));
}

TEST_CASE("core emptiness") {
  CHECK(core_nonempty(fixtures::example3()));
  CHECK(core_nonempty(TuGame::zero(3)));
  CHECK(core_nonempty(fixtures::example2()));

  std::vector<Rat> values(4);
  values[1] = Rat(1);
  values[2] = Rat(1);
  values[3] = Rat(1);
  const TuGame empty_core(2, values);
  CHECK_FALSE(core_nonempty(empty_core));
  CHECK_THROWS_AS(max_core_payoff(empty_core, 0), EmptyCore);
  CHECK_THROWS_AS(sample_core(empty_core, 3, 1), EmptyCore);
}

TEST_CASE("max core payoff never exceeds what the others leave over") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const TuGame g = gen_convex(n, rng(), 2 * n);
    for (int i = 0; i < n; ++i) {
      Rat others;
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          others += g.value(Coalition::singleton(j));
        }
      }
      CHECK(max_core_payoff(g, i) <= g.value(g.grand_coalition()) - others);
    }
  }
}

TEST_CASE("core sampling") {
  const TuGame g = fixtures::example3();

  SUBCASE("count zero gives an empty list") {
    CHECK(sample_core(g, 0, 9).empty());
  }
  SUBCASE("points are in the core, distinct, and deterministic") {
    const auto points = sample_core(g, 12, 9);
    CHECK(points.size() == 12);
    std::set<std::vector<Rat>> distinct;
    for (const auto& p : points) {
      CHECK(check_core(g, p).in_core);
      CHECK(p[0] + p[1] >= Rat(5));  // the binding pair constraint
      distinct.insert(p.payoffs);
    }
    CHECK(distinct.size() == points.size());

    const auto again = sample_core(g, 12, 9);
    REQUIRE(again.size() == points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      CHECK(points[i] == again[i]);
    }
  }
  SUBCASE("a single-point core yields one point") {
    // v({1}) = v({2}) = 1, v(N) = 2: the only core element is (1, 1).
    std::vector<Rat> values(4);
    values[1] = Rat(1);
    values[2] = Rat(1);
    values[3] = Rat(2);
    const auto points = sample_core(TuGame(2, values), 5, 3);
    REQUIRE(points.size() == 1);
    CHECK(points[0] == Allocation({Rat(1), Rat(1)}));
  }
}
