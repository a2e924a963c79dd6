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

#include "coopshare/errors.hpp"
#include "coopshare/game.hpp"
#include "coopshare/scans.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coopshare;

TEST_CASE("value lookups and the empty-coalition convention") {
  const TuGame g = fixtures::example3();
  CHECK(g.value(Coalition::of({0, 1})) == Rat(5));
  CHECK(g.value(Coalition::of({0, 1, 2})) == Rat(7));
  CHECK(g.value(Coalition()) == Rat(0));
  CHECK(g.value(Coalition::of({1, 2})) == Rat(2));
  CHECK_THROWS_AS(g.value(Coalition(8)), InvalidCoalition);
}

TEST_CASE("construction validates the table") {
  CHECK_THROWS_AS(TuGame(2, std::vector<Rat>(3)), DimensionError);
  std::vector<Rat> bad(4);
  bad[0] = Rat(1);
  CHECK_THROWS_AS(TuGame(2, bad), DomainError);
  CHECK_THROWS_AS(TuGame(21, std::vector<Rat>(8)), TooLarge);
  CHECK_THROWS_AS(TuGame(2, std::vector<Rat>(4), {"a", "a"}), DomainError);
  CHECK_THROWS_AS(TuGame(2, std::vector<Rat>(4), {"a"}), DimensionError);
}

TEST_CASE("convexity of the worked example") {
  // Exhaustive reference over all 2^3 x 2^3 pairs agrees.
  const TuGame g = fixtures::example3();
  CHECK(is_convex(g).convex());
  CHECK_FALSE(scans::supermod_violation_allpairs(g).has_value());
}

TEST_CASE("the five-bid exchange game is not convex") {
  using namespace fixtures::ex2;
  const TuGame g = fixtures::example2();
  const ConvexityCheck check = is_convex(g);
  REQUIRE_FALSE(check.convex());

  // Whatever witness is reported must re-violate supermodularity.
  const Coalition s = check.violation->s;
  const Coalition t = check.violation->t;
  CHECK(g.value(s) + g.value(t) >
        g.value(s.united(t)) + g.value(s.intersected(t)));

  // The pair named in the worked analysis violates as well:
  // v({s1,d2}) = 5, v({s1,d3}) = 3, union 5, intersection 0.
  const Coalition a = Coalition::of({s1, d2});
  const Coalition b = Coalition::of({s1, d3});
  CHECK(g.value(a) == Rat(5));
  CHECK(g.value(b) == Rat(3));
  CHECK(g.value(a.united(b)) == Rat(5));
  CHECK(g.value(a.intersected(b)) == Rat(0));
  CHECK(g.value(a) + g.value(b) > g.value(a.united(b)) + g.value(a.intersected(b)));
}

TEST_CASE("additive games are convex") {
  std::vector<Rat> values(16);
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    values[mask] = Rat(Coalition(mask).size());
  }
  CHECK(is_convex(TuGame(4, values)).convex());
}

TEST_CASE("superadditivity") {
  CHECK(is_superadditive(fixtures::example3()));
  CHECK(is_superadditive(TuGame::zero(4)));

  std::vector<Rat> values(4);
  values[1] = Rat(1);
  values[2] = Rat(1);
  values[3] = Rat(1);
  CHECK_FALSE(is_superadditive(TuGame(2, values)));
}

TEST_CASE("derived game follows the reduction rule") {
  const TuGame g = fixtures::example3();

  SUBCASE("removing the first-round coalition of the worked example") {
    const TuGame d = derived_game(g, Coalition::of({0, 1}));
    CHECK(d.player_count() == 1);
    CHECK(d.value(Coalition(1)) == Rat(2));  // 7 - 5
    CHECK(d.labels() == std::vector<std::string>{"3"});
  }
  SUBCASE("removing the last player") {
    const TuGame d = derived_game(g, Coalition::of({2}));
    CHECK(d.player_count() == 2);
    CHECK(d.value(Coalition::of({0, 1})) == Rat(7));  // 7 - 0
    CHECK(d.value(Coalition::of({0})) == Rat(0));     // v({1,3}) - 0
    CHECK(d.value(Coalition::of({1})) == Rat(2));     // v({2,3}) - 0
  }
  SUBCASE("removing everybody leaves the zero-player game") {
    const TuGame d = derived_game(g, g.grand_coalition());
    CHECK(d.player_count() == 0);
    CHECK(d.value(Coalition()) == Rat(0));
  }
  SUBCASE("empty removal is rejected") {
    CHECK_THROWS_AS(derived_game(g, Coalition()), InvalidCoalition);
  }
}

TEST_CASE("derived game composes") {
  // Removing S then T equals removing S ∪ T in one step.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const TuGame g = gen_convex(n, rng(), 2 * n);
    const std::uint32_t full = Coalition::full(n).mask;
    const auto first = Coalition(1 + static_cast<std::uint32_t>(rng() % full));
    if (first == g.grand_coalition()) {
      continue;
    }
    const TuGame once = derived_game(g, first);

    const std::uint32_t rest = Coalition::full(once.player_count()).mask;
    const auto second =
        Coalition(1 + static_cast<std::uint32_t>(rng() % rest));
    const TuGame twice = derived_game(once, second);

    std::uint32_t second_original = 0;
    const auto survivors = g.grand_coalition().minus(first).members();
    for (int k : second.members()) {
      second_original |= std::uint32_t{1}
                         << survivors[static_cast<std::size_t>(k)];
    }
    const TuGame direct =
        derived_game(g, first.united(Coalition(second_original)));
    REQUIRE(twice.player_count() == direct.player_count());
    for (std::uint32_t mask = 0;
         mask < (std::uint32_t{1} << twice.player_count()); ++mask) {
      CHECK(twice.value(Coalition(mask)) == direct.value(Coalition(mask)));
    }
  }
}

TEST_CASE("exchange games reproduce the worked profits") {
  const TuGame g1 = fixtures::example1();
  CHECK(g1.player_count() == 3);
  CHECK(g1.value(g1.grand_coalition()) == Rat(5));

  const TuGame g2 = fixtures::example2();
  CHECK(g2.value(g2.grand_coalition()) == Rat(6));

  SUBCASE("no demands means no profit anywhere") {
    ExchangeInstance only_supplies;
    only_supplies.supplies = {{"a", Rat(3)}, {"b", Rat(7)}};
    const TuGame g = from_exchange(only_supplies);
    for (std::uint32_t mask = 0; mask < 4; ++mask) {
      CHECK(g.value(Coalition(mask)) == Rat(0));
    }
  }
}

TEST_CASE("exchange tables agree with the brute-force matcher") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    ExchangeInstance ex;
    const int ns = 1 + static_cast<int>(rng() % 3);
    const int nd = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ns; ++i) {
      ex.supplies.push_back(
          {"s" + std::to_string(i), Rat(static_cast<long long>(rng() % 16))});
    }
    for (int i = 0; i < nd; ++i) {
      ex.demands.push_back(
          {"d" + std::to_string(i), Rat(static_cast<long long>(rng() % 16))});
    }
    const TuGame g = from_exchange(ex);
    for (std::uint32_t mask = 0;
         mask < (std::uint32_t{1} << g.player_count()); ++mask) {
      CHECK(g.value(Coalition(mask)) ==
            oracle::brute_exchange_value(ex, Coalition(mask)));
    }
  }
}

TEST_CASE("exchange value is monotone under coalition growth") {
  const TuGame g = fixtures::example2();
  const std::uint32_t full = g.grand_coalition().mask;
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (int p = 0; p < g.player_count(); ++p) {
      const std::uint32_t t = s | (1u << p);
      CHECK(g.value(Coalition(s)) <= g.value(Coalition(t)));
    }
  }
}

TEST_CASE("exchange validation") {
  ExchangeInstance dup;
  dup.supplies = {{"x", Rat(1)}};
  dup.demands = {{"x", Rat(2)}};
  CHECK_THROWS_AS(from_exchange(dup), DomainError);

  ExchangeInstance big;
  for (int i = 0; i < 21; ++i) {
    big.demands.push_back({"d" + std::to_string(i), Rat(1)});
  }
  CHECK_THROWS_AS(from_exchange(big), TooLarge);
}

TEST_CASE("generated games are convex and deterministic") {
  for (const std::uint64_t seed : {1ULL, 7ULL, 99ULL, 12345ULL}) {
    for (int n = 1; n <= 6; ++n) {
      const TuGame g = gen_convex(n, seed, 3 * n);
      CHECK(is_convex(g).convex());
      CHECK_FALSE(scans::supermod_violation_allpairs(g).has_value());
      CHECK(g.value(Coalition()) == Rat(0));

      const TuGame again = gen_convex(n, seed, 3 * n);
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        CHECK(g.value(Coalition(mask)) == again.value(Coalition(mask)));
      }
    }
  }
}

TEST_CASE("generator corner cases") {
  const TuGame zero = gen_convex(3, 5, 0);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    CHECK(zero.value(Coalition(mask)) == Rat(0));
  }
  const TuGame single = gen_convex(1, 5, 1);
  CHECK(single.value(Coalition(1)).is_positive());
  CHECK_THROWS_AS(gen_convex(13, 1, 1), DomainError);
  CHECK_THROWS_AS(gen_convex(0, 1, 1), DomainError);
}
