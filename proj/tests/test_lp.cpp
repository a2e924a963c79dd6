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

#include <algorithm>
#include <random>

#include "coopshare/core.hpp"
#include "coopshare/errors.hpp"
#include "coopshare/exact_lp.hpp"
#include "coopshare/payments.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coopshare;

namespace {

std::vector<Rat> sorted_copy(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// true when a >=_lex b on the sorted images
bool lex_geq(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  const auto sa = sorted_copy(a);
  const auto sb = sorted_copy(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] != sb[i]) {
      return sa[i] > sb[i];
    }
  }
  return true;
}

// The scaling program of the five-bid exchange game, built by hand:
// variables are the factors of the positive-payment players
// (s1, s2, d2, d3) with payments (3, 1, 3, 1).
LinearProgram example2_scaling_program() {
  const TuGame g = fixtures::example2();
  const std::vector<int> positive{fixtures::ex2::s1, fixtures::ex2::s2,
                                  fixtures::ex2::d2, fixtures::ex2::d3};
  const std::vector<Rat> vp{Rat(3), Rat(1), Rat(3), Rat(1)};

  LinearProgram lp(4);
  for (int j = 0; j < 4; ++j) {
    lp.set_lower(j, Rat(0));
    lp.set_upper(j, Rat(1));
  }
  lp.add_constraint({Rat(3), Rat(1), Rat(3), Rat(1)}, Relation::Equal, Rat(6));
  const std::uint32_t full = g.grand_coalition().mask;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<Rat> row(4);
    for (std::size_t j = 0; j < positive.size(); ++j) {
      if ((mask >> positive[j]) & 1u) {
        row[j] = vp[j];
      }
    }
    lp.add_constraint(std::move(row), Relation::GreaterEq,
                      g.value(Coalition(mask)));
  }
  return lp;
}

}  // namespace

TEST_CASE("single-variable maximum") {
  LinearProgram lp(1);
  lp.objective[0] = Rat(1);
  lp.add_constraint({Rat(1)}, Relation::LessEq, Rat(3));
  const LpResult r = solve_max(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(3));
  CHECK(r.point == std::vector<Rat>{Rat(3)});
}

TEST_CASE("bound sum below the equality row is infeasible") {
  LinearProgram lp(2);
  lp.objective = {Rat(1), Rat(1)};
  lp.add_constraint({Rat(1), Rat(1)}, Relation::Equal, Rat(5));
  for (int j = 0; j < 2; ++j) {
    lp.set_lower(j, Rat(0));
    lp.set_upper(j, Rat(1));
  }
  CHECK(solve_max(lp).status == LpStatus::Infeasible);
}

TEST_CASE("the worked example's core admits payoff 7 for player 2") {
  LinearProgram lp = core_program(fixtures::example3());
  lp.objective[1] = Rat(1);
  const LpResult r = solve_max(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(7));
}

TEST_CASE("unbounded direction is reported") {
  LinearProgram lp(1);
  lp.objective[0] = Rat(1);
  CHECK(solve_max(lp).status == LpStatus::Unbounded);
}

TEST_CASE("feasibility testing") {
  SUBCASE("contradictory bounds on one variable") {
    LinearProgram lp(1);
    lp.add_constraint({Rat(1)}, Relation::GreaterEq, Rat(1));
    lp.add_constraint({Rat(1)}, Relation::LessEq, Rat(0));
    CHECK_FALSE(feasible(lp));
  }
  SUBCASE("no constraints, one free variable") {
    CHECK(feasible(LinearProgram(1)));
  }
  SUBCASE("the worked example's core is non-empty") {
    CHECK(feasible(core_program(fixtures::example3())));
  }
}

TEST_CASE("optimal points re-satisfy every constraint exactly") {
  std::mt19937_64 rng(17);
  int optima = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int nv = 2 + static_cast<int>(rng() % 3);
    LinearProgram lp(nv);
    for (int j = 0; j < nv; ++j) {
      lp.objective[static_cast<std::size_t>(j)] =
          Rat(static_cast<long long>(rng() % 11) - 5);
      lp.set_lower(j, Rat(-5));
      lp.set_upper(j, Rat(5));
    }
    const int rows = static_cast<int>(rng() % 7);
    for (int r = 0; r < rows; ++r) {
      std::vector<Rat> row;
      for (int j = 0; j < nv; ++j) {
        row.emplace_back(static_cast<long long>(rng() % 7) - 3);
      }
      const auto rel = static_cast<Relation>(rng() % 3);
      lp.add_constraint(std::move(row), rel,
                        Rat(static_cast<long long>(rng() % 13) - 4));
    }

    const LpResult result = solve_max(lp);
    const auto oracle_value = oracle::vertex_opt(lp);

    if (result.status == LpStatus::Optimal) {
      ++optima;
      CHECK(oracle::satisfies(lp, result.point));
      // value really is objective · point
      Rat dot;
      for (int j = 0; j < nv; ++j) {
        dot += lp.objective[static_cast<std::size_t>(j)] *
               result.point[static_cast<std::size_t>(j)];
      }
      CHECK(dot == result.value);
      // dense vertex enumeration agrees on the optimum
      REQUIRE(oracle_value.has_value());
      CHECK(*oracle_value == result.value);
    } else {
      // boxed variables: infeasible is the only alternative
      CHECK(result.status == LpStatus::Infeasible);
      CHECK_FALSE(oracle_value.has_value());
    }

    // determinism, bit for bit
    const LpResult again = solve_max(lp);
    CHECK(again.status == result.status);
    CHECK(again.point == result.point);
    CHECK(again.value == result.value);
  }
  CHECK(optima > 50);  // the corpus actually exercises the optimal path
}

TEST_CASE("lex max-min splits a shared budget evenly") {
  LinearProgram lp(2);
  lp.add_constraint({Rat(1), Rat(1)}, Relation::Equal, Rat(1));
  for (int j = 0; j < 2; ++j) {
    lp.set_lower(j, Rat(0));
    lp.set_upper(j, Rat(1));
  }
  const std::vector<int> targets{0, 1};
  const LexMaxMinResult r = lex_max_min(lp, targets);
  CHECK(r.target_values == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(r.rounds == 1);
}

TEST_CASE("lex max-min on the five-bid scaling program") {
  const LinearProgram lp = example2_scaling_program();

  // Independent route: enumerate the polytope's vertices and take the
  // sorted-lexicographic maximum; the optimum of this program is a vertex
  // (five tight rows at four variables).
  const auto vertices = oracle::enumerate_vertices(lp);
  REQUIRE_FALSE(vertices.empty());
  std::vector<Rat> best = vertices.front();
  for (const auto& v : vertices) {
    if (lex_geq(v, best)) {
      best = v;
    }
  }
  // Frozen oracle result: factors 5/6, 1/2, 5/6, 1/2 for (s1, s2, d2, d3).
  const std::vector<Rat> expected{Rat(5, 6), Rat(1, 2), Rat(5, 6), Rat(1, 2)};
  CHECK(best == expected);

  const std::vector<int> targets{0, 1, 2, 3};
  const LexMaxMinResult r = lex_max_min(lp, targets);
  CHECK(r.target_values == expected);
  CHECK(r.rounds <= 4);

  // No feasible point sorts lexicographically above the result.
  std::vector<std::vector<Rat>> probes = vertices;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    std::vector<Rat> mid(vertices[i].size());
    for (std::size_t k = 0; k < mid.size(); ++k) {
      mid[k] = (vertices[i][k] + vertices[i + 1][k]) / Rat(2);
    }
    probes.push_back(std::move(mid));
  }
  for (const auto& p : probes) {
    CHECK(oracle::satisfies(lp, p));
    CHECK(lex_geq(r.target_values, p));
  }
}

TEST_CASE("lex max-min with every target forced by equalities") {
  LinearProgram lp(2);
  lp.add_constraint({Rat(1), Rat(0)}, Relation::Equal, Rat(3));
  lp.add_constraint({Rat(0), Rat(1)}, Relation::Equal, Rat(4));
  const std::vector<int> targets{0, 1};
  const LexMaxMinResult r = lex_max_min(lp, targets);
  CHECK(r.target_values == std::vector<Rat>{Rat(3), Rat(4)});
  CHECK(r.point == std::vector<Rat>{Rat(3), Rat(4)});
}

TEST_CASE("lex max-min error paths") {
  SUBCASE("infeasible base") {
    LinearProgram lp(1);
    lp.add_constraint({Rat(1)}, Relation::GreaterEq, Rat(1));
    lp.add_constraint({Rat(1)}, Relation::LessEq, Rat(0));
    const std::vector<int> targets{0};
    CHECK_THROWS_AS(lex_max_min(lp, targets), InfeasibleProgram);
  }
  SUBCASE("unbounded floor") {
    LinearProgram lp(1);
    const std::vector<int> targets{0};
    CHECK_THROWS_AS(lex_max_min(lp, targets), UnboundedLexTarget);
  }
  SUBCASE("bad targets") {
    LinearProgram lp(1);
    const std::vector<int> none{};
    CHECK_THROWS_AS(lex_max_min(lp, none), DomainError);
    const std::vector<int> out{1};
    CHECK_THROWS_AS(lex_max_min(lp, out), DomainError);
  }
}

TEST_CASE("lex max-min dominates sampled feasible points on random programs") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = 2 + static_cast<int>(rng() % 3);
    LinearProgram lp(nv);
    for (int j = 0; j < nv; ++j) {
      lp.set_lower(j, Rat(0));
      lp.set_upper(j, Rat(static_cast<long long>(1 + rng() % 5)));
    }
    std::vector<Rat> row;
    for (int j = 0; j < nv; ++j) {
      row.emplace_back(static_cast<long long>(1 + rng() % 3));
    }
    lp.add_constraint(std::move(row), Relation::LessEq,
                      Rat(static_cast<long long>(2 + rng() % 8)));

    std::vector<int> targets(static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j) {
      targets[static_cast<std::size_t>(j)] = j;
    }
    const LexMaxMinResult r = lex_max_min(lp, targets);
    CHECK(r.rounds <= nv);
    CHECK(oracle::satisfies(lp, r.point));
    for (const auto& v : oracle::enumerate_vertices(lp)) {
      CHECK(lex_geq(r.target_values, v));
    }
  }
}
