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
#include "coopshare/lorenz.hpp"

using namespace coopshare;

namespace {

std::vector<Rat> rats(std::initializer_list<Rat> values) { return values; }

std::vector<Rat> random_vector(std::mt19937_64& rng, int n, long long lo,
                               long long hi) {
  std::vector<Rat> v;
  for (int i = 0; i < n; ++i) {
    v.emplace_back(lo + static_cast<long long>(
                            rng() % static_cast<std::uint64_t>(hi - lo + 1)),
                   1 + static_cast<long long>(rng() % 4));
  }
  return v;
}

}  // namespace

TEST_CASE("weights must be strictly positive") {
  CHECK_THROWS_AS(WeightVector(rats({Rat(1), Rat(0)})), ZeroWeight);
  CHECK_THROWS_AS(WeightVector(rats({Rat(-1, 2)})), ZeroWeight);
  CHECK(WeightVector(rats({Rat(1, 2), Rat(3)})).total() == Rat(7, 2));
}

TEST_CASE("curve construction") {
  SUBCASE("already sorted under unit weights") {
    const auto c = build_curve(rats({Rat(1), Rat(2), Rat(3)}),
                               WeightVector::unit(3));
    const std::vector<std::pair<Rat, Rat>> expected{
        {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(3)}, {Rat(3), Rat(6)}};
    CHECK(c.breakpoints == expected);
    CHECK(c.sort_permutation == std::vector<int>{0, 1, 2});
  }
  SUBCASE("sorting reverses a decreasing vector") {
    const auto c = build_curve(rats({Rat(3), Rat(1)}), WeightVector::unit(2));
    const std::vector<std::pair<Rat, Rat>> expected{
        {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(4)}};
    CHECK(c.breakpoints == expected);
    CHECK(c.sort_permutation == std::vector<int>{1, 0});
  }
  SUBCASE("equal ratios keep the original order") {
    // payoffs (5/2, 7/2, 1) against weights (5, 7, 2): every ratio is 1/2
    const auto c = build_curve(rats({Rat(5, 2), Rat(7, 2), Rat(1)}),
                               WeightVector(rats({Rat(5), Rat(7), Rat(2)})));
    const std::vector<std::pair<Rat, Rat>> expected{{Rat(0), Rat(0)},
                                                    {Rat(5), Rat(5, 2)},
                                                    {Rat(12), Rat(6)},
                                                    {Rat(14), Rat(7)}};
    CHECK(c.breakpoints == expected);
    CHECK(c.sort_permutation == std::vector<int>{0, 1, 2});
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(build_curve(rats({Rat(1)}), WeightVector::unit(2)),
                    DimensionError);
  }
}

TEST_CASE("curve evaluation") {
  const auto c =
      build_curve(rats({Rat(1), Rat(2), Rat(3)}), WeightVector::unit(3));
  CHECK(eval_curve(c, Rat(0)) == Rat(0));
  CHECK(eval_curve(c, Rat(3, 2)) == Rat(2));  // 1 + (1/2) * 2
  CHECK(eval_curve(c, Rat(3)) == Rat(6));
  CHECK(eval_curve(c, Rat(1)) == Rat(1));
  CHECK_THROWS_AS(eval_curve(c, Rat(-1, 2)), DomainError);
  CHECK_THROWS_AS(eval_curve(c, Rat(7, 2)), DomainError);
}

TEST_CASE("total payoff is conserved at p = W") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto x = random_vector(rng, n, -6, 12);
    const WeightVector w(random_vector(rng, n, 1, 5));
    const auto c = build_curve(x, w);
    Rat total;
    for (const Rat& v : x) {
      total += v;
    }
    CHECK(eval_curve(c, w.total()) == total);
  }
}

TEST_CASE("domination verdicts") {
  const WeightVector unit2 = WeightVector::unit(2);
  CHECK(dominates(rats({Rat(3), Rat(3)}), rats({Rat(2), Rat(4)}), unit2) ==
        Dominance::Dominates);
  CHECK(dominates(rats({Rat(2), Rat(4)}), rats({Rat(3), Rat(3)}), unit2) ==
        Dominance::DominatedBy);
  CHECK(dominates(rats({Rat(1), Rat(4)}), rats({Rat(1), Rat(4)}), unit2) ==
        Dominance::Equal);
  CHECK(dominates(rats({Rat(1), Rat(4)}), rats({Rat(2), Rat(2)}), unit2) ==
        Dominance::Incomparable);
  // permuted payoffs have the same curve
  CHECK(dominates(rats({Rat(4), Rat(1)}), rats({Rat(1), Rat(4)}), unit2) ==
        Dominance::Equal);
}

TEST_CASE("domination is antisymmetric and scale covariant") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto x = random_vector(rng, n, -5, 10);
    const auto y = random_vector(rng, n, -5, 10);
    const WeightVector w(random_vector(rng, n, 1, 4));

    const Dominance xy = dominates(x, y, w);
    const Dominance yx = dominates(y, x, w);
    switch (xy) {
      case Dominance::Dominates:
        CHECK(yx == Dominance::DominatedBy);
        break;
      case Dominance::DominatedBy:
        CHECK(yx == Dominance::Dominates);
        break;
      case Dominance::Equal:
        CHECK(yx == Dominance::Equal);
        CHECK(sorted_scaled(x, w) == sorted_scaled(y, w));
        break;
      case Dominance::Incomparable:
        CHECK(yx == Dominance::Incomparable);
        break;
    }

    const Rat lambda(1 + static_cast<long long>(rng() % 5),
                     1 + static_cast<long long>(rng() % 3));
    std::vector<Rat> lx;
    std::vector<Rat> ly;
    for (int i = 0; i < n; ++i) {
      lx.push_back(lambda * x[static_cast<std::size_t>(i)]);
      ly.push_back(lambda * y[static_cast<std::size_t>(i)]);
    }
    CHECK(dominates(lx, ly, w) == xy);
  }
}

TEST_CASE("tie-break independence of the curve geometry") {
  // Any valid sorting permutation yields the same polyline. Compare the
  // built curve against one using a different (still ratio-sorted) order
  // by evaluating both at many points.
  const auto x = rats({Rat(2), Rat(1), Rat(4), Rat(2)});
  const WeightVector w(rats({Rat(2), Rat(1), Rat(4), Rat(2)}));
  // ratios are all 1; every permutation is a valid sort order
  const auto c = build_curve(x, w);
  LorenzCurve manual;
  manual.sort_permutation = {3, 2, 1, 0};
  manual.breakpoints.emplace_back(Rat(0), Rat(0));
  Rat cw;
  Rat cv;
  for (int idx : manual.sort_permutation) {
    cw += w[static_cast<std::size_t>(idx)];
    cv += x[static_cast<std::size_t>(idx)];
    manual.breakpoints.emplace_back(cw, cv);
  }
  for (int k = 0; k <= 18; ++k) {
    const Rat p(k, 2);
    CHECK(eval_curve(c, p) == eval_curve(manual, p));
  }
}

TEST_CASE("lexicographic comparison of scaled vectors") {
  const WeightVector unit2 = WeightVector::unit(2);
  CHECK(lex_compare_scaled(rats({Rat(1), Rat(2)}), rats({Rat(2), Rat(1)}),
                           unit2) == std::strong_ordering::equal);

  const WeightVector w(rats({Rat(5), Rat(7), Rat(2)}));
  CHECK(lex_compare_scaled(rats({Rat(5, 2), Rat(7, 2), Rat(1)}),
                           rats({Rat(3), Rat(3), Rat(1)}),
                           w) == std::strong_ordering::greater);

  const WeightVector unit3 = WeightVector::unit(3);
  CHECK(lex_compare_scaled(rats({Rat(0), Rat(0), Rat(0)}),
                           rats({Rat(1), Rat(2), Rat(1)}),
                           unit3) == std::strong_ordering::less);
}
