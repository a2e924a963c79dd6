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

#ifndef COOPSHARE_LORENZ_HPP
#define COOPSHARE_LORENZ_HPP

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "coopshare/rational.hpp"

namespace coopshare {

/// Strictly positive player weights with their cached sum.
class WeightVector {
 public:
  /// Throws ZeroWeight when any entry is zero or negative.
  explicit WeightVector(std::vector<Rat> entries);

  static WeightVector unit(int n) {
    return WeightVector(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rat>& entries() const { return entries_; }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  /// W, the exact sum of all entries.
  const Rat& total() const { return total_; }

 private:
  std::vector<Rat> entries_;
  Rat total_;
};

/// Piecewise-linear weighted Lorenz curve: entries sorted by payoff-to-weight
/// ratio, breakpoints at the cumulative (weight, payoff) prefix sums from
/// (0, 0) up to (W, sum of payoffs).
struct LorenzCurve {
  std::vector<std::pair<Rat, Rat>> breakpoints;
  /// The ordering used; ties in x_i/w_i broken by ascending original index.
  std::vector<int> sort_permutation;

  const Rat& total_weight() const { return breakpoints.back().first; }
  const Rat& total_value() const { return breakpoints.back().second; }
};

/// Builds the w-Lorenz curve of x. Throws DimensionError on length mismatch.
LorenzCurve build_curve(std::span<const Rat> x, const WeightVector& w);

/// Evaluates the curve at p via exact interpolation between the surrounding
/// breakpoints. Throws DomainError for p outside [0, W].
Rat eval_curve(const LorenzCurve& curve, const Rat& p);

enum class Dominance { Dominates, DominatedBy, Equal, Incomparable };

/// Compares the curves of x and y at the merged breakpoint set of both;
/// since both curves are piecewise linear with kinks only at their own
/// breakpoints, that finite comparison decides the ordering everywhere.
Dominance dominates(std::span<const Rat> x, std::span<const Rat> y,
                    const WeightVector& w);

/// Compares the non-decreasingly sorted scaled vectors (x_i/w_i) and
/// (y_i/w_i) lexicographically.
std::strong_ordering lex_compare_scaled(std::span<const Rat> x,
                                        std::span<const Rat> y,
                                        const WeightVector& w);

/// Sorted image of (x_i / w_i), the comparison key of lex_compare_scaled.
std::vector<Rat> sorted_scaled(std::span<const Rat> x, const WeightVector& w);

}  // namespace coopshare

#endif  // COOPSHARE_LORENZ_HPP
