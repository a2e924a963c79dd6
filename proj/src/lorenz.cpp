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

#include "coopshare/lorenz.hpp"

#include <algorithm>
#include <numeric>

#include "coopshare/errors.hpp"

namespace coopshare {

WeightVector::WeightVector(std::vector<Rat> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_positive()) {
      throw ZeroWeight("weight " + std::to_string(i) +
                       " must be strictly positive, got " +
                       entries_[i].str());
    }
    total_ += entries_[i];
  }
}

namespace {

void require_same_length(std::span<const Rat> x, const WeightVector& w) {
  if (static_cast<int>(x.size()) != w.size()) {
    throw DimensionError("vector length " + std::to_string(x.size()) +
                         " does not match weight count " +
                         std::to_string(w.size()));
  }
}

}  // namespace

LorenzCurve build_curve(std::span<const Rat> x, const WeightVector& w) {
  require_same_length(x, w);
  const std::size_t n = x.size();

  LorenzCurve curve;
  curve.sort_permutation.resize(n);
  std::iota(curve.sort_permutation.begin(), curve.sort_permutation.end(), 0);
  std::sort(curve.sort_permutation.begin(), curve.sort_permutation.end(),
            [&](int a, int b) {
              // x_a/w_a < x_b/w_b without dividing; weights are positive.
              const auto ai = static_cast<std::size_t>(a);
              const auto bi = static_cast<std::size_t>(b);
              const Rat lhs = x[ai] * w[bi];
              const Rat rhs = x[bi] * w[ai];
              if (lhs != rhs) {
                return lhs < rhs;
              }
              return a < b;
            });

  curve.breakpoints.reserve(n + 1);
  curve.breakpoints.emplace_back(Rat(0), Rat(0));
  Rat cum_weight;
  Rat cum_value;
  for (int idx : curve.sort_permutation) {
    const auto i = static_cast<std::size_t>(idx);
    cum_weight += w[i];
    cum_value += x[i];
    curve.breakpoints.emplace_back(cum_weight, cum_value);
  }
  return curve;
}

Rat eval_curve(const LorenzCurve& curve, const Rat& p) {
  if (p.is_negative() || p > curve.total_weight()) {
    throw DomainError("curve evaluated outside [0, W] at p = " + p.str());
  }
  // Last breakpoint with first coordinate <= p.
  std::size_t k = 0;
  while (k + 1 < curve.breakpoints.size() &&
         curve.breakpoints[k + 1].first <= p) {
    ++k;
  }
  const auto& [pk, vk] = curve.breakpoints[k];
  if (p == pk) {
    return vk;
  }
  const auto& [pn, vn] = curve.breakpoints[k + 1];
  return vk + (p - pk) * (vn - vk) / (pn - pk);
}

Dominance dominates(std::span<const Rat> x, std::span<const Rat> y,
                    const WeightVector& w) {
  require_same_length(x, w);
  require_same_length(y, w);

  const LorenzCurve cx = build_curve(x, w);
  const LorenzCurve cy = build_curve(y, w);

  std::vector<Rat> grid;
  grid.reserve(cx.breakpoints.size() + cy.breakpoints.size());
  for (const auto& bp : cx.breakpoints) {
    grid.push_back(bp.first);
  }
  for (const auto& bp : cy.breakpoints) {
    grid.push_back(bp.first);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  bool x_above = false;
  bool y_above = false;
  for (const Rat& p : grid) {
    const Rat vx = eval_curve(cx, p);
    const Rat vy = eval_curve(cy, p);
    if (vx > vy) {
      x_above = true;
    } else if (vy > vx) {
      y_above = true;
    }
  }
  if (x_above && y_above) {
    return Dominance::Incomparable;
  }
  if (x_above) {
    return Dominance::Dominates;
  }
  if (y_above) {
    return Dominance::DominatedBy;
  }
  return Dominance::Equal;
}

std::vector<Rat> sorted_scaled(std::span<const Rat> x, const WeightVector& w) {
  require_same_length(x, w);
  std::vector<Rat> scaled;
  scaled.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    scaled.push_back(x[i] / w[i]);
  }
  std::sort(scaled.begin(), scaled.end());
  return scaled;
}

std::strong_ordering lex_compare_scaled(std::span<const Rat> x,
                                        std::span<const Rat> y,
                                        const WeightVector& w) {
  const std::vector<Rat> sx = sorted_scaled(x, w);
  const std::vector<Rat> sy = sorted_scaled(y, w);
  for (std::size_t i = 0; i < sx.size(); ++i) {
    if (sx[i] < sy[i]) {
      return std::strong_ordering::less;
    }
    if (sx[i] > sy[i]) {
      return std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace coopshare
