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

#ifndef COOPSHARE_VERIFICATION_HPP
#define COOPSHARE_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coopshare/game.hpp"
#include "coopshare/json_io.hpp"
#include "coopshare/lorenz.hpp"
#include "coopshare/rational.hpp"

namespace coopshare {

// Executable statements of the solver equivalences and ordering lemmas the
// library is built around. Every verdict rests on exact rational
// comparisons; a Fail always carries a witness that replays in isolation.

enum class Verdict { Pass, Fail, Skipped };

const char* verdict_name(Verdict v);

struct CheckEntry {
  std::string game_id;
  std::string check;
  Verdict verdict = Verdict::Skipped;
  std::string detail;
  Json witness;  // game + vectors on Fail

  Json to_json() const;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int games = 0;
  std::vector<CheckEntry> entries;

  int count(Verdict v) const;
  int failures() const { return count(Verdict::Fail); }
  Json to_json() const;
  /// One line per entry plus a summary; verbose lists Passes too.
  std::string render_text(bool verbose) const;
};

/// Main equivalence: individually scaled payments at budget v(N) equal the
/// egalitarian allocation weighted by the Vickrey payments. Skipped unless
/// the game is convex with a non-empty core and all vp_i > 0.
CheckEntry verify_isv_wea(const TuGame& game, const std::string& game_id);

/// vp_i equals the LP maximum of x_i over the core, for every player.
/// Skipped when the core is empty.
CheckEntry verify_vickrey_is_core_max(const TuGame& game,
                                      const std::string& game_id);

/// Egalitarian allocation with unit weights equals the lexicographic
/// max-min assignment over the core constraint system. Skipped on
/// non-convex input.
CheckEntry verify_ea_lexmax(const TuGame& game, const std::string& game_id);

struct LemmaWitness {
  Verdict verdict = Verdict::Skipped;
  std::optional<int> index;
};

/// When y w-Lorenz-dominates x there is an index j with y_j > x_j.
/// Returns the smallest such j; Skipped when domination does not hold.
LemmaWitness check_lemma_strict_index(std::span<const Rat> x,
                                      std::span<const Rat> y,
                                      const WeightVector& w);

/// Strengthened index: y_j > x_j and additionally
/// y_i/w_i >= min(x_i/w_i, x_j/w_j) for every i.
LemmaWitness check_lemma_min_index(std::span<const Rat> x,
                                   std::span<const Rat> y,
                                   const WeightVector& w);

/// Under y_j > x_j and y_i >= min(x_i, x_j) for all i, the midpoint
/// (x + y)/2 sorts lexicographically above x. Skipped when the hypothesis
/// fails.
Verdict check_midpoint_lex(std::span<const Rat> x, std::span<const Rat> y,
                           int j);

struct SuiteSpec {
  int games = 200;
  int min_players = 3;
  int max_players = 7;
  std::uint64_t seed = 1;
  /// Core points sampled per game for the domination spot checks.
  int core_samples = 20;
  /// Constructed vector pairs per ordering lemma.
  int lemma_pairs = 1000;
  /// The lex-max cross-check runs only up to this player count.
  int lexmax_player_cap = 6;
  /// Include the worked exchange/3-player instances alongside the corpus.
  bool include_examples = true;
  bool parallel = true;
};

/// Generates a convex corpus from the seed and runs every check above,
/// plus the uniqueness summary, the literal budget-only-program comparison,
/// and the budget-balance / coalitional-rationality violation demos of the
/// exchange examples.
VerificationReport run_suite(const SuiteSpec& spec);

// The worked instances the test-suite and demos revolve around.
ExchangeInstance example1_exchange();  // one supply at 10, demands 12 and 15
ExchangeInstance example2_exchange();  // adds a supply at 12 and a demand 13
TuGame example3_game();                // the worked 3-player game

}  // namespace coopshare

#endif  // COOPSHARE_VERIFICATION_HPP
