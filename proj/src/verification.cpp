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

#include "coopshare/verification.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "coopshare/core.hpp"
#include "coopshare/egalitarian.hpp"
#include "coopshare/errors.hpp"
#include "coopshare/exact_lp.hpp"
#include "coopshare/payments.hpp"

namespace coopshare {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIP";
  }
  return "?";
}

Json CheckEntry::to_json() const {
  Json doc{{"game", game_id},
           {"check", check},
           {"verdict", verdict_name(verdict)},
           {"detail", detail}};
  if (!witness.is_null()) {
    doc["witness"] = witness;
  }
  return doc;
}

int VerificationReport::count(Verdict v) const {
  int c = 0;
  for (const auto& entry : entries) {
    if (entry.verdict == v) {
      ++c;
    }
  }
  return c;
}

Json VerificationReport::to_json() const {
  Json checks = Json::array();
  for (const auto& entry : entries) {
    checks.push_back(entry.to_json());
  }
  return Json{{"seed", seed},
              {"games", games},
              {"pass", count(Verdict::Pass)},
              {"skipped", count(Verdict::Skipped)},
              {"failures", failures()},
              {"checks", checks}};
}

std::string VerificationReport::render_text(bool verbose) const {
  std::ostringstream os;
  for (const auto& entry : entries) {
    if (!verbose && entry.verdict == Verdict::Pass) {
      continue;
    }
    os << '[' << verdict_name(entry.verdict) << "] " << entry.game_id << ' '
       << entry.check;
    if (!entry.detail.empty()) {
      os << " — " << entry.detail;
    }
    os << '\n';
  }
  os << "suite: " << games << " corpus games, " << count(Verdict::Pass)
     << " pass, " << count(Verdict::Skipped) << " skipped, " << failures()
     << " fail (seed " << seed << ")\n";
  return os.str();
}

// --- worked instances --------------------------------------------------------

ExchangeInstance example1_exchange() {
  ExchangeInstance e;
  e.supplies = {{"s1", Rat(10)}};
  e.demands = {{"d1", Rat(12)}, {"d2", Rat(15)}};
  return e;
}

ExchangeInstance example2_exchange() {
  ExchangeInstance e;
  e.supplies = {{"s1", Rat(10)}, {"s2", Rat(12)}};
  e.demands = {{"d1", Rat(12)}, {"d2", Rat(15)}, {"d3", Rat(13)}};
  return e;
}

TuGame example3_game() {
  std::vector<Rat> values(8);
  values[Coalition::of({0, 1}).mask] = 5;
  values[Coalition::of({1, 2}).mask] = 2;
  values[Coalition::of({0, 1, 2}).mask] = 7;
  return TuGame(3, std::move(values), {"1", "2", "3"});
}

// --- single-game checks ------------------------------------------------------

namespace {

std::string vec_str(std::span<const Rat> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      s += ", ";
    }
    s += v[i].str();
  }
  return s + ")";
}

Json pair_witness(const TuGame& game, const char* lhs_name,
                  std::span<const Rat> lhs, const char* rhs_name,
                  std::span<const Rat> rhs) {
  Json w{{"game", game_to_json(game)}};
  Json l = Json::array();
  for (const Rat& v : lhs) {
    l.push_back(v.str());
  }
  Json r = Json::array();
  for (const Rat& v : rhs) {
    r.push_back(v.str());
  }
  w[lhs_name] = l;
  w[rhs_name] = r;
  return w;
}

}  // namespace

CheckEntry verify_isv_wea(const TuGame& game, const std::string& game_id) {
  CheckEntry entry{game_id, "theorem:isv_eq_wea", Verdict::Skipped, "", {}};
  if (!is_convex(game).convex()) {
    entry.detail = "hypothesis unmet: game is not convex";
    return entry;
  }
  if (!core_nonempty(game)) {
    entry.detail = "hypothesis unmet: empty core";
    return entry;
  }
  const Allocation vp = vickrey(game);
  for (int i = 0; i < game.player_count(); ++i) {
    if (!vp[static_cast<std::size_t>(i)].is_positive()) {
      entry.detail = "hypothesis unmet: vp_" + std::to_string(i + 1) +
                     " = " + vp[static_cast<std::size_t>(i)].str();
      return entry;
    }
  }

  const ScalingResult scaled = isv(game, default_budget(game));
  const EaTrace trace = wea(game, WeightVector(vp.payoffs));
  if (scaled.payments == trace.final) {
    entry.verdict = Verdict::Pass;
    entry.detail = "both routes give " + vec_str(scaled.payments.payoffs);
  } else {
    entry.verdict = Verdict::Fail;
    entry.detail = "isv " + vec_str(scaled.payments.payoffs) + " != wea " +
                   vec_str(trace.final.payoffs);
    entry.witness = pair_witness(game, "isv", scaled.payments.payoffs, "wea",
                                 trace.final.payoffs);
  }
  return entry;
}

CheckEntry verify_vickrey_is_core_max(const TuGame& game,
                                      const std::string& game_id) {
  CheckEntry entry{game_id, "theorem1:vp_is_core_max", Verdict::Skipped, "",
                   {}};
  if (!core_nonempty(game)) {
    entry.detail = "hypothesis unmet: empty core";
    return entry;
  }
  const Allocation vp = vickrey(game);
  for (int i = 0; i < game.player_count(); ++i) {
    const Rat lp_max = max_core_payoff(game, i);
    if (lp_max != vp[static_cast<std::size_t>(i)]) {
      entry.verdict = Verdict::Fail;
      entry.detail = "player " + std::to_string(i + 1) + ": core max " +
                     lp_max.str() + " != vp " +
                     vp[static_cast<std::size_t>(i)].str();
      entry.witness = pair_witness(game, "vickrey", vp.payoffs, "core_max",
                                   std::vector<Rat>{lp_max});
      return entry;
    }
  }
  entry.verdict = Verdict::Pass;
  entry.detail = "all " + std::to_string(game.player_count()) +
                 " LP maxima match " + vec_str(vp.payoffs);
  return entry;
}

CheckEntry verify_ea_lexmax(const TuGame& game, const std::string& game_id) {
  CheckEntry entry{game_id, "lemma4:ea_is_lex_max", Verdict::Skipped, "", {}};
  if (!is_convex(game).convex()) {
    entry.detail = "hypothesis unmet: game is not convex";
    return entry;
  }
  const EaTrace trace = wea(game, WeightVector::unit(game.player_count()));

  std::vector<int> targets(static_cast<std::size_t>(game.player_count()));
  for (std::size_t i = 0; i < targets.size(); ++i) {
    targets[i] = static_cast<int>(i);
  }
  const LexMaxMinResult lex = lex_max_min(core_program(game), targets);

  if (trace.final.payoffs == lex.target_values) {
    entry.verdict = Verdict::Pass;
    entry.detail = "both routes give " + vec_str(lex.target_values);
  } else {
    entry.verdict = Verdict::Fail;
    entry.detail = "ea " + vec_str(trace.final.payoffs) + " != lex max-min " +
                   vec_str(lex.target_values);
    entry.witness = pair_witness(game, "ea", trace.final.payoffs, "lex",
                                 lex.target_values);
  }
  return entry;
}

// --- ordering lemmas ---------------------------------------------------------

LemmaWitness check_lemma_strict_index(std::span<const Rat> x,
                                      std::span<const Rat> y,
                                      const WeightVector& w) {
  LemmaWitness result;
  if (dominates(y, x, w) != Dominance::Dominates) {
    return result;  // Skipped
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (y[j] > x[j]) {
      result.verdict = Verdict::Pass;
      result.index = static_cast<int>(j);
      return result;
    }
  }
  result.verdict = Verdict::Fail;
  return result;
}

LemmaWitness check_lemma_min_index(std::span<const Rat> x,
                                   std::span<const Rat> y,
                                   const WeightVector& w) {
  LemmaWitness result;
  if (dominates(y, x, w) != Dominance::Dominates) {
    return result;  // Skipped
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(y[j] > x[j])) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      const Rat scaled_y = y[i] / w[i];
      const Rat bound = std::min(x[i] / w[i], x[j] / w[j]);
      ok = scaled_y >= bound;
    }
    if (ok) {
      result.verdict = Verdict::Pass;
      result.index = static_cast<int>(j);
      return result;
    }
  }
  result.verdict = Verdict::Fail;
  return result;
}

Verdict check_midpoint_lex(std::span<const Rat> x, std::span<const Rat> y,
                           int j) {
  const auto ju = static_cast<std::size_t>(j);
  if (x.size() != y.size() || ju >= x.size()) {
    throw DimensionError("midpoint check: mismatched vectors or bad index");
  }
  if (!(y[ju] > x[ju])) {
    return Verdict::Skipped;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < std::min(x[i], x[ju])) {
      return Verdict::Skipped;
    }
  }
  std::vector<Rat> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = (x[i] + y[i]) / Rat(2);
  }
  const WeightVector unit = WeightVector::unit(static_cast<int>(x.size()));
  return lex_compare_scaled(z, x, unit) == std::strong_ordering::greater
             ? Verdict::Pass
             : Verdict::Fail;
}

// --- suite -------------------------------------------------------------------

namespace {

Rat small_rat(std::mt19937_64& rng, long long num_lo, long long num_hi,
              long long den_hi) {
  const long long span = num_hi - num_lo + 1;
  return Rat(num_lo + static_cast<long long>(rng() % span),
             1 + static_cast<long long>(rng() % den_hi));
}

struct VectorPair {
  std::vector<Rat> x;
  std::vector<Rat> y;
  std::vector<Rat> w;
};

// Pigou–Dalton-style construction: start from x and move payoff from a
// high-ratio entry to a low-ratio entry (capped at the ratio-equalizing
// amount). The result almost always w-Lorenz-dominates x; the caller
// filters with dominates().
std::optional<VectorPair> dominating_candidate(std::mt19937_64& rng) {
  const int n = 2 + static_cast<int>(rng() % 5);
  VectorPair pair;
  pair.w.reserve(static_cast<std::size_t>(n));
  pair.x.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pair.w.push_back(small_rat(rng, 1, 5, 3));
    pair.x.push_back(small_rat(rng, -8, 16, 4));
  }
  pair.y = pair.x;

  const int transfers = 1 + static_cast<int>(rng() % 3);
  bool moved = false;
  for (int t = 0; t < transfers; ++t) {
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && pair.y[static_cast<std::size_t>(i)] *
                              pair.w[static_cast<std::size_t>(j)] <
                          pair.y[static_cast<std::size_t>(j)] *
                              pair.w[static_cast<std::size_t>(i)]) {
          candidates.emplace_back(i, j);  // ratio_i < ratio_j
        }
      }
    }
    if (candidates.empty()) {
      break;
    }
    const auto [lo, hi] = candidates[rng() % candidates.size()];
    const auto li = static_cast<std::size_t>(lo);
    const auto hj = static_cast<std::size_t>(hi);
    // Largest transfer that keeps ratio_lo <= ratio_hi.
    const Rat cap = (pair.y[hj] * pair.w[li] - pair.y[li] * pair.w[hj]) /
                    (pair.w[li] + pair.w[hj]);
    const Rat amount =
        cap * Rat(1 + static_cast<long long>(rng() % 4), 4);  // in (0, cap]
    pair.y[li] += amount;
    pair.y[hj] -= amount;
    moved = true;
  }
  if (!moved) {
    return std::nullopt;
  }
  return pair;
}

// Vectors meeting the midpoint lemma's hypothesis by construction.
VectorPair midpoint_candidate(std::mt19937_64& rng, int& index_out) {
  const int n = 2 + static_cast<int>(rng() % 5);
  VectorPair pair;
  for (int i = 0; i < n; ++i) {
    pair.x.push_back(small_rat(rng, -8, 16, 4));
  }
  const int j = static_cast<int>(rng() % n);
  index_out = j;
  pair.y.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    if (i == j) {
      pair.y[iu] = pair.x[iu] + small_rat(rng, 1, 8, 3);
    } else {
      const Rat base = std::min(pair.x[iu], pair.x[static_cast<std::size_t>(j)]);
      pair.y[iu] = base + small_rat(rng, 0, 6, 3);
    }
  }
  return pair;
}

CheckEntry theorem2_core_entry(const TuGame& game, const std::string& id,
                               const EaTrace& trace, const char* weight_kind) {
  CheckEntry entry{id, "theorem2:wea_in_core", Verdict::Skipped, "", {}};
  const CoreVerdict verdict = check_core(game, trace.final);
  if (verdict.in_core) {
    entry.verdict = Verdict::Pass;
    entry.detail = std::string("wea(") + weight_kind + ") " +
                   vec_str(trace.final.payoffs) + " lies in the core";
  } else {
    entry.verdict = Verdict::Fail;
    entry.detail = std::string("wea(") + weight_kind +
                   ") violates the core; budget gap " +
                   verdict.budget_gap.str() +
                   (verdict.violated
                        ? ", coalition " + game.coalition_name(*verdict.violated)
                        : "");
    entry.witness = pair_witness(game, "wea", trace.final.payoffs, "unused",
                                 std::vector<Rat>{});
  }
  return entry;
}

CheckEntry theorem2_lorenz_entry(const TuGame& game, const std::string& id,
                                 const EaTrace& trace, const WeightVector& w,
                                 const char* weight_kind, int samples,
                                 std::uint64_t sample_seed) {
  CheckEntry entry{id, "theorem2:wea_lorenz_max", Verdict::Skipped, "", {}};
  const std::vector<Allocation> points = sample_core(game, samples, sample_seed);
  for (const Allocation& point : points) {
    const Dominance verdict = dominates(trace.final.payoffs, point.payoffs, w);
    if (verdict == Dominance::DominatedBy || verdict == Dominance::Incomparable) {
      entry.verdict = Verdict::Fail;
      entry.detail = std::string("wea(") + weight_kind +
                     ") does not dominate core point " +
                     vec_str(point.payoffs);
      entry.witness =
          pair_witness(game, "wea", trace.final.payoffs, "point",
                       point.payoffs);
      return entry;
    }
  }
  entry.verdict = Verdict::Pass;
  entry.detail = std::string("wea(") + weight_kind + ") dominates all " +
                 std::to_string(points.size()) + " sampled core points";
  return entry;
}

CheckEntry literal_program_entry(const TuGame& game, const std::string& id) {
  CheckEntry entry{id, "eq1_literal:equals_esv", Verdict::Skipped, "", {}};
  const Allocation vp = vickrey(game);
  if (vp.sum().is_zero()) {
    entry.detail = "all Vickrey payments are zero";
    return entry;
  }
  const Rat budget = default_budget(game);
  if (budget.is_negative() || budget > vp.sum()) {
    entry.detail = "budget outside the reachable range";
    return entry;
  }
  const ScalingResult literal = isv_budget_only(game, budget);
  const ScalingResult equal = esv(game, budget);
  bool same = literal.payments == equal.payments;
  for (int i = 0; same && i < game.player_count(); ++i) {
    if (vp[static_cast<std::size_t>(i)].is_positive()) {
      same = literal.alphas[static_cast<std::size_t>(i)] ==
             equal.alphas[static_cast<std::size_t>(i)];
    }
  }
  if (same) {
    entry.verdict = Verdict::Pass;
    entry.detail = "budget-only program collapses to the common factor " +
                   (vp.sum().is_zero() ? std::string("1")
                                       : (budget / vp.sum()).str());
  } else {
    entry.verdict = Verdict::Fail;
    entry.detail = "literal " + vec_str(literal.payments.payoffs) +
                   " != esv " + vec_str(equal.payments.payoffs);
    entry.witness = pair_witness(game, "literal", literal.payments.payoffs,
                                 "esv", equal.payments.payoffs);
  }
  return entry;
}

std::vector<CheckEntry> game_entries(const TuGame& game, const std::string& id,
                                     const SuiteSpec& spec,
                                     std::uint64_t sample_seed) {
  std::vector<CheckEntry> entries;
  entries.push_back(verify_isv_wea(game, id));
  entries.push_back(verify_vickrey_is_core_max(game, id));
  if (game.player_count() <= spec.lexmax_player_cap) {
    entries.push_back(verify_ea_lexmax(game, id));
  }

  if (is_convex(game).convex() && core_nonempty(game)) {
    const Allocation vp = vickrey(game);
    const bool all_positive =
        std::all_of(vp.payoffs.begin(), vp.payoffs.end(),
                    [](const Rat& v) { return v.is_positive(); });
    const WeightVector weights = all_positive
                                     ? WeightVector(vp.payoffs)
                                     : WeightVector::unit(game.player_count());
    const char* kind = all_positive ? "vickrey" : "unit";
    const EaTrace trace = wea(game, weights);
    entries.push_back(theorem2_core_entry(game, id, trace, kind));
    entries.push_back(theorem2_lorenz_entry(game, id, trace, weights, kind,
                                            spec.core_samples, sample_seed));
  }

  entries.push_back(literal_program_entry(game, id));
  return entries;
}

void append_example_entries(std::vector<CheckEntry>& out,
                            const SuiteSpec& spec, std::uint64_t sample_seed) {
  // Example 1: the Vickrey payments overshoot the budget.
  {
    const TuGame game = from_exchange(example1_exchange());
    const Allocation vp = vickrey(game);
    CheckEntry entry{"example1", "demo:vickrey_budget_violation",
                     Verdict::Skipped, "", {}};
    const Rat total = vp.sum();
    const Rat available = default_budget(game);
    if (total == Rat(8) && available == Rat(5) &&
        !check_core(game, vp).in_core) {
      entry.verdict = Verdict::Pass;
      entry.detail = "sum of Vickrey payments 8 exceeds the total profit 5";
    } else {
      entry.verdict = Verdict::Fail;
      entry.detail = "expected payments summing to 8 against profit 5, got " +
                     total.str() + " against " + available.str();
      entry.witness = pair_witness(game, "vickrey", vp.payoffs, "unused",
                                   std::vector<Rat>{});
    }
    out.push_back(std::move(entry));
  }

  // Example 2: equal scaling breaks coalitional rationality at {s1, d2}.
  {
    const TuGame game = from_exchange(example2_exchange());
    CheckEntry entry{"example2", "demo:esv_cr_violation", Verdict::Skipped, "",
                     {}};
    const ScalingResult scaled = esv(game, default_budget(game));
    const CoreVerdict verdict = check_core(game, scaled.payments);
    const Coalition expected = Coalition::of({0, 3});  // s1 and d2
    Rat paid;
    for (int p : expected.members()) {
      paid += scaled.payments[static_cast<std::size_t>(p)];
    }
    if (scaled.alphas[0] == Rat(3, 4) && verdict.violated &&
        *verdict.violated == expected && paid == Rat(9, 2) &&
        game.value(expected) == Rat(5)) {
      entry.verdict = Verdict::Pass;
      entry.detail = "alpha 3/4 pays {s1,d2} only 9/2 against its value 5 "
                     "(gap 1/2)";
    } else {
      entry.verdict = Verdict::Fail;
      entry.detail =
          "expected violation at {s1,d2} with payment 9/2 against 5";
      entry.witness = pair_witness(game, "esv", scaled.payments.payoffs,
                                   "unused", std::vector<Rat>{});
    }
    out.push_back(std::move(entry));

    // The equivalence check correctly refuses the non-convex instance.
    out.push_back(verify_isv_wea(game, "example2"));
  }

  // Example 3: the worked three-player game, all four solution vectors.
  {
    const TuGame game = example3_game();
    CheckEntry entry{"example3", "demo:worked_values", Verdict::Skipped, "",
                     {}};
    const Allocation vp = vickrey(game);
    const ScalingResult equal = esv(game, default_budget(game));
    const ScalingResult individual = isv(game, default_budget(game));
    const EaTrace unit_trace = wea(game, WeightVector::unit(3));
    const EaTrace weighted_trace = wea(game, WeightVector(vp.payoffs));

    const std::vector<Rat> want_vp{Rat(5), Rat(7), Rat(2)};
    const std::vector<Rat> want_scaled{Rat(5, 2), Rat(7, 2), Rat(1)};
    const std::vector<Rat> want_unit{Rat(5, 2), Rat(5, 2), Rat(2)};
    if (vp.payoffs == want_vp && equal.payments.payoffs == want_scaled &&
        individual.payments.payoffs == want_scaled &&
        unit_trace.final.payoffs == want_unit &&
        weighted_trace.final.payoffs == want_scaled) {
      entry.verdict = Verdict::Pass;
      entry.detail =
          "vp (5, 7, 2); esv = isv = wea(vp) = (5/2, 7/2, 1); ea (5/2, 5/2, 2)";
    } else {
      entry.verdict = Verdict::Fail;
      entry.detail = "worked example values diverged";
      entry.witness = pair_witness(game, "vickrey", vp.payoffs, "isv",
                                   individual.payments.payoffs);
    }
    out.push_back(std::move(entry));

    for (CheckEntry e : game_entries(game, "example3", spec, sample_seed)) {
      out.push_back(std::move(e));
    }
  }
}

}  // namespace

VerificationReport run_suite(const SuiteSpec& spec) {
  if (spec.games < 0 || spec.min_players < 1 ||
      spec.max_players > kMaxGeneratedPlayers ||
      spec.min_players > spec.max_players) {
    throw DomainError("malformed suite specification");
  }

  VerificationReport report;
  report.seed = spec.seed;
  report.games = spec.games;

  // Plan the corpus up front so that parallel execution cannot change it.
  std::mt19937_64 rng(spec.seed);
  struct Planned {
    std::string id;
    int players = 0;
    std::uint64_t game_seed = 0;
    std::uint64_t sample_seed = 0;
  };
  std::vector<Planned> plan;
  plan.reserve(static_cast<std::size_t>(spec.games));
  const int size_span = spec.max_players - spec.min_players + 1;
  for (int k = 0; k < spec.games; ++k) {
    Planned p;
    p.players = spec.min_players + (k % size_span);
    p.game_seed = rng();
    p.sample_seed = rng();
    p.id = "gen-" + std::to_string(k + 1) + "-n" + std::to_string(p.players);
    plan.push_back(std::move(p));
  }
  const std::uint64_t example_sample_seed = rng();
  const std::uint64_t lemma_seed = rng();

  std::vector<std::vector<CheckEntry>> per_game(plan.size());
#pragma omp parallel for schedule(dynamic) if (spec.parallel)
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const Planned& p = plan[k];
    const TuGame game = gen_convex(p.players, p.game_seed, 3 * p.players);
    per_game[k] = game_entries(game, p.id, spec, p.sample_seed);
  }
  for (auto& entries : per_game) {
    for (auto& entry : entries) {
      report.entries.push_back(std::move(entry));
    }
  }

  if (spec.include_examples) {
    append_example_entries(report.entries, spec, example_sample_seed);
  }

  // Ordering lemmas on constructed vector pairs.
  {
    std::mt19937_64 lemma_rng(lemma_seed);
    int strict_pass = 0;
    int min_pass = 0;
    int built = 0;
    CheckEntry strict{"fuzz", "lemma1:strict_index", Verdict::Pass, "", {}};
    CheckEntry narrowed{"fuzz", "lemma2:min_index", Verdict::Pass, "", {}};
    long long attempts = 0;
    const long long attempt_cap = 40LL * spec.lemma_pairs + 100;
    while (built < spec.lemma_pairs && attempts < attempt_cap) {
      ++attempts;
      const auto candidate = dominating_candidate(lemma_rng);
      if (!candidate) {
        continue;
      }
      const WeightVector w(candidate->w);
      if (dominates(candidate->y, candidate->x, w) != Dominance::Dominates) {
        continue;
      }
      ++built;
      const LemmaWitness s =
          check_lemma_strict_index(candidate->x, candidate->y, w);
      const LemmaWitness m =
          check_lemma_min_index(candidate->x, candidate->y, w);
      if (s.verdict == Verdict::Pass) {
        ++strict_pass;
      } else if (strict.verdict == Verdict::Pass) {
        strict.verdict = Verdict::Fail;
        strict.witness = Json{{"x", vec_str(candidate->x)},
                              {"y", vec_str(candidate->y)},
                              {"w", vec_str(candidate->w)}};
      }
      if (m.verdict == Verdict::Pass) {
        ++min_pass;
      } else if (narrowed.verdict == Verdict::Pass) {
        narrowed.verdict = Verdict::Fail;
        narrowed.witness = Json{{"x", vec_str(candidate->x)},
                                {"y", vec_str(candidate->y)},
                                {"w", vec_str(candidate->w)}};
      }
    }
    strict.detail = std::to_string(strict_pass) + "/" + std::to_string(built) +
                    " dominating pairs yielded a strict index";
    narrowed.detail = std::to_string(min_pass) + "/" + std::to_string(built) +
                      " dominating pairs yielded the narrowed index";
    if (built < spec.lemma_pairs) {
      strict.verdict = Verdict::Fail;
      strict.detail += " (generator shortfall)";
    }
    report.entries.push_back(std::move(strict));
    report.entries.push_back(std::move(narrowed));

    CheckEntry midpoint{"fuzz", "lemma3:midpoint_lex", Verdict::Pass, "", {}};
    int midpoint_pass = 0;
    for (int k = 0; k < spec.lemma_pairs; ++k) {
      int j = 0;
      const VectorPair candidate = midpoint_candidate(lemma_rng, j);
      const Verdict v = check_midpoint_lex(candidate.x, candidate.y, j);
      if (v == Verdict::Pass) {
        ++midpoint_pass;
      } else if (midpoint.verdict == Verdict::Pass) {
        midpoint.verdict = Verdict::Fail;
        midpoint.witness = Json{{"x", vec_str(candidate.x)},
                                {"y", vec_str(candidate.y)},
                                {"j", j}};
      }
    }
    midpoint.detail = std::to_string(midpoint_pass) + "/" +
                      std::to_string(spec.lemma_pairs) +
                      " hypothesis pairs lex-improved at the midpoint";
    report.entries.push_back(std::move(midpoint));
  }

  // Uniqueness summary: the lexicographic route and the combinatorial route
  // agreed wherever the theorem applied.
  {
    int agreed = 0;
    int failed = 0;
    for (const auto& entry : report.entries) {
      if (entry.check == "theorem:isv_eq_wea") {
        if (entry.verdict == Verdict::Pass) {
          ++agreed;
        } else if (entry.verdict == Verdict::Fail) {
          ++failed;
        }
      }
    }
    CheckEntry unique{"suite", "corollary1:uniqueness",
                      failed == 0 ? Verdict::Pass : Verdict::Fail,
                      "independent solver routes returned identical vectors "
                      "on " + std::to_string(agreed) + " games",
                      {}};
    report.entries.push_back(std::move(unique));
  }

  return report;
}

}  // namespace coopshare
