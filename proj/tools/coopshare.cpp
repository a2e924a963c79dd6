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

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "coopshare/core.hpp"
#include "coopshare/egalitarian.hpp"
#include "coopshare/errors.hpp"
#include "coopshare/game.hpp"
#include "coopshare/json_io.hpp"
#include "coopshare/lorenz.hpp"
#include "coopshare/payments.hpp"
#include "coopshare/verification.hpp"

namespace {

using namespace coopshare;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

Rat resolve_budget(const std::string& text, const TuGame& game) {
  if (text == "auto") {
    return default_budget(game);
  }
  return Rat::parse(text);
}

WeightVector resolve_weights(const std::string& source, const TuGame& game) {
  if (source == "unit") {
    return WeightVector::unit(game.player_count());
  }
  if (source == "vickrey") {
    return WeightVector(vickrey(game).payoffs);
  }
  return WeightVector(read_weights_file(source));
}

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("COOPSHARE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return flag_seed;
}

std::string player_name(const TuGame& game, int i) {
  return game.has_labels() ? game.label(i) : std::to_string(i);
}

void print_payment_table(const TuGame& game, const Allocation& payments,
                         const std::vector<Rat>* alphas) {
  std::cout << "player\tpayment" << (alphas ? "\talpha" : "") << "\n";
  for (int i = 0; i < game.player_count(); ++i) {
    std::cout << player_name(game, i) << '\t'
              << payments[static_cast<std::size_t>(i)];
    if (alphas) {
      std::cout << '\t' << (*alphas)[static_cast<std::size_t>(i)];
    }
    std::cout << '\n';
  }
  std::cout << "total\t" << payments.sum() << "\n";
}

void emit(const Json& doc, bool as_json, const std::string& output_path,
          const std::function<void()>& human) {
  if (!output_path.empty()) {
    write_json_file(output_path, doc);
  }
  if (as_json) {
    std::cout << dump_json(doc);
  } else {
    human();
  }
}

int run_compute(const std::string& game_path, const std::string& method,
                const std::string& budget_text, const std::string& weights,
                bool as_json, const std::string& output_path) {
  const TuGame game = read_game_file(game_path);

  if (method == "vickrey") {
    const Allocation vp = vickrey(game);
    emit(vickrey_to_json(vp), as_json, output_path, [&] {
      std::cout << "method: vickrey\n";
      print_payment_table(game, vp, nullptr);
    });
    return kExitOk;
  }
  if (method == "esv" || method == "isv") {
    const Rat budget = resolve_budget(budget_text, game);
    const ScalingResult result =
        method == "esv" ? esv(game, budget) : isv(game, budget);
    emit(scaling_to_json(result, method), as_json, output_path, [&] {
      std::cout << "method: " << method << "\nbudget: " << result.budget
                << "\n";
      print_payment_table(game, result.payments, &result.alphas);
    });
    return kExitOk;
  }
  if (method == "threshold") {
    const Rat budget = resolve_budget(budget_text, game);
    const ThresholdResult result = threshold_vickrey(game, budget);
    emit(threshold_to_json(result), as_json, output_path, [&] {
      std::cout << "method: threshold\nbudget: " << result.budget
                << "\nthreshold: " << result.threshold << "\n";
      print_payment_table(game, result.payments, nullptr);
    });
    return kExitOk;
  }
  if (method == "ea" || method == "wea") {
    const WeightVector w = method == "ea"
                               ? WeightVector::unit(game.player_count())
                               : resolve_weights(weights, game);
    const EaTrace trace = wea(game, w);
    emit(trace_to_json(trace, game, method), as_json, output_path, [&] {
      std::cout << "method: " << method;
      if (method == "wea") {
        std::cout << " (weights: " << weights << ")";
      }
      std::cout << "\n";
      for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
        std::cout << "round " << (r + 1) << ": coalition "
                  << game.coalition_name(trace.rounds[r].coalition)
                  << ", average " << trace.rounds[r].average << "\n";
      }
      print_payment_table(game, trace.final, nullptr);
      if (!trace.convex_input) {
        std::cout << "note: input is not convex; "
                     "the egalitarian theorems do not apply\n";
      }
    });
    return kExitOk;
  }
  throw DomainError("unknown method \"" + method + "\"");
}

int run_check(const std::string& game_path, const std::string& core_path,
              const std::string& imputation_path, bool convex, bool as_json) {
  const TuGame game = read_game_file(game_path);

  if (convex) {
    const ConvexityCheck check = is_convex(game);
    Json doc{{"check", "convex"}, {"ok", check.convex()}};
    if (!check.convex()) {
      doc["witness"] =
          Json{{"s", game.coalition_name(check.violation->s)},
               {"t", game.coalition_name(check.violation->t)}};
    }
    if (as_json) {
      std::cout << dump_json(doc);
    } else if (check.convex()) {
      std::cout << "convex: yes\n";
    } else {
      std::cout << "convex: no\nviolating pair: "
                << game.coalition_name(check.violation->s) << " and "
                << game.coalition_name(check.violation->t) << "\n";
    }
    return check.convex() ? kExitOk : kExitCheckFailed;
  }

  if (!core_path.empty()) {
    const Allocation x = read_allocation_file(core_path);
    const CoreVerdict verdict = check_core(game, x);
    Json doc{{"check", "core"},
             {"ok", verdict.in_core},
             {"budget_gap", verdict.budget_gap.str()}};
    if (verdict.violated) {
      Rat paid;
      for (int p : verdict.violated->members()) {
        paid += x[static_cast<std::size_t>(p)];
      }
      doc["violated"] = game.coalition_name(*verdict.violated);
      doc["paid"] = paid.str();
      doc["value"] = game.value(*verdict.violated).str();
    }
    if (as_json) {
      std::cout << dump_json(doc);
    } else if (verdict.in_core) {
      std::cout << "core: yes\n";
    } else {
      std::cout << "core: no\n";
      if (verdict.violated) {
        std::cout << "violated coalition: "
                  << game.coalition_name(*verdict.violated) << " (paid "
                  << doc["paid"].get<std::string>() << ", value "
                  << doc["value"].get<std::string>() << ")\n";
      }
      if (!verdict.budget_gap.is_zero()) {
        std::cout << "budget gap: " << verdict.budget_gap << "\n";
      }
    }
    return verdict.in_core ? kExitOk : kExitCheckFailed;
  }

  const Allocation x = read_allocation_file(imputation_path);
  const bool ok = is_imputation(game, x);
  if (as_json) {
    std::cout << dump_json(Json{{"check", "imputation"}, {"ok", ok}});
  } else {
    std::cout << "imputation: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_lorenz(const std::vector<std::string>& dominates_paths,
               const std::string& curve_path, const std::string& weights_path,
               bool as_json) {
  const auto load_weights = [&](int n) {
    if (weights_path == "unit") {
      return WeightVector::unit(n);
    }
    return WeightVector(read_weights_file(weights_path));
  };

  if (!curve_path.empty()) {
    const Allocation x = read_allocation_file(curve_path);
    const WeightVector w = load_weights(x.size());
    const LorenzCurve curve = build_curve(x.payoffs, w);
    if (as_json) {
      std::cout << dump_json(curve_to_json(curve));
    } else {
      std::cout << "breakpoints:\n";
      for (const auto& [p, v] : curve.breakpoints) {
        std::cout << "  (" << p << ", " << v << ")\n";
      }
    }
    return kExitOk;
  }

  const Allocation a = read_allocation_file(dominates_paths[0]);
  const Allocation b = read_allocation_file(dominates_paths[1]);
  const WeightVector w = load_weights(a.size());
  const Dominance verdict = dominates(a.payoffs, b.payoffs, w);
  const char* text = verdict == Dominance::Dominates      ? "dominates"
                     : verdict == Dominance::DominatedBy  ? "dominated-by"
                     : verdict == Dominance::Equal        ? "equal"
                                                          : "incomparable";
  if (as_json) {
    std::cout << dump_json(Json{{"check", "lorenz"}, {"verdict", text}});
  } else {
    std::cout << "lorenz: first allocation " << text
              << (verdict == Dominance::Equal ||
                          verdict == Dominance::Incomparable
                      ? " with"
                      : "")
              << " second\n";
  }
  return kExitOk;
}

int run_exchange(const std::string& bids_path, const std::string& output_path,
                 bool as_json) {
  const ExchangeInstance instance = read_exchange_file(bids_path);
  const TuGame game = from_exchange(instance);
  const Json doc = game_to_json(game);
  if (!output_path.empty()) {
    write_json_file(output_path, doc);
  }
  if (as_json) {
    std::cout << dump_json(doc);
  } else {
    std::cout << "exchange with " << instance.supplies.size()
              << " supplies and " << instance.demands.size()
              << " demands; total profit v(N) = "
              << game.value(game.grand_coalition()) << "\n";
    if (!output_path.empty()) {
      std::cout << "wrote game to " << output_path << "\n";
    }
  }
  return kExitOk;
}

int run_gen(int players, std::uint64_t seed, int terms,
            const std::string& output_path, bool as_json) {
  const TuGame game = gen_convex(players, resolve_seed(seed),
                                 terms > 0 ? terms : 3 * players);
  const Json doc = game_to_json(game);
  if (!output_path.empty()) {
    write_json_file(output_path, doc);
  }
  if (as_json) {
    std::cout << dump_json(doc);
  } else {
    std::cout << "generated convex " << players << "-player game, v(N) = "
              << game.value(game.grand_coalition()) << "\n";
    if (!output_path.empty()) {
      std::cout << "wrote game to " << output_path << "\n";
    }
  }
  return kExitOk;
}

int run_verify(SuiteSpec spec, bool verbose, bool as_json) {
  spec.seed = resolve_seed(spec.seed);
  const VerificationReport report = run_suite(spec);
  if (as_json) {
    std::cout << dump_json(report.to_json());
  } else {
    std::cout << report.render_text(verbose);
  }
  return report.failures() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coopshare — exact profit division for TU-games: Vickrey "
               "payments, scaled variants, and (weighted) egalitarian "
               "allocations"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute a payment vector");
  std::string game_path;
  std::string method;
  std::string budget_text = "auto";
  std::string weights = "unit";
  std::string output_path;
  bool as_json = false;
  compute->add_option("--game", game_path, "game file (JSON)")->required();
  compute
      ->add_option("--method", method,
                   "vickrey | esv | isv | threshold | ea | wea")
      ->required();
  compute->add_option("--budget", budget_text,
                      "rational budget or \"auto\" for v(N)");
  compute->add_option("--weights", weights,
                      "wea weights: unit | vickrey | <file>");
  compute->add_option("--output", output_path, "also write the JSON result");
  compute->add_flag("--json", as_json, "print JSON instead of a table");

  // check
  auto* check = app.add_subcommand("check", "validate a game or allocation");
  std::string core_path;
  std::string imputation_path;
  bool check_convex = false;
  check->add_option("--game", game_path, "game file (JSON)")->required();
  auto* core_opt =
      check->add_option("--core", core_path, "allocation file to test");
  auto* imput_opt = check->add_option("--imputation", imputation_path,
                                      "allocation file to test");
  auto* convex_opt =
      check->add_flag("--convex", check_convex, "test supermodularity");
  core_opt->excludes(imput_opt)->excludes(convex_opt);
  imput_opt->excludes(convex_opt);
  check->add_flag("--json", as_json, "print JSON");

  // lorenz
  auto* lorenz = app.add_subcommand("lorenz", "Lorenz curves and domination");
  std::vector<std::string> dominates_paths;
  std::string curve_path;
  std::string weights_path = "unit";
  auto* dom_opt = lorenz->add_option("--dominates", dominates_paths,
                                     "two allocation files to compare");
  dom_opt->expected(2);
  auto* curve_opt = lorenz->add_option(
      "--curve", curve_path, "allocation file to export as breakpoints");
  curve_opt->excludes(dom_opt);
  lorenz->add_option("--weights", weights_path, "unit | <file>");
  lorenz->add_flag("--json", as_json, "print JSON");

  // exchange
  auto* exchange =
      app.add_subcommand("exchange", "build the TU-game of a bid file");
  std::string bids_path;
  exchange->add_option("--bids", bids_path, "exchange file (JSON)")
      ->required();
  exchange->add_option("--output", output_path, "game file to write");
  exchange->add_flag("--json", as_json, "print the game as JSON");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random convex game");
  int players = 4;
  std::uint64_t seed = 1;
  int terms = 0;
  bool want_convex = false;
  gen->add_flag("--convex", want_convex, "generate a convex game (default)");
  gen->add_option("--players", players, "player count (1..12)")->required();
  gen->add_option("--seed", seed, "generator seed (COOPSHARE_SEED overrides)");
  gen->add_option("--terms", terms, "unanimity terms (default 3n)");
  gen->add_option("--output", output_path, "game file to write");
  gen->add_flag("--json", as_json, "print the game as JSON");

  // verify
  auto* verify =
      app.add_subcommand("verify", "run the theorem/lemma verification suite");
  SuiteSpec spec;
  bool verbose = false;
  bool serial = false;
  verify->add_option("--games", spec.games, "corpus size (default 200)");
  verify->add_option("--min-players", spec.min_players, "smallest n");
  verify->add_option("--max-players", spec.max_players, "largest n");
  verify->add_option("--seed", spec.seed,
                     "corpus seed (COOPSHARE_SEED overrides)");
  verify->add_option("--samples", spec.core_samples,
                     "core samples per game for the domination checks");
  verify->add_option("--lemma-pairs", spec.lemma_pairs,
                     "constructed vector pairs per lemma");
  verify->add_flag("--serial", serial, "disable OpenMP over games");
  verify->add_flag("--verbose", verbose, "also list passing checks");
  verify->add_flag("--json", as_json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (compute->parsed()) {
      return run_compute(game_path, method, budget_text, weights, as_json,
                         output_path);
    }
    if (check->parsed()) {
      if (core_path.empty() && imputation_path.empty() && !check_convex) {
        std::cerr << "check: pick one of --core, --imputation, --convex\n";
        return kExitBadInput;
      }
      return run_check(game_path, core_path, imputation_path, check_convex,
                       as_json);
    }
    if (lorenz->parsed()) {
      if (dominates_paths.size() != 2 && curve_path.empty()) {
        std::cerr << "lorenz: pick --dominates A B or --curve A\n";
        return kExitBadInput;
      }
      return run_lorenz(dominates_paths, curve_path, weights_path, as_json);
    }
    if (exchange->parsed()) {
      return run_exchange(bids_path, output_path, as_json);
    }
    if (gen->parsed()) {
      return run_gen(players, seed, terms, output_path, as_json);
    }
    if (verify->parsed()) {
      spec.parallel = !serial;
      return run_verify(spec, verbose, as_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
