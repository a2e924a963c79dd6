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

#include "coopshare/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "coopshare/errors.hpp"

namespace coopshare {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& expect_member(const Json& doc, const char* key,
                          const std::string& where) {
  if (!doc.is_object()) {
    fail(where, "expected a JSON object");
  }
  const auto it = doc.find(key);
  if (it == doc.end()) {
    fail(where, std::string("missing \"") + key + "\" field");
  }
  return *it;
}

std::vector<std::string> player_names(const Json& doc,
                                      const std::string& where) {
  const Json& players = expect_member(doc, "players", where);
  if (!players.is_array() || players.empty()) {
    fail(where, "\"players\" must be a non-empty array");
  }
  std::vector<std::string> names;
  for (const Json& p : players) {
    if (!p.is_string() || p.get<std::string>().empty()) {
      fail(where, "player names must be non-empty strings");
    }
    const auto name = p.get<std::string>();
    if (name.find(',') != std::string::npos) {
      fail(where, "player name \"" + name + "\" must not contain a comma");
    }
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      fail(where, "duplicate player name \"" + name + "\"");
    }
    names.push_back(name);
  }
  if (static_cast<int>(names.size()) > kMaxPlayers) {
    fail(where, "more than " + std::to_string(kMaxPlayers) + " players");
  }
  return names;
}

std::vector<Rat> rat_array(const Json& doc, const std::string& where) {
  if (!doc.is_array()) {
    fail(where, "expected an array of rationals");
  }
  std::vector<Rat> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.push_back(rat_from_json(doc[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json rat_strings(std::span<const Rat> values) {
  Json arr = Json::array();
  for (const Rat& v : values) {
    arr.push_back(v.str());
  }
  return arr;
}

std::vector<ExchangeBid> bids_from_json(const Json& doc, const char* key,
                                        const std::string& where) {
  const Json& list = expect_member(doc, key, where);
  if (!list.is_array()) {
    fail(where, std::string("\"") + key + "\" must be an array");
  }
  std::vector<ExchangeBid> bids;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string bid_where =
        where + "." + key + "[" + std::to_string(i) + "]";
    const Json& label = expect_member(list[i], "label", bid_where);
    if (!label.is_string() || label.get<std::string>().empty()) {
      fail(bid_where, "\"label\" must be a non-empty string");
    }
    bids.push_back(ExchangeBid{
        label.get<std::string>(),
        rat_from_json(expect_member(list[i], "price", bid_where),
                      bid_where + ".price")});
  }
  return bids;
}

}  // namespace

Rat rat_from_json(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return Rat::parse(value.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  if (value.is_number_integer()) {
    return Rat(value.get<long long>());
  }
  fail(where, "expected an exact rational (\"p/q\" string or integer)");
}

Json rat_to_json(const Rat& value) { return value.str(); }

TuGame game_from_json(const Json& doc) {
  const std::string where = "game";
  const std::vector<std::string> names = player_names(doc, where);
  const int n = static_cast<int>(names.size());

  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    index[names[static_cast<std::size_t>(i)]] = i;
  }

  std::vector<Rat> values(std::size_t{1} << n);
  const auto it = doc.find("values");
  if (it != doc.end()) {
    if (!it->is_object()) {
      fail(where, "\"values\" must be an object");
    }
    std::vector<bool> seen(values.size(), false);
    for (const auto& [key, raw] : it->items()) {
      const std::string entry_where = where + ".values[\"" + key + "\"]";
      if (key.empty()) {
        fail(entry_where,
             "the empty coalition is implied to be 0 and must be omitted");
      }
      std::uint32_t mask = 0;
      std::stringstream parts(key);
      std::string part;
      while (std::getline(parts, part, ',')) {
        const auto found = index.find(part);
        if (found == index.end()) {
          fail(entry_where, "unknown player \"" + part + "\"");
        }
        const std::uint32_t bit = std::uint32_t{1} << found->second;
        if (mask & bit) {
          fail(entry_where, "player \"" + part + "\" listed twice");
        }
        mask |= bit;
      }
      if (mask == 0) {
        fail(entry_where, "empty coalition key");
      }
      if (seen[mask]) {
        fail(entry_where, "coalition already has a value under another key");
      }
      seen[mask] = true;
      values[mask] = rat_from_json(raw, entry_where);
    }
  }
  return TuGame(n, std::move(values), names);
}

Json game_to_json(const TuGame& game) {
  std::vector<std::string> names = game.labels();
  if (names.empty()) {
    for (int i = 1; i <= game.player_count(); ++i) {
      names.push_back("p" + std::to_string(i));
    }
  }
  Json values = Json::object();
  const std::uint32_t full = Coalition::full(game.player_count()).mask;
  for (std::uint32_t mask = 1; mask <= full && full != 0; ++mask) {
    const Rat& v = game.value(Coalition(mask));
    if (v.is_zero()) {
      continue;
    }
    std::vector<std::string> members;
    for (int p : Coalition(mask).members()) {
      members.push_back(names[static_cast<std::size_t>(p)]);
    }
    std::sort(members.begin(), members.end());
    std::string key;
    for (const auto& m : members) {
      if (!key.empty()) {
        key += ',';
      }
      key += m;
    }
    values[key] = v.str();
  }
  return Json{{"players", names}, {"values", values}};
}

ExchangeInstance exchange_from_json(const Json& doc) {
  const std::string where = "exchange";
  ExchangeInstance instance;
  instance.supplies = bids_from_json(doc, "supplies", where);
  instance.demands = bids_from_json(doc, "demands", where);
  return instance;
}

Json exchange_to_json(const ExchangeInstance& exchange) {
  const auto bids = [](const std::vector<ExchangeBid>& list) {
    Json arr = Json::array();
    for (const auto& bid : list) {
      arr.push_back(Json{{"label", bid.label}, {"price", bid.price.str()}});
    }
    return arr;
  };
  return Json{{"supplies", bids(exchange.supplies)},
              {"demands", bids(exchange.demands)}};
}

Allocation allocation_from_json(const Json& doc) {
  const std::string where = "allocation";
  if (doc.is_object()) {
    if (const auto it = doc.find("payoffs"); it != doc.end()) {
      return Allocation(rat_array(*it, where + ".payoffs"));
    }
    if (const auto it = doc.find("payments"); it != doc.end()) {
      return Allocation(rat_array(*it, where + ".payments"));
    }
  }
  fail(where, "expected an object with a \"payoffs\" (or \"payments\") array");
}

Json allocation_to_json(const Allocation& x) {
  return Json{{"payoffs", rat_strings(x.payoffs)}};
}

std::vector<Rat> weights_from_json(const Json& doc) {
  const std::string where = "weights";
  if (doc.is_object()) {
    for (const char* key : {"weights", "payoffs", "payments"}) {
      if (const auto it = doc.find(key); it != doc.end()) {
        return rat_array(*it, where + "." + key);
      }
    }
  }
  fail(where, "expected an object with a \"weights\" array");
}

Json scaling_to_json(const ScalingResult& result, const std::string& method) {
  return Json{{"method", method},
              {"budget", result.budget.str()},
              {"payments", rat_strings(result.payments.payoffs)},
              {"alphas", rat_strings(result.alphas)}};
}

Json threshold_to_json(const ThresholdResult& result) {
  return Json{{"method", "threshold"},
              {"budget", result.budget.str()},
              {"threshold", result.threshold.str()},
              {"payments", rat_strings(result.payments.payoffs)}};
}

Json vickrey_to_json(const Allocation& vp) {
  return Json{{"method", "vickrey"},
              {"payments", rat_strings(vp.payoffs)},
              {"total", vp.sum().str()}};
}

Json trace_to_json(const EaTrace& trace, const TuGame& game,
                   const std::string& method) {
  Json rounds = Json::array();
  for (const EaRound& round : trace.rounds) {
    Json members = Json::array();
    for (int p : round.coalition.members()) {
      members.push_back(game.has_labels() ? game.label(p)
                                          : std::to_string(p));
    }
    rounds.push_back(Json{{"coalition", members},
                          {"average", round.average.str()}});
  }
  return Json{{"method", method},
              {"rounds", rounds},
              {"final", rat_strings(trace.final.payoffs)},
              {"convex_input", trace.convex_input}};
}

Json curve_to_json(const LorenzCurve& curve) {
  Json arr = Json::array();
  for (const auto& [p, v] : curve.breakpoints) {
    arr.push_back(Json::array({p.str(), v.str()}));
  }
  return arr;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError(path + ": cannot open file for writing");
  }
  out << dump_json(doc);
}

namespace {

template <typename F>
auto with_file_context(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

TuGame read_game_file(const std::string& path) {
  const Json doc = load_json_file(path);
  return with_file_context(path, [&] { return game_from_json(doc); });
}

ExchangeInstance read_exchange_file(const std::string& path) {
  const Json doc = load_json_file(path);
  return with_file_context(path, [&] { return exchange_from_json(doc); });
}

Allocation read_allocation_file(const std::string& path) {
  const Json doc = load_json_file(path);
  return with_file_context(path, [&] { return allocation_from_json(doc); });
}

std::vector<Rat> read_weights_file(const std::string& path) {
  const Json doc = load_json_file(path);
  return with_file_context(path, [&] { return weights_from_json(doc); });
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace coopshare
