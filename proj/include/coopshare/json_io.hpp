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

#ifndef COOPSHARE_JSON_IO_HPP
#define COOPSHARE_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "coopshare/core.hpp"
#include "coopshare/egalitarian.hpp"
#include "coopshare/game.hpp"
#include "coopshare/lorenz.hpp"
#include "coopshare/payments.hpp"
#include "coopshare/rational.hpp"

namespace coopshare {

using Json = nlohmann::json;

// Rationals travel as strings ("5/2", "7"); integers are also accepted on
// input. Decimals are rejected — they are not exact.
Rat rat_from_json(const Json& value, const std::string& where);
Json rat_to_json(const Rat& value);

// Game files: { "players": ["a", ...],
//               "values": { "<sorted comma-joined names>": "p/q", ... } }.
// Omitted coalitions default to 0; an empty-coalition entry is rejected.
TuGame game_from_json(const Json& doc);
Json game_to_json(const TuGame& game);

// Exchange files: { "supplies": [{"label": ..., "price": ...}, ...],
//                   "demands":  [...] }.
ExchangeInstance exchange_from_json(const Json& doc);
Json exchange_to_json(const ExchangeInstance& exchange);

// Allocation files: { "payoffs": ["5/2", ...] }. Readers also accept the
// "payments" key so that compute output can be piped into check.
Allocation allocation_from_json(const Json& doc);
Json allocation_to_json(const Allocation& x);

// Weight files: { "weights": [...] }; "payoffs"/"payments" are accepted too.
std::vector<Rat> weights_from_json(const Json& doc);

Json scaling_to_json(const ScalingResult& result, const std::string& method);
Json threshold_to_json(const ThresholdResult& result);
Json vickrey_to_json(const Allocation& vp);
Json trace_to_json(const EaTrace& trace, const TuGame& game,
                   const std::string& method);
Json curve_to_json(const LorenzCurve& curve);

// File helpers; all failures become ParseError naming the file.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);
TuGame read_game_file(const std::string& path);
ExchangeInstance read_exchange_file(const std::string& path);
Allocation read_allocation_file(const std::string& path);
std::vector<Rat> read_weights_file(const std::string& path);

/// Canonical rendering used everywhere a document is printed or written:
/// two-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& doc);

}  // namespace coopshare

#endif  // COOPSHARE_JSON_IO_HPP
