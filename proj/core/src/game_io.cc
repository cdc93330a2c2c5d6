// Copyright 2026 The coopvals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopvals/game_io.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "coopvals/error.h"
#include "json.hpp"
#include "json_internal.h"

namespace coopvals {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& why) {
  throw Error(ErrorCode::kParseError, why);
}

// Builds a DOM like nlohmann's own parser, except that JSON decimals are kept
// as their source text (stored as strings) so they can be read exactly, and
// duplicate object keys are rejected instead of silently overwritten.
class ExactSax {
 public:
  explicit ExactSax(json& root) : dom_(root) {}

  bool null() { return dom_.null(); }
  bool boolean(bool value) { return dom_.boolean(value); }
  bool number_integer(json::number_integer_t value) { return dom_.number_integer(value); }
  bool number_unsigned(json::number_unsigned_t value) {
    return dom_.number_unsigned(value);
  }
  bool number_float(json::number_float_t, const json::string_t& text) {
    json::string_t copy = text;
    return dom_.string(copy);
  }
  bool string(json::string_t& value) { return dom_.string(value); }
  bool binary(json::binary_t& value) { return dom_.binary(value); }
  bool start_object(std::size_t size) {
    keys_.emplace_back();
    return dom_.start_object(size);
  }
  bool key(json::string_t& value) {
    if (!keys_.back().insert(value).second) {
      const bool in_worths = keys_.size() == 2 && last_top_key_ == "worths";
      if (in_worths) throw Error(ErrorCode::kDuplicateCoalition, "key \"" + value + "\"");
      Fail("duplicate key \"" + value + "\"");
    }
    if (keys_.size() == 1) last_top_key_ = value;
    return dom_.key(value);
  }
  bool end_object() {
    keys_.pop_back();
    return dom_.end_object();
  }
  bool start_array(std::size_t size) { return dom_.start_array(size); }
  bool end_array() { return dom_.end_array(); }
  bool parse_error(std::size_t position, const std::string& token,
                   const nlohmann::detail::exception& ex) {
    Fail("invalid JSON at byte " + std::to_string(position) + " near '" + token +
         "': " + ex.what());
  }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
  std::vector<std::set<std::string>> keys_;
  std::string last_top_key_;
};

Rational LiteralToRational(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rational(mpz_class(std::to_string(value.get<std::uint64_t>()), 10));
    }
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>()), 10));
  }
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>());
    } catch (const Error& e) {
      Fail(where + ": " + e.detail());
    }
  }
  Fail(where + ": expected a number or a rational string");
}

std::vector<Coalition::Mask> DisplayOrder(int n) {
  std::vector<Coalition::Mask> masks;
  const Coalition::Mask grand = Coalition::Grand(n).mask();
  masks.reserve(grand);
  for (Coalition::Mask mask = 1; mask <= grand; ++mask) masks.push_back(mask);
  // By size, then lexicographically by member list. Reversing the bit order
  // of equal-size masks does exactly that.
  std::sort(masks.begin(), masks.end(), [](Coalition::Mask a, Coalition::Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    while (a != 0 && b != 0) {
      const int la = std::countr_zero(a);
      const int lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  return masks;
}

}  // namespace

namespace internal {

Json RationalToJson(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return Json(value.get_num().get_si());
  }
  return Json(ToString(value));
}

Json PayoffToJson(const PayoffVector& values) {
  Json out = Json::array();
  for (const Rational& x : values) out.push_back(ToString(x));
  return out;
}

Json GameToJson(const TuGame& v) {
  Json out = Json::object();
  out["players"] = v.players();
  if (!v.labels().empty()) out["labels"] = v.labels();
  Json worths = Json::object();
  for (Coalition::Mask mask : DisplayOrder(v.players())) {
    const Rational& worth = v[Coalition(mask)];
    if (worth != 0) worths[CoalitionKey(Coalition(mask))] = RationalToJson(worth);
  }
  out["worths"] = std::move(worths);
  return out;
}

}  // namespace internal

Coalition ParseCoalitionKey(std::string_view key, int n) {
  if (key.empty()) Fail("empty coalition key is not allowed");
  Coalition::Mask mask = 0;
  int previous = 0;
  size_t pos = 0;
  while (pos <= key.size()) {
    const size_t comma = std::min(key.find(',', pos), key.size());
    const std::string_view part = key.substr(pos, comma - pos);
    if (part.empty() || part.size() > 3 ||
        !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        part.front() == '0') {
      Fail("bad coalition key \"" + std::string(key) + "\"");
    }
    const int player = std::stoi(std::string(part));
    if (player <= previous) {
      Fail("coalition key \"" + std::string(key) + "\" is not strictly increasing");
    }
    if (player > n) {
      Fail("coalition key \"" + std::string(key) + "\" names player " +
           std::to_string(player) + " of " + std::to_string(n));
    }
    mask |= Coalition::Mask{1} << (player - 1);
    previous = player;
    pos = comma + 1;
  }
  return Coalition(mask);
}

TuGame ParseGameFile(std::string_view bytes, int cap) {
  json root;
  ExactSax sax(root);
  json::sax_parse(bytes.begin(), bytes.end(), &sax);
  if (!root.is_object()) Fail("game file must be a JSON object");

  for (const auto& [key, _] : root.items()) {
    if (key != "players" && key != "labels" && key != "worths" && key != "worths_by_mask") {
      Fail("unknown field \"" + key + "\"");
    }
  }
  if (!root.contains("players") || !root["players"].is_number_integer()) {
    Fail("\"players\" must be an integer");
  }
  const std::int64_t players = root["players"].get<std::int64_t>();
  if (players < 1 || players > std::min(cap, kMaxSupportedPlayers)) {
    throw Error(ErrorCode::kPlayerCountExceeded,
                "player count " + std::to_string(players) + " outside [1, " +
                    std::to_string(std::min(cap, kMaxSupportedPlayers)) + "]");
  }
  const int n = static_cast<int>(players);

  std::vector<std::string> labels;
  if (root.contains("labels")) {
    const json& node = root["labels"];
    if (!node.is_array() || node.size() != static_cast<size_t>(n)) {
      Fail("\"labels\" must be an array of one string per player");
    }
    for (const json& label : node) {
      if (!label.is_string()) Fail("labels must be strings");
      labels.push_back(label.get<std::string>());
    }
  }

  const bool sparse = root.contains("worths");
  const bool dense = root.contains("worths_by_mask");
  if (sparse == dense) Fail("exactly one of \"worths\" and \"worths_by_mask\" is required");

  TuGame game = ZeroGame(1);
  if (sparse) {
    const json& node = root["worths"];
    if (!node.is_object()) Fail("\"worths\" must be an object");
    std::vector<std::pair<Coalition, Rational>> entries;
    for (const auto& [key, value] : node.items()) {
      entries.emplace_back(ParseCoalitionKey(key, n),
                           LiteralToRational(value, "worth of \"" + key + "\""));
    }
    game = BuildGame(n, entries, cap);
  } else {
    const json& node = root["worths_by_mask"];
    if (!node.is_array() || node.size() != (size_t{1} << n)) {
      Fail("\"worths_by_mask\" must hold 2^players entries");
    }
    std::vector<Rational> worths;
    worths.reserve(node.size());
    for (size_t mask = 0; mask < node.size(); ++mask) {
      worths.push_back(LiteralToRational(node[mask], "worths_by_mask[" +
                                                         std::to_string(mask) + "]"));
    }
    game = TuGame::FromTable(n, std::move(worths), cap);
  }
  return labels.empty() ? game : game.WithLabels(std::move(labels));
}

std::string SerializeGameFile(const TuGame& v, int indent) {
  return internal::GameToJson(v).dump(indent);
}

}  // namespace coopvals
