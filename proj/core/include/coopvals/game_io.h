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

#ifndef COOPVALS_GAME_IO_H_
#define COOPVALS_GAME_IO_H_

#include <string>
#include <string_view>

#include "coopvals/coalition.h"
#include "coopvals/game.h"

namespace coopvals {

// Game file (UTF-8 JSON):
//
//   {"players": 3,
//    "labels": ["a", "b", "c"],                (optional)
//    "worths": {"1": 1, "1,2": "7/3", "1,2,3": "2.5"}}
//
// or, instead of "worths", a dense "worths_by_mask" array of 2^n literals
// where index bit i is player i+1. Keys are strictly increasing 1-based
// indices; missing coalitions are worth 0. Literals are JSON integers, JSON
// decimals (read from their source text, not through double) or strings
// holding an integer, "p/q" or a decimal.
//
// Errors: kParseError for malformed JSON, keys or literals;
// kPlayerCountExceeded; kNonzeroEmptyCoalition; kDuplicateCoalition.
TuGame ParseGameFile(std::string_view bytes, int cap = PlayerCap());

// Sparse form: nonzero worths only, integers as JSON numbers when they fit
// in 64 bits, everything else as "p/q" strings. Compact unless `indent` >= 0.
std::string SerializeGameFile(const TuGame& v, int indent = -1);

// "1,3" -> {0, 2}. Throws kParseError for empty, non-increasing or
// out-of-range keys.
Coalition ParseCoalitionKey(std::string_view key, int n);

}  // namespace coopvals

#endif  // COOPVALS_GAME_IO_H_
