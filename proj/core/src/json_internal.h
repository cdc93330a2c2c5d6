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

#ifndef COOPVALS_SRC_JSON_INTERNAL_H_
#define COOPVALS_SRC_JSON_INTERNAL_H_

#include "coopvals/game.h"
#include "coopvals/rational.h"
#include "json.hpp"

namespace coopvals::internal {

using Json = nlohmann::ordered_json;

// Integer when it fits in 64 bits, else "p/q".
Json RationalToJson(const Rational& value);
// Array of "p/q" strings (always strings, for a uniform vector schema).
Json PayoffToJson(const PayoffVector& values);
Json GameToJson(const TuGame& v);

}  // namespace coopvals::internal

#endif  // COOPVALS_SRC_JSON_INTERNAL_H_
