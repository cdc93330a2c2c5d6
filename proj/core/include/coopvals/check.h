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

#ifndef COOPVALS_CHECK_H_
#define COOPVALS_CHECK_H_

#include <optional>
#include <string>

#include "coopvals/game.h"
#include "coopvals/rational.h"

namespace coopvals {

// Evidence for a failed check: the game, what was probed, both sides of the
// violated relation and, when it is component-wise, the first offending
// player (0-based; -1 when not applicable).
struct Witness {
  std::optional<TuGame> game;
  std::string inputs;
  PayoffVector lhs;
  PayoffVector rhs;
  int component = -1;
};

enum class Verdict { kPass, kFail, kSkip };

std::string_view VerdictName(Verdict verdict);

struct CheckOutcome {
  std::string check_id;
  Verdict verdict = Verdict::kPass;
  // Why a check was skipped (precondition not met).
  std::string reason;
  // Present iff verdict == kFail.
  std::optional<Witness> witness;

  bool passed() const { return verdict == Verdict::kPass; }
  bool failed() const { return verdict == Verdict::kFail; }
  bool skipped() const { return verdict == Verdict::kSkip; }

  static CheckOutcome Pass(std::string id);
  static CheckOutcome Skip(std::string id, std::string reason);
  static CheckOutcome Fail(std::string id, Witness witness);
};

// First index where lhs != rhs, or -1.
int FirstDifference(const PayoffVector& lhs, const PayoffVector& rhs);

// First index where lhs > rhs, or -1.
int FirstExcess(const PayoffVector& lhs, const PayoffVector& rhs);

// Pass if lhs == rhs exactly, otherwise a failure carrying both sides.
CheckOutcome CompareEqual(std::string id, const TuGame& v, std::string inputs,
                          const PayoffVector& lhs, const PayoffVector& rhs);

}  // namespace coopvals

#endif  // COOPVALS_CHECK_H_
