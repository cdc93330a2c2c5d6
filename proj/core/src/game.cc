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

#include "coopvals/game.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "coopvals/error.h"

namespace coopvals {
namespace {

void CheckPlayerCount(int n, int cap) {
  const int limit = std::min(cap, kMaxSupportedPlayers);
  if (n < 1 || n > limit) {
    throw Error(ErrorCode::kPlayerCountExceeded,
                "player count " + std::to_string(n) + " outside [1, " +
                    std::to_string(limit) + "]");
  }
}

void CheckShiftLength(const TuGame& v, const PayoffVector& x) {
  if (x.size() != v.players()) {
    throw Error(ErrorCode::kLengthMismatch,
                "vector has " + std::to_string(x.size()) + " entries, game has " +
                    std::to_string(v.players()) + " players");
  }
}

}  // namespace

int PlayerCap() {
  const char* env = std::getenv("COOPVALS_MAX_PLAYERS");
  if (env == nullptr) return kDefaultPlayerCap;
  const std::string_view text(env);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 ||
      value > kMaxSupportedPlayers) {
    return kDefaultPlayerCap;
  }
  return value;
}

TuGame TuGame::FromTable(int n, std::vector<Rational> worths, int cap) {
  CheckPlayerCount(n, cap);
  if (worths.size() != (size_t{1} << n)) {
    throw Error(ErrorCode::kLengthMismatch,
                "worth table must have 2^" + std::to_string(n) + " entries");
  }
  if (worths[0] != 0) {
    throw Error(ErrorCode::kNonzeroEmptyCoalition, "v(empty) = " + ToString(worths[0]));
  }
  return TuGame(n, std::move(worths));
}

const Rational& TuGame::worth(Coalition s) const {
  if (!s.ValidFor(n_)) {
    throw Error(ErrorCode::kInvalidPlayerIndex,
                "coalition {" + CoalitionKey(s) + "} in a " + std::to_string(n_) +
                    "-player game");
  }
  return worths_[s.mask()];
}

TuGame TuGame::WithLabels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw Error(ErrorCode::kLengthMismatch, "one label per player expected");
  }
  TuGame copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

TuGame BuildGame(int n, std::span<const std::pair<Coalition, Rational>> entries,
                 int cap) {
  CheckPlayerCount(n, cap);
  std::vector<Rational> worths(size_t{1} << n);
  std::vector<bool> seen(worths.size(), false);
  for (const auto& [s, worth] : entries) {
    if (!s.ValidFor(n)) {
      throw Error(ErrorCode::kInvalidPlayerIndex,
                  "coalition {" + CoalitionKey(s) + "} in a " + std::to_string(n) +
                      "-player game");
    }
    if (seen[s.mask()]) {
      throw Error(ErrorCode::kDuplicateCoalition, "{" + CoalitionKey(s) + "}");
    }
    if (s.empty() && worth != 0) {
      throw Error(ErrorCode::kNonzeroEmptyCoalition, "v(empty) = " + ToString(worth));
    }
    seen[s.mask()] = true;
    worths[s.mask()] = worth;
  }
  return TuGame::FromTable(n, std::move(worths), cap);
}

TuGame BuildGame(int n,
                 std::initializer_list<std::pair<Coalition, Rational>> entries,
                 int cap) {
  return BuildGame(n, std::span(entries.begin(), entries.size()), cap);
}

TuGame ZeroGame(int n) { return BuildGame(n, {}); }

std::vector<Rational> CoalitionSums(const PayoffVector& x) {
  const size_t size = size_t{1} << x.size();
  std::vector<Rational> sums(size);
  for (size_t mask = 1; mask < size; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + x[low];
  }
  return sums;
}

TuGame AdditiveGame(const PayoffVector& x) {
  return TuGame::FromTable(x.size(), CoalitionSums(x));
}

TuGame UnanimityGame(int n, Coalition carrier) {
  if (carrier.empty()) {
    throw Error(ErrorCode::kEmptyBaseCoalition, "unanimity carrier must be nonempty");
  }
  if (!carrier.ValidFor(n)) {
    throw Error(ErrorCode::kInvalidPlayerIndex, "carrier outside player set");
  }
  std::vector<Rational> worths(size_t{1} << n);
  for (Coalition::Mask mask = 0; mask < worths.size(); ++mask) {
    if (carrier.SubsetOf(Coalition(mask))) worths[mask] = 1;
  }
  return TuGame::FromTable(n, std::move(worths));
}

TuGame BaseGame(int n, Coalition s) {
  if (s.empty()) {
    throw Error(ErrorCode::kEmptyBaseCoalition, "standard base needs S nonempty");
  }
  return BuildGame(n, {{s, Rational(1)}});
}

TuGame Dual(const TuGame& v) {
  const Coalition::Mask grand = v.grand().mask();
  std::vector<Rational> worths(v.coalition_count());
  for (Coalition::Mask mask = 1; mask <= grand; ++mask) {
    worths[mask] = v.grand_worth() - v[Coalition(grand & ~mask)];
  }
  return TuGame::FromTable(v.players(), std::move(worths));
}

Allocation IndividualWorths(const TuGame& v) {
  Allocation nu(v.players());
  for (Player i = 0; i < v.players(); ++i) nu[i] = v.singleton(i);
  return nu;
}

TuGame ZeroNormalise(const TuGame& v) { return ShiftDown(v, IndividualWorths(v)); }

TuGame Transform(const TuGame& v, const Rational& scale, const PayoffVector& shift) {
  if (scale <= 0) {
    throw Error(ErrorCode::kNonPositiveScale, "scale " + ToString(scale));
  }
  CheckShiftLength(v, shift);
  const std::vector<Rational> sums = CoalitionSums(shift);
  std::vector<Rational> worths(v.coalition_count());
  for (size_t mask = 1; mask < worths.size(); ++mask) {
    worths[mask] = scale * v.table()[mask] + sums[mask];
  }
  return TuGame::FromTable(v.players(), std::move(worths)).WithLabels(v.labels());
}

TuGame Shift(const TuGame& v, const PayoffVector& x) { return Transform(v, 1, x); }

TuGame ShiftDown(const TuGame& v, const PayoffVector& x) {
  CheckShiftLength(v, x);
  return Transform(v, 1, Rational(-1) * x);
}

}  // namespace coopvals
