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

#ifndef COOPVALS_GAME_H_
#define COOPVALS_GAME_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coopvals/coalition.h"
#include "coopvals/rational.h"

namespace coopvals {

inline constexpr int kDefaultPlayerCap = 20;

// Player cap in effect: COOPVALS_MAX_PLAYERS if set to an integer in
// [1, kMaxSupportedPlayers], kDefaultPlayerCap otherwise.
int PlayerCap();

// A TU-game: exact worths for all 2^n coalitions, worth(empty) == 0.
// Immutable once built; safe to share across threads.
class TuGame {
 public:
  // Dense construction. `worths` must have exactly 2^n entries and a zero
  // at index 0. Throws on violation.
  static TuGame FromTable(int n, std::vector<Rational> worths,
                          int cap = PlayerCap());

  int players() const { return n_; }
  Coalition grand() const { return Coalition::Grand(n_); }
  size_t coalition_count() const { return worths_.size(); }

  // Throws Error(kInvalidPlayerIndex) if `s` uses players outside 0..n-1.
  const Rational& worth(Coalition s) const;
  const Rational& operator[](Coalition s) const { return worths_[s.mask()]; }
  const Rational& grand_worth() const { return worths_.back(); }
  const Rational& singleton(Player i) const { return worths_[Coalition::Mask{1} << i]; }

  std::span<const Rational> table() const { return worths_; }

  // Optional display names, one per player, or empty.
  const std::vector<std::string>& labels() const { return labels_; }
  TuGame WithLabels(std::vector<std::string> labels) const;

  friend bool operator==(const TuGame& a, const TuGame& b) {
    return a.n_ == b.n_ && a.worths_ == b.worths_;
  }

 private:
  TuGame(int n, std::vector<Rational> worths)
      : n_(n), worths_(std::move(worths)) {}

  int n_ = 0;
  std::vector<Rational> worths_;
  std::vector<std::string> labels_;
};

// Sparse construction; unspecified coalitions are worth 0.
// Errors: kPlayerCountExceeded, kDuplicateCoalition, kNonzeroEmptyCoalition,
// kInvalidPlayerIndex.
TuGame BuildGame(int n, std::span<const std::pair<Coalition, Rational>> entries,
                 int cap = PlayerCap());
TuGame BuildGame(int n,
                 std::initializer_list<std::pair<Coalition, Rational>> entries,
                 int cap = PlayerCap());

TuGame ZeroGame(int n);
// v(S) = sum of x_i over S.
TuGame AdditiveGame(const PayoffVector& x);
// u_T(S) = 1 iff T is a subset of S. T must be nonempty.
TuGame UnanimityGame(int n, Coalition carrier);
// Standard base b_S: 1 on S, 0 elsewhere. Throws kEmptyBaseCoalition.
TuGame BaseGame(int n, Coalition s);

// v*(S) = v(N) - v(N \ S).
TuGame Dual(const TuGame& v);

// (v_1, ..., v_n).
Allocation IndividualWorths(const TuGame& v);

// v - nu(v): every singleton worth becomes 0.
TuGame ZeroNormalise(const TuGame& v);

// w(S) = scale * v(S) + shift(S). Throws kNonPositiveScale if scale <= 0.
TuGame Transform(const TuGame& v, const Rational& scale,
                 const PayoffVector& shift);

// v + x and v - x for an additive shift.
TuGame Shift(const TuGame& v, const PayoffVector& x);
TuGame ShiftDown(const TuGame& v, const PayoffVector& x);

// x(S) for every coalition, as a dense table of size 2^n.
std::vector<Rational> CoalitionSums(const PayoffVector& x);

}  // namespace coopvals

#endif  // COOPVALS_GAME_H_
