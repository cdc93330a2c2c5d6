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

#ifndef COOPVALS_COALITION_H_
#define COOPVALS_COALITION_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace coopvals {

// Players are 0-based internally; files and the CLI use 1-based indices.
using Player = int;

// Hard limit of the bit encoding. The configurable cap (see PlayerCap) is
// always at or below this.
inline constexpr int kMaxSupportedPlayers = 30;

// A set of players encoded as a bit pattern, player i <-> bit i.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask mask) : mask_(mask) {}

  static Coalition Of(std::initializer_list<Player> players);
  static constexpr Coalition Singleton(Player i) { return Coalition(Mask{1} << i); }
  static constexpr Coalition Grand(int n) {
    return Coalition(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(Player i) const { return (mask_ >> i) & 1u; }
  constexpr bool SubsetOf(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // No bit at or above position n.
  constexpr bool ValidFor(int n) const { return SubsetOf(Grand(n)); }

  constexpr Coalition With(Player i) const { return Coalition(mask_ | (Mask{1} << i)); }
  constexpr Coalition Without(Player i) const {
    return Coalition(mask_ & ~(Mask{1} << i));
  }
  constexpr Coalition ComplementIn(int n) const {
    return Coalition(Grand(n).mask_ & ~mask_);
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  Mask mask_ = 0;
};

// 1-based comma separated key, e.g. {0,2} -> "1,3". The empty coalition is "".
std::string CoalitionKey(Coalition s);

}  // namespace coopvals

#endif  // COOPVALS_COALITION_H_
