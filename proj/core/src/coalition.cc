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

#include "coopvals/coalition.h"

#include <stdexcept>

namespace coopvals {

Coalition Coalition::Of(std::initializer_list<Player> players) {
  Mask mask = 0;
  for (Player i : players) {
    if (i < 0 || i >= kMaxSupportedPlayers) {
      throw std::out_of_range("player index out of range");
    }
    mask |= Mask{1} << i;
  }
  return Coalition(mask);
}

std::string CoalitionKey(Coalition s) {
  std::string key;
  for (Player i = 0; i < 32; ++i) {
    if (!s.contains(i)) continue;
    if (!key.empty()) key += ',';
    key += std::to_string(i + 1);
  }
  return key;
}

}  // namespace coopvals
