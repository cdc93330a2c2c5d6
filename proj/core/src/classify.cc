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

#include "coopvals/classify.h"

#include "coopvals/bounds.h"

namespace coopvals {

bool IsMonotonic(const TuGame& v) {
  // Adding one player never lowers the worth; includes v(empty) <= v(i).
  const Coalition::Mask grand = v.grand().mask();
  for (Coalition::Mask mask = 1; mask <= grand; ++mask) {
    for (Player i = 0; i < v.players(); ++i) {
      const Coalition s(mask);
      if (s.contains(i) && v[s.Without(i)] > v[s]) return false;
    }
  }
  return true;
}

bool IsSuperadditive(const TuGame& v) {
  // For every U and every split U = S + T with S holding U's lowest player.
  const Coalition::Mask grand = v.grand().mask();
  for (Coalition::Mask u = 1; u <= grand; ++u) {
    const Coalition::Mask low = u & (~u + 1);
    const Coalition::Mask rest = u & ~low;
    // S = low | sub for every sub of rest except the one giving S == U.
    for (Coalition::Mask sub = rest;; sub = (sub - 1) & rest) {
      const Coalition::Mask s = low | sub;
      if (s != u) {
        const Coalition::Mask t = u & ~s;
        if (v[Coalition(u)] < v[Coalition(s)] + v[Coalition(t)]) return false;
      }
      if (sub == 0) break;
    }
  }
  return true;
}

bool IsConvex(const TuGame& v) {
  const int n = v.players();
  const Coalition::Mask grand = v.grand().mask();
  for (Player i = 0; i < n; ++i) {
    for (Player j = i + 1; j < n; ++j) {
      const Coalition::Mask pair = (Coalition::Mask{1} << i) | (Coalition::Mask{1} << j);
      const Coalition::Mask others = grand & ~pair;
      for (Coalition::Mask sub = others;; sub = (sub - 1) & others) {
        const Coalition s(sub);
        const Rational lhs = v[s.With(i).With(j)] - v[s.With(j)];
        if (lhs < v[s.With(i)] - v[s]) return false;
        if (sub == 0) break;
      }
    }
  }
  return true;
}

bool IsWeaklyEssential(const TuGame& v) {
  return IndividualWorths(v).Sum() <= v.grand_worth();
}

bool IsEssential(const TuGame& v) {
  return IsWeaklyEssential(v) &&
         v.grand_worth() <= MarginalContributions(v).Sum();
}

bool IsSemiBalanced(const TuGame& v) {
  const int n = v.players();
  const Coalition grand = v.grand();
  PayoffVector complements(n);
  for (Player j = 0; j < n; ++j) complements[j] = v[grand.Without(j)];
  const std::vector<Rational> sums = CoalitionSums(complements);
  for (Coalition::Mask mask = 1; mask <= grand.mask(); ++mask) {
    const Coalition s(mask);
    if (v[s] + sums[mask] > s.size() * v.grand_worth()) return false;
  }
  return true;
}

ClassReport Classify(const TuGame& v) {
  ClassReport report;
  const Rational sum_nu = IndividualWorths(v).Sum();
  const Rational sum_m = MarginalContributions(v).Sum();
  const Rational& grand = v.grand_worth();
  report.monotonic = IsMonotonic(v);
  report.superadditive = IsSuperadditive(v);
  report.convex = IsConvex(v);
  report.weakly_essential = sum_nu <= grand;
  report.essential = report.weakly_essential && grand <= sum_m;
  report.semi_balanced = IsSemiBalanced(v);
  report.m_lower_class = grand >= sum_m;
  report.m_upper_class = grand <= sum_m;
  return report;
}

}  // namespace coopvals
