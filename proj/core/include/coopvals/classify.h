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

#ifndef COOPVALS_CLASSIFY_H_
#define COOPVALS_CLASSIFY_H_

#include "coopvals/game.h"

namespace coopvals {

struct ClassReport {
  bool monotonic = false;
  bool superadditive = false;
  bool convex = false;
  // sum v_i <= v(N) <= sum M_i.
  bool essential = false;
  // sum v_i <= v(N): the imputation set is nonempty.
  bool weakly_essential = false;
  bool semi_balanced = false;
  // v(N) >= sum M_j.
  bool m_lower_class = false;
  // v(N) <= sum M_j.
  bool m_upper_class = false;
};

ClassReport Classify(const TuGame& v);

// Individual predicates, for callers that need only one.
bool IsMonotonic(const TuGame& v);
// O(3^n) over disjoint pairs.
bool IsSuperadditive(const TuGame& v);
// Pairwise marginal test, O(n^2 2^n): for i != j and S without i, j,
// v(S+i+j) - v(S+j) >= v(S+i) - v(S).
bool IsConvex(const TuGame& v);
bool IsEssential(const TuGame& v);
bool IsWeaklyEssential(const TuGame& v);
// v(S) + sum_{j in S} v(N-j) <= |S| v(N) for every nonempty S.
bool IsSemiBalanced(const TuGame& v);

}  // namespace coopvals

#endif  // COOPVALS_CLASSIFY_H_
