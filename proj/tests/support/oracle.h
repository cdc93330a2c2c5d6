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

#ifndef COOPVALS_TESTS_SUPPORT_ORACLE_H_
#define COOPVALS_TESTS_SUPPORT_ORACLE_H_

// Brute-force reference implementations for the tests. They work on explicit
// member lists and the defining formulas only; nothing here calls the bound,
// value or classification code under test.

#include <vector>

#include "coopvals/game.h"
#include "coopvals/rational.h"

namespace coopvals::oracle {

using Members = std::vector<int>;

// Every subset of {0, ..., n-1}, the empty set included.
std::vector<Members> AllSubsets(int n);

Rational Worth(const TuGame& v, const Members& s);
Members Without(const Members& s, int i);
Members Complement(const Members& s, int n);
bool Contains(const Members& s, int i);

std::vector<Rational> Marginal(const TuGame& v);                    // v(N) - v(N - i)
std::vector<Rational> MinimalRights(const TuGame& v);               // max_{S ni i} v(S) - M(S - i)
std::vector<Rational> Residual(const TuGame& v, const std::vector<Rational>& eta);
std::vector<Rational> KikutaMin(const TuGame& v);                   // min_{S ni i} v(S) - v(S - i)
std::vector<Rational> MilnorMax(const TuGame& v);                   // max_{S ni i} v(S) - v(S - i)

// Worth table of the dual, indexed like TuGame::table().
std::vector<Rational> DualTable(const TuGame& v);

bool ConvexByPairs(const TuGame& v);  // v(S u T) + v(S n T) >= v(S) + v(T)
bool Superadditive(const TuGame& v);  // disjoint S, T
bool Monotonic(const TuGame& v);      // S subset T => v(S) <= v(T)
bool SemiBalanced(const TuGame& v);   // v(S) + sum_{j in S} v(N - j) <= |S| v(N)

// lo + (hi - lo) * (v(N) - sum lo) / sum (hi - lo); requires sum (hi - lo) != 0.
std::vector<Rational> Balance(const TuGame& v, const std::vector<Rational>& lo,
                              const std::vector<Rational>& hi);

}  // namespace coopvals::oracle

#endif  // COOPVALS_TESTS_SUPPORT_ORACLE_H_
