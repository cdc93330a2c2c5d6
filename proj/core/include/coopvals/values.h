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

#ifndef COOPVALS_VALUES_H_
#define COOPVALS_VALUES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coopvals/bounds.h"
#include "coopvals/game.h"
#include "coopvals/rational.h"

namespace coopvals {

// An allocation together with the bounds it was balanced between.
//   sum(allocation) == v(N)
//   lower_used <= allocation <= upper_used   (except Gately in formula mode
//                                             when nu and M cross)
//   allocation == lambda * upper_used + (1 - lambda) * lower_used
// `lambda` is the weight on the upper bound; absent when the bounds coincide.
struct ValueResult {
  std::string value_id;
  Allocation allocation;
  std::optional<Rational> lambda;
  BoundVector lower_used;
  BoundVector upper_used;
  // Bound pair reconstructions that were verified against the closed form
  // (EANSC only), e.g. "(M,eta^M)".
  std::vector<std::string> routes;
};

// The unique efficient point on the segment [lower, upper].
// Errors: kLengthMismatch, kBoundOrderViolated (some lower_i > upper_i),
// kNotBalanced (v(N) outside [sum lower, sum upper]).
ValueResult Compromise(const TuGame& v, const BoundVector& lower,
                       const BoundVector& upper);

// Lower bound compromise: balance mu(v) against eta^mu(v). The result is
// cross-checked against mu_i + (v(N) - sum mu) / n.
// Errors: NotInClassError (sum mu > v(N)), kNotRegularLowerBound.
ValueResult LbcValue(const TuGame& v, const BoundFunctional& lower);

// Upper bound compromise: balance mu^eta(v) against eta(v).
// Errors: kNonCovariantUpperBound, NotInClassError (not strongly eta-bound),
// kNotBalanced.
ValueResult UbcValue(const TuGame& v, const BoundFunctional& upper);

// Tau value, the M-UBC value on semi-balanced games.
ValueResult Tau(const TuGame& v);

// Chi value, the Milnor-UBC value on weakly essential games.
ValueResult Chi(const TuGame& v);

enum class GatelyMode {
  // Evaluate the closed form whenever the game is essential and
  // sum (M - nu) > 0.
  kFormula,
  // Additionally require nu <= M component-wise.
  kStrict,
};

// Gately value, the (nu, M) compromise on essential games.
ValueResult Gately(const TuGame& v, GatelyMode mode = GatelyMode::kFormula);

// Centre of the imputation set, the nu-LBC value.
ValueResult Cis(const TuGame& v);

// Proportional allocation of non-separable contributions, the (0, M)
// compromise. Requires 0 <= v(N) <= sum M and M >= 0.
ValueResult Pansc(const TuGame& v);

// The proportional display formula M_i v(N) / sum M on its own, with no class
// guard: it only needs sum M != 0 (kDegenerateBounds otherwise). Outside
// 0 <= v(N) <= sum M the result leaves the segment [0, M].
Allocation PanscFormula(const TuGame& v);

// v(N)/n to everybody, the zero-LBC value. Requires v(N) >= 0.
ValueResult Egalitarian(const TuGame& v);

// Egalitarian allocation of non-separable contributions. Defined on every
// game; the closed form is checked against whichever bound pair route
// covers v: (mu~, M) when v(N) <= sum M, (M, eta^M) when v(N) >= sum M.
ValueResult Eansc(const TuGame& v);

// Kikuta-Milnor value, total on the game space.
ValueResult Km(const TuGame& v);

enum class ValueId { kTau, kChi, kGately, kCis, kPansc, kEansc, kEgalitarian, kKm };

std::span<const ValueId> AllValueIds();
// CLI name: tau, chi, gately, cis, pansc, eansc, egal, km.
std::string_view ValueName(ValueId id);
std::optional<ValueId> ParseValueId(std::string_view name);
// Name of the class of games the value is defined on.
std::string_view ValueClassName(ValueId id);

ValueResult ComputeValue(ValueId id, const TuGame& v);

}  // namespace coopvals

#endif  // COOPVALS_VALUES_H_
