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

#include "coopvals/values.h"

#include <array>
#include <stdexcept>
#include <utility>

#include "coopvals/classify.h"
#include "coopvals/error.h"

namespace coopvals {
namespace {

void CheckLength(const TuGame& v, const BoundVector& b, std::string_view what) {
  if (b.size() != v.players()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::string(what) + " has " + std::to_string(b.size()) +
                    " entries, game has " + std::to_string(v.players()) + " players");
  }
}

ValueResult Named(ValueResult result, std::string id) {
  result.value_id = std::move(id);
  return result;
}

// mu_i + (v(N) - sum mu) / n.
Allocation LowerBoundClosedForm(const TuGame& v, const BoundVector& mu) {
  const Rational share = (v.grand_worth() - mu.Sum()) / v.players();
  Allocation out = mu;
  for (Player i = 0; i < out.size(); ++i) out[i] += share;
  return out;
}

constexpr std::array kValueIds = {
    ValueId::kTau,  ValueId::kChi,   ValueId::kGately,      ValueId::kCis,
    ValueId::kPansc, ValueId::kEansc, ValueId::kEgalitarian, ValueId::kKm,
};

}  // namespace

ValueResult Compromise(const TuGame& v, const BoundVector& lower,
                       const BoundVector& upper) {
  CheckLength(v, lower, "lower bound");
  CheckLength(v, upper, "upper bound");
  if (const int i = FirstExcess(lower, upper); i >= 0) {
    throw Error(ErrorCode::kBoundOrderViolated,
                "player " + std::to_string(i + 1) + ": lower " + ToString(lower[i]) +
                    " > upper " + ToString(upper[i]));
  }
  const Rational& grand = v.grand_worth();
  const Rational sum_lower = lower.Sum();
  const Rational sum_upper = upper.Sum();
  if (sum_lower > grand || grand > sum_upper) {
    throw Error(ErrorCode::kNotBalanced,
                "v(N) = " + ToString(grand) + " outside [" + ToString(sum_lower) +
                    ", " + ToString(sum_upper) + "]");
  }

  ValueResult result;
  result.value_id = "compromise";
  result.lower_used = lower;
  result.upper_used = upper;
  if (lower == upper) {
    result.allocation = lower;
    return result;
  }
  const Rational lambda = (grand - sum_lower) / (sum_upper - sum_lower);
  Allocation allocation(v.players());
  for (Player i = 0; i < v.players(); ++i) {
    allocation[i] = lower[i] + lambda * (upper[i] - lower[i]);
  }
  if (allocation.Sum() != grand) {
    throw std::logic_error("compromise allocation is not efficient");
  }
  result.allocation = std::move(allocation);
  result.lambda = lambda;
  return result;
}

ValueResult LbcValue(const TuGame& v, const BoundFunctional& lower) {
  const BoundVector mu = lower(v);
  CheckLength(v, mu, lower.name());
  if (mu.Sum() > v.grand_worth()) {
    throw NotInClassError("B_l(" + lower.name() + ")");
  }
  if (!lower.is_regular_lower()) {
    throw Error(ErrorCode::kNotRegularLowerBound, lower.name());
  }
  if (!lower(ShiftDown(v, mu)).IsZero()) {
    throw Error(ErrorCode::kNotRegularLowerBound,
                lower.name() + ": mu(v - mu(v)) != 0");
  }
  ValueResult result = Compromise(v, mu, EtaFromLower(v, mu));
  if (result.allocation != LowerBoundClosedForm(v, mu)) {
    throw std::logic_error("LBC compromise disagrees with its closed form");
  }
  return Named(std::move(result), "lbc(" + lower.name() + ")");
}

ValueResult UbcValue(const TuGame& v, const BoundFunctional& upper) {
  if (!upper.is_translation_covariant()) {
    throw Error(ErrorCode::kNonCovariantUpperBound, upper.name());
  }
  const BoundVector eta = upper(v);
  CheckLength(v, eta, upper.name());
  if (!IsStronglyBound(v, eta)) {
    throw NotInClassError("B_u(" + upper.name() + ")");
  }
  return Named(Compromise(v, ResidualLower(v, eta), eta), "ubc(" + upper.name() + ")");
}

ValueResult Tau(const TuGame& v) {
  if (!IsSemiBalanced(v)) throw NotInClassError(std::string(ValueClassName(ValueId::kTau)));
  return Named(UbcValue(v, Functional(BoundFunctionalId::kMarginalContributions)), "tau");
}

ValueResult Chi(const TuGame& v) {
  if (!IsWeaklyEssential(v)) {
    throw NotInClassError(std::string(ValueClassName(ValueId::kChi)));
  }
  return Named(UbcValue(v, Functional(BoundFunctionalId::kMilnorUpper)), "chi");
}

ValueResult Gately(const TuGame& v, GatelyMode mode) {
  if (!IsEssential(v)) {
    throw NotInClassError(std::string(ValueClassName(ValueId::kGately)));
  }
  const BoundVector nu = IndividualWorths(v);
  const BoundVector m = MarginalContributions(v);
  if (mode == GatelyMode::kStrict) {
    if (const int i = FirstExcess(nu, m); i >= 0) {
      throw Error(ErrorCode::kBoundOrderViolated,
                  "player " + std::to_string(i + 1) + ": v_i " + ToString(nu[i]) +
                      " > M_i " + ToString(m[i]));
    }
  }
  ValueResult result;
  result.value_id = "gately";
  result.lower_used = nu;
  result.upper_used = m;
  const Rational spread = m.Sum() - nu.Sum();
  if (spread == 0) {
    if (m != nu) {
      throw Error(ErrorCode::kDegenerateBounds,
                  "sum (M - nu) = 0 but M != nu component-wise");
    }
    result.allocation = nu;
    return result;
  }
  const Rational lambda = (v.grand_worth() - nu.Sum()) / spread;
  Allocation allocation(v.players());
  for (Player i = 0; i < v.players(); ++i) {
    allocation[i] = nu[i] + lambda * (m[i] - nu[i]);
  }
  result.allocation = std::move(allocation);
  result.lambda = lambda;
  return result;
}

ValueResult Cis(const TuGame& v) {
  if (!IsWeaklyEssential(v)) {
    throw NotInClassError(std::string(ValueClassName(ValueId::kCis)));
  }
  return Named(LbcValue(v, Functional(BoundFunctionalId::kIndividualWorths)), "cis");
}

ValueResult Pansc(const TuGame& v) {
  const BoundVector m = MarginalContributions(v);
  const Rational sum_m = m.Sum();
  const Rational& grand = v.grand_worth();
  if (grand < 0 || grand > sum_m) {
    throw NotInClassError(std::string(ValueClassName(ValueId::kPansc)));
  }
  const BoundVector zero(v.players());
  if (const int i = FirstExcess(zero, m); i >= 0) {
    throw Error(ErrorCode::kBoundOrderViolated,
                "player " + std::to_string(i + 1) + ": M_i = " + ToString(m[i]) + " < 0");
  }
  if (sum_m == 0 && grand != 0) {
    throw Error(ErrorCode::kDegenerateBounds, "sum M = 0 with v(N) != 0");
  }
  return Named(Compromise(v, zero, m), "pansc");
}

Allocation PanscFormula(const TuGame& v) {
  const BoundVector m = MarginalContributions(v);
  const Rational sum_m = m.Sum();
  if (sum_m == 0) throw Error(ErrorCode::kDegenerateBounds, "sum M = 0");
  return (v.grand_worth() / sum_m) * m;
}

ValueResult Egalitarian(const TuGame& v) {
  if (v.grand_worth() < 0) {
    throw NotInClassError(std::string(ValueClassName(ValueId::kEgalitarian)));
  }
  return Named(LbcValue(v, Functional(BoundFunctionalId::kZeroLower)), "egal");
}

ValueResult Eansc(const TuGame& v) {
  const BoundVector m = MarginalContributions(v);
  const Allocation closed_form = LowerBoundClosedForm(v, m);
  const Rational& grand = v.grand_worth();
  const Rational sum_m = m.Sum();

  ValueResult result;
  result.value_id = "eansc";
  result.allocation = closed_form;
  bool have_pair = false;
  // Upper bound route on v(N) <= sum M.
  if (v.players() >= 2 && grand <= sum_m) {
    ValueResult route = Compromise(v, EanscTildeLower(v), m);
    if (route.allocation != closed_form) {
      throw std::logic_error("EANSC (mu~, M) route disagrees with the closed form");
    }
    result.routes.emplace_back("(mu~,M)");
    result.lambda = route.lambda;
    result.lower_used = route.lower_used;
    result.upper_used = route.upper_used;
    have_pair = true;
  }
  // Lower bound route on v(N) >= sum M; preferred for reporting when valid.
  if (grand >= sum_m) {
    ValueResult route = Compromise(v, m, EtaFromLower(v, m));
    if (route.allocation != closed_form) {
      throw std::logic_error("EANSC (M, eta^M) route disagrees with the closed form");
    }
    result.routes.emplace_back("(M,eta^M)");
    result.lambda = route.lambda;
    result.lower_used = route.lower_used;
    result.upper_used = route.upper_used;
    have_pair = true;
  }
  if (!have_pair) throw std::logic_error("no EANSC bound pair route applies");
  return result;
}

ValueResult Km(const TuGame& v) {
  return Named(Compromise(v, KikutaLower(v), MilnorUpper(v)), "km");
}

std::span<const ValueId> AllValueIds() { return kValueIds; }

std::string_view ValueName(ValueId id) {
  switch (id) {
    case ValueId::kTau: return "tau";
    case ValueId::kChi: return "chi";
    case ValueId::kGately: return "gately";
    case ValueId::kCis: return "cis";
    case ValueId::kPansc: return "pansc";
    case ValueId::kEansc: return "eansc";
    case ValueId::kEgalitarian: return "egal";
    case ValueId::kKm: return "km";
  }
  return "unknown";
}

std::optional<ValueId> ParseValueId(std::string_view name) {
  for (ValueId id : kValueIds) {
    if (ValueName(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view ValueClassName(ValueId id) {
  switch (id) {
    case ValueId::kTau: return "semi-balanced";
    case ValueId::kChi: return "weakly essential";
    case ValueId::kGately: return "essential";
    case ValueId::kCis: return "weakly essential";
    case ValueId::kPansc: return "0 <= v(N) <= sum M";
    case ValueId::kEgalitarian: return "v(N) >= 0";
    case ValueId::kEansc:
    case ValueId::kKm: return "all games";
  }
  return "unknown";
}

ValueResult ComputeValue(ValueId id, const TuGame& v) {
  switch (id) {
    case ValueId::kTau: return Tau(v);
    case ValueId::kChi: return Chi(v);
    case ValueId::kGately: return Gately(v);
    case ValueId::kCis: return Cis(v);
    case ValueId::kPansc: return Pansc(v);
    case ValueId::kEansc: return Eansc(v);
    case ValueId::kEgalitarian: return Egalitarian(v);
    case ValueId::kKm: return Km(v);
  }
  throw std::invalid_argument("unknown value id");
}

}  // namespace coopvals
