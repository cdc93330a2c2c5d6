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

#include "coopvals/bounds.h"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coopvals/error.h"

namespace coopvals {
namespace {

// Extremes of v(S) - v(S-i) over S containing i.
template <typename Better>
BoundVector MarginalExtreme(const TuGame& v, Better better) {
  const int n = v.players();
  BoundVector out(n);
  std::vector<bool> set(static_cast<size_t>(n), false);
  const Coalition::Mask grand = v.grand().mask();
  for (Coalition::Mask mask = 1; mask <= grand; ++mask) {
    const Coalition s(mask);
    for (Coalition::Mask rest = mask; rest != 0; rest &= rest - 1) {
      const Player i = std::countr_zero(rest);
      Rational marginal = v[s] - v[s.Without(i)];
      if (!set[i] || better(marginal, out[i])) {
        out[i] = std::move(marginal);
        set[i] = true;
      }
    }
  }
  return out;
}

void CheckLength(const TuGame& v, const BoundVector& b) {
  if (b.size() != v.players()) {
    throw Error(ErrorCode::kLengthMismatch,
                "bound vector has " + std::to_string(b.size()) +
                    " entries, game has " + std::to_string(v.players()) + " players");
  }
}

std::vector<BoundFunctional> MakeRegistry() {
  const auto zero = [](const TuGame& v) { return BoundVector(v.players()); };
  const auto eta_trivial = [](const TuGame& v) {
    return BoundVector::Constant(v.players(), v.grand_worth());
  };
  std::vector<BoundFunctional> reg;
  reg.emplace_back(BoundFunctionalId::kMarginalContributions, "marginal-contributions",
                   MarginalContributions, true, true);
  reg.emplace_back(BoundFunctionalId::kMinimalRights, "minimal-rights",
                   [](const TuGame& v) {
                     return ResidualLower(v, MarginalContributions(v));
                   },
                   true, true);
  reg.emplace_back(BoundFunctionalId::kKikutaLower, "kikuta-lower", KikutaLower,
                   true, true);
  reg.emplace_back(BoundFunctionalId::kMilnorUpper, "milnor-upper", MilnorUpper,
                   true, true);
  reg.emplace_back(BoundFunctionalId::kIndividualWorths, "individual-worths",
                   IndividualWorths, true, true);
  reg.emplace_back(BoundFunctionalId::kZeroLower, "zero-lower", zero, false, true);
  reg.emplace_back(BoundFunctionalId::kEtaTrivial, "eta-trivial", eta_trivial,
                   false, false);
  reg.emplace_back(BoundFunctionalId::kEtaPrime, "eta-prime",
                   [](const TuGame& v) { return EtaFromLower(v, IndividualWorths(v)); },
                   true, true);
  reg.emplace_back(BoundFunctionalId::kEanscTildeLower, "eansc-tilde-lower",
                   EanscTildeLower, true, true);
  reg.emplace_back(BoundFunctionalId::kEtaFromM, "eta-from-m",
                   [](const TuGame& v) {
                     return EtaFromLower(v, MarginalContributions(v));
                   },
                   true, true);
  return reg;
}

constexpr std::array kRegistryIds = {
    BoundFunctionalId::kMarginalContributions, BoundFunctionalId::kMinimalRights,
    BoundFunctionalId::kKikutaLower,           BoundFunctionalId::kMilnorUpper,
    BoundFunctionalId::kIndividualWorths,      BoundFunctionalId::kZeroLower,
    BoundFunctionalId::kEtaTrivial,            BoundFunctionalId::kEtaPrime,
    BoundFunctionalId::kEanscTildeLower,       BoundFunctionalId::kEtaFromM,
};

}  // namespace

BoundVector MarginalContributions(const TuGame& v) {
  const Coalition grand = v.grand();
  BoundVector m(v.players());
  for (Player i = 0; i < v.players(); ++i) {
    m[i] = v.grand_worth() - v[grand.Without(i)];
  }
  return m;
}

BoundVector KikutaLower(const TuGame& v) {
  return MarginalExtreme(v, [](const Rational& a, const Rational& b) { return a < b; });
}

BoundVector MilnorUpper(const TuGame& v) {
  return MarginalExtreme(v, [](const Rational& a, const Rational& b) { return a > b; });
}

BoundVector EtaFromLower(const TuGame& v, const BoundVector& lower) {
  CheckLength(v, lower);
  const Rational total = lower.Sum();
  BoundVector eta(v.players());
  for (Player i = 0; i < v.players(); ++i) {
    eta[i] = v.grand_worth() - (total - lower[i]);
  }
  return eta;
}

BoundVector ResidualLower(const TuGame& v, const BoundVector& upper) {
  CheckLength(v, upper);
  const int n = v.players();
  const std::vector<Rational> sums = CoalitionSums(upper);
  BoundVector out(n);
  std::vector<bool> set(static_cast<size_t>(n), false);
  const Coalition::Mask grand = v.grand().mask();
  for (Coalition::Mask mask = 1; mask <= grand; ++mask) {
    const Rational& worth = v[Coalition(mask)];
    for (Coalition::Mask rest = mask; rest != 0; rest &= rest - 1) {
      const Player i = std::countr_zero(rest);
      // R_i(S, v) = v(S) - sum_{j in S-i} eta_j.
      Rational residual = worth - (sums[mask] - upper[i]);
      if (!set[i] || residual > out[i]) {
        out[i] = std::move(residual);
        set[i] = true;
      }
    }
  }
  return out;
}

BoundVector EanscTildeLower(const TuGame& v) {
  const int n = v.players();
  if (n < 2) {
    throw Error(ErrorCode::kTooFewPlayers, "mu~ needs at least two players");
  }
  const BoundVector m = MarginalContributions(v);
  const Rational residual = (v.grand_worth() - m.Sum()) / (n - 1);
  BoundVector tilde(n);
  for (Player i = 0; i < n; ++i) tilde[i] = m[i] + residual;
  const Rational total = tilde.Sum();
  for (Player i = 0; i < n; ++i) {
    if (total - tilde[i] != v[v.grand().Without(i)]) {
      throw std::logic_error("mu~ does not solve sum_{j != i} mu~_j = v(N-i)");
    }
  }
  return tilde;
}

BoundFunctional::BoundFunctional(BoundFunctionalId id, std::string name, Rule rule,
                                 bool translation_covariant, bool regular_lower)
    : id_(id),
      name_(std::move(name)),
      rule_(std::move(rule)),
      covariant_(translation_covariant),
      regular_lower_(regular_lower) {}

const BoundFunctional& Functional(BoundFunctionalId id) {
  static const std::vector<BoundFunctional> registry = MakeRegistry();
  for (const BoundFunctional& f : registry) {
    if (f.id() == id) return f;
  }
  throw std::invalid_argument("functional is not a registry entry");
}

std::span<const BoundFunctionalId> RegistryIds() { return kRegistryIds; }

std::string_view FunctionalName(BoundFunctionalId id) {
  switch (id) {
    case BoundFunctionalId::kDerived: return "derived";
    case BoundFunctionalId::kConstant: return "constant";
    default: return Functional(id).name();
  }
}

std::optional<BoundFunctionalId> ParseFunctionalId(std::string_view name) {
  for (BoundFunctionalId id : kRegistryIds) {
    if (FunctionalName(id) == name) return id;
  }
  return std::nullopt;
}

BoundFunctional DerivedLowerFromUpper(const BoundFunctional& upper) {
  if (!upper.is_translation_covariant()) {
    throw Error(ErrorCode::kNonCovariantUpperBound, upper.name());
  }
  BoundFunctional::Rule eta = [upper](const TuGame& v) { return upper(v); };
  return BoundFunctional(
      BoundFunctionalId::kDerived, "residual-lower(" + upper.name() + ")",
      [eta](const TuGame& v) { return ResidualLower(v, eta(v)); }, true, true);
}

BoundFunctional DerivedUpperFromLower(const BoundFunctional& lower) {
  return BoundFunctional(
      BoundFunctionalId::kDerived, "residual-upper(" + lower.name() + ")",
      [lower](const TuGame& v) { return EtaFromLower(v, lower(v)); },
      lower.is_translation_covariant(), lower.is_translation_covariant());
}

BoundFunctional ConstantLower(PayoffVector value) {
  const bool zero = value.IsZero();
  return BoundFunctional(
      BoundFunctionalId::kConstant, "constant(" + ToString(value) + ")",
      [value](const TuGame& v) {
        CheckLength(v, value);
        return value;
      },
      false, zero);
}

BoundVector MuFromUpper(const TuGame& v, const BoundFunctional& upper) {
  if (!upper.is_translation_covariant()) {
    throw Error(ErrorCode::kNonCovariantUpperBound, upper.name());
  }
  return ResidualLower(v, upper(v));
}

BoundPairReport CheckBoundPair(const TuGame& v, const BoundFunctional& lower,
                               const BoundFunctional& upper) {
  BoundPairReport report;
  const std::string inputs = "(" + lower.name() + ", " + upper.name() + ")";
  const BoundVector mu = lower(v);
  const BoundVector eta = upper(v);
  CheckLength(v, mu);
  CheckLength(v, eta);

  const int excess = FirstExcess(mu, eta);
  report.property_i_holds = excess < 0;
  if (!report.property_i_holds) {
    report.property_i_witness = Witness{v, inputs + " mu(v) <= eta(v)", mu, eta, excess};
  }

  const TuGame reduced = ShiftDown(v, mu);
  const BoundVector mu_reduced = lower(reduced);
  const BoundVector zero(v.players());
  const int a_diff = FirstDifference(mu_reduced, zero);
  report.property_iia_holds = a_diff < 0;
  if (!report.property_iia_holds) {
    report.property_iia_witness =
        Witness{v, inputs + " mu(v - mu(v)) = 0", mu_reduced, zero, a_diff};
  }

  const BoundVector eta_reduced = upper(reduced);
  const BoundVector expected = eta - mu;
  const int b_diff = FirstDifference(eta_reduced, expected);
  report.property_iib_holds = b_diff < 0;
  if (!report.property_iib_holds) {
    report.property_iib_witness = Witness{
        v, inputs + " eta(v - mu(v)) = eta(v) - mu(v)", eta_reduced, expected, b_diff};
  }
  return report;
}

CheckOutcome IsRegularLower(const TuGame& v, const BoundFunctional& lower) {
  const BoundVector mu = lower(v);
  CheckLength(v, mu);
  if (mu.Sum() > v.grand_worth()) {
    throw NotInClassError("B_l(" + lower.name() + ")");
  }
  const BoundVector reduced = lower(ShiftDown(v, mu));
  return CompareEqual("regular-lower/" + lower.name(), v, "mu(v - mu(v)) = 0",
                      reduced, BoundVector(v.players()));
}

CheckOutcome CheckTranslationCovariance(const BoundFunctional& f, const TuGame& v,
                                        const PayoffVector& x) {
  return CompareEqual("translation-covariance/" + f.name(), v,
                      "f(v + x) = f(v) + x, x = (" + ToString(x) + ")",
                      f(Shift(v, x)), f(v) + x);
}

bool IsStronglyBound(const TuGame& v, const BoundVector& upper) {
  CheckLength(v, upper);
  const std::vector<Rational> sums = CoalitionSums(upper);
  for (size_t mask = 1; mask < sums.size(); ++mask) {
    if (v.table()[mask] > sums[mask]) return false;
  }
  return true;
}

bool InBHat(const TuGame& v) {
  const BoundVector nu = IndividualWorths(v);
  const Rational surplus = v.grand_worth() - nu.Sum();
  const std::vector<Rational> sums = CoalitionSums(nu);
  for (size_t mask = 1; mask < sums.size(); ++mask) {
    const int size = std::popcount(mask);
    if (v.table()[mask] - sums[mask] > (size - 1) * surplus) return false;
  }
  return true;
}

bool InBTilde(const TuGame& v) {
  return v.grand_worth() <= MarginalContributions(v).Sum();
}

MembershipReport Membership(const TuGame& v, const BoundFunctional& lower,
                            const BoundFunctional& upper) {
  MembershipReport report;
  const BoundVector mu = lower(v);
  const BoundVector eta = upper(v);
  CheckLength(v, mu);
  CheckLength(v, eta);
  const Rational& grand = v.grand_worth();
  const Rational sum_eta = eta.Sum();
  report.in_lower_class = mu.Sum() <= grand;
  report.in_balanced = report.in_lower_class && grand <= sum_eta;
  report.in_strong_upper = IsStronglyBound(v, eta);
  if (upper.is_translation_covariant()) {
    const BoundVector residual = ResidualLower(v, eta);
    report.in_proper_upper = report.in_strong_upper && residual.Sum() <= grand &&
                             grand <= sum_eta;
  }
  report.in_b_hat = InBHat(v);
  report.in_b_tilde = InBTilde(v);
  return report;
}

}  // namespace coopvals
