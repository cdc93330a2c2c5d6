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

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "coopvals/bounds.h"
#include "coopvals/error.h"
#include "coopvals/game.h"
#include "oracle.h"
#include "test_games.h"

namespace coopvals {
namespace {

using C = Coalition;
using F = BoundFunctionalId;
using testing::FamilyGame;
using testing::Q;

PayoffVector Vec(const std::vector<Rational>& x) { return PayoffVector(x); }

TEST(MarginalContributionsTest, Examples) {
  EXPECT_EQ(MarginalContributions(FamilyGame(6)), (PayoffVector{2, 2, 2}));
  EXPECT_EQ(MarginalContributions(testing::Additive123()), (PayoffVector{1, 2, 3}));
  EXPECT_EQ(MarginalContributions(testing::Unanimity12()), (PayoffVector{1, 1, 0}));
}

TEST(KikutaMilnorTest, Examples) {
  EXPECT_EQ(KikutaLower(FamilyGame(6)), (PayoffVector{1, 1, 2}));
  EXPECT_EQ(KikutaLower(testing::Additive123()), (PayoffVector{1, 2, 3}));
  EXPECT_EQ(KikutaLower(testing::Unanimity12()), PayoffVector(3));
  EXPECT_EQ(MilnorUpper(FamilyGame(6)), (PayoffVector{5, 5, 5}));
  EXPECT_EQ(MilnorUpper(testing::Additive123()), (PayoffVector{1, 2, 3}));
}

TEST(KikutaMilnorTest, AgreeWithBruteForce) {
  for (const TuGame& v : testing::RandomGames(31, 200, 1, 5, GameClassFilter::kAny, 3)) {
    EXPECT_EQ(KikutaLower(v), Vec(oracle::KikutaMin(v)));
    EXPECT_EQ(MilnorUpper(v), Vec(oracle::MilnorMax(v)));
    EXPECT_EQ(MarginalContributions(v), Vec(oracle::Marginal(v)));
  }
}

TEST(MilnorUpperTest, EqualsMarginalsOnConvexGames) {
  for (const TuGame& v : testing::RandomGames(32, 100, 2, 6, GameClassFilter::kConvex)) {
    EXPECT_EQ(MilnorUpper(v), MarginalContributions(v));
  }
}

TEST(EtaFromLowerTest, Examples) {
  const TuGame g6 = FamilyGame(6);
  EXPECT_EQ(EtaFromLower(g6, PayoffVector{1, 1, 2}), (PayoffVector{5, 5, 6}));
  EXPECT_EQ(EtaFromLower(g6, PayoffVector(3)), PayoffVector::Constant(3, 8));
  EXPECT_EQ(EtaFromLower(g6, PayoffVector{2, 2, 2}), (PayoffVector{4, 4, 4}));
  EXPECT_THROW(EtaFromLower(g6, PayoffVector{1, 1}), Error);
}

TEST(ResidualLowerTest, Examples) {
  EXPECT_EQ(ResidualLower(FamilyGame(2), PayoffVector{2, 2, 6}), (PayoffVector{1, 1, 4}));
  EXPECT_EQ(Functional(F::kMinimalRights)(FamilyGame(2)), (PayoffVector{1, 1, 4}));
  EXPECT_EQ(ResidualLower(FamilyGame(7), PayoffVector{5, 5, 6}), (PayoffVector{2, 2, 2}));
  for (const TuGame& v : testing::RandomGames(33, 60, 2, 6, GameClassFilter::kConvex)) {
    EXPECT_EQ(Functional(F::kMinimalRights)(v), IndividualWorths(v));
  }
}

TEST(ResidualLowerTest, MinimalRightsAgreesWithBruteForce) {
  for (const TuGame& v : testing::RandomGames(34, 200, 1, 5, GameClassFilter::kAny, 2)) {
    EXPECT_EQ(Functional(F::kMinimalRights)(v), Vec(oracle::MinimalRights(v)));
    const PayoffVector eta = MilnorUpper(v);
    EXPECT_EQ(ResidualLower(v, eta), Vec(oracle::Residual(v, {eta.begin(), eta.end()})));
  }
}

TEST(ResidualLowerTest, FamilyGamesHaveResidualAMinusFive) {
  for (int a : {6, 7, 8}) {
    const TuGame v = FamilyGame(a);
    EXPECT_EQ(ResidualLower(v, Functional(F::kEtaPrime)(v)), (PayoffVector{a - 5, a - 5, 2}))
        << "a = " << a;
  }
}

TEST(MuFromUpperTest, RequiresCovariantUpperBound) {
  const TuGame g6 = FamilyGame(6);
  EXPECT_EQ(MuFromUpper(g6, Functional(F::kMarginalContributions)), (PayoffVector{4, 4, 4}));
  try {
    MuFromUpper(g6, Functional(F::kEtaTrivial));
    ADD_FAILURE() << "accepted a non-covariant upper bound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonCovariantUpperBound);
  }
}

TEST(EanscTildeLowerTest, Examples) {
  EXPECT_EQ(EanscTildeLower(FamilyGame(6)), (PayoffVector{3, 3, 3}));
  EXPECT_EQ(EanscTildeLower(testing::Additive123()), (PayoffVector{1, 2, 3}));
  const TuGame two = BuildGame(2, {{C::Of({0}), Rational(1)},
                                   {C::Of({1}), Rational(1)},
                                   {C::Grand(2), Rational(4)}});
  EXPECT_EQ(EanscTildeLower(two), (PayoffVector{1, 1}));
  try {
    EanscTildeLower(BuildGame(1, {{C::Grand(1), Rational(3)}}));
    ADD_FAILURE() << "accepted n = 1";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewPlayers);
  }
}

TEST(EanscTildeLowerTest, SolvesTheLeaveOneOutSystem) {
  for (const TuGame& v : testing::RandomGames(35, 200, 2, 6, GameClassFilter::kAny, 3)) {
    const PayoffVector mu = EanscTildeLower(v);
    for (Player i = 0; i < v.players(); ++i) {
      EXPECT_EQ(mu.Sum() - mu[i], v.worth(C::Grand(v.players()).Without(i)));
    }
  }
}

TEST(RegistryTest, NamesAndFlags) {
  for (const F id : RegistryIds()) {
    const BoundFunctional& f = Functional(id);
    EXPECT_EQ(f.id(), id);
    EXPECT_EQ(f.name(), FunctionalName(id));
    EXPECT_EQ(ParseFunctionalId(f.name()), id);
    const bool covariant = id != F::kZeroLower && id != F::kEtaTrivial;
    EXPECT_EQ(f.is_translation_covariant(), covariant) << f.name();
    EXPECT_EQ(f.is_regular_lower(), covariant || id == F::kZeroLower) << f.name();
  }
  EXPECT_FALSE(ParseFunctionalId("no-such-bound").has_value());
  EXPECT_FALSE(ConstantLower(PayoffVector{1, 1, 1}).is_regular_lower());
  EXPECT_TRUE(ConstantLower(PayoffVector(3)).is_regular_lower());
  EXPECT_EQ(DerivedLowerFromUpper(Functional(F::kMilnorUpper))(FamilyGame(6)),
            (PayoffVector{1, 1, 2}));
  EXPECT_EQ(DerivedUpperFromLower(Functional(F::kIndividualWorths))(FamilyGame(6)),
            (PayoffVector{5, 5, 6}));
  EXPECT_THROW(DerivedLowerFromUpper(Functional(F::kEtaTrivial)), Error);
}

TEST(BoundPairTest, KikutaMilnorHoldsOnFamilyGame) {
  const BoundPairReport r =
      CheckBoundPair(FamilyGame(6), Functional(F::kKikutaLower), Functional(F::kMilnorUpper));
  EXPECT_TRUE(r.holds());
}

TEST(BoundPairTest, IndividualWorthsWithTrivialUpperFailsOnlyIIb) {
  const BoundPairReport r = CheckBoundPair(FamilyGame(6), Functional(F::kIndividualWorths),
                                           Functional(F::kEtaTrivial));
  EXPECT_TRUE(r.property_i_holds);
  EXPECT_TRUE(r.property_iia_holds);
  ASSERT_FALSE(r.property_iib_holds);
  ASSERT_TRUE(r.property_iib_witness.has_value());
  EXPECT_EQ(r.property_iib_witness->lhs, (PayoffVector{4, 4, 4}));
  EXPECT_EQ(r.property_iib_witness->rhs, (PayoffVector{7, 7, 6}));
  EXPECT_EQ(r.property_iib_witness->component, 0);
}

TEST(BoundPairTest, ZeroGameSatisfiesEveryRegistryPair) {
  for (const F lo : RegistryIds()) {
    for (const F hi : RegistryIds()) {
      EXPECT_TRUE(CheckBoundPair(testing::Zero3(), Functional(lo), Functional(hi)).holds());
    }
  }
}

TEST(BoundPairTest, KikutaMilnorHoldsEverywhere) {
  for (const TuGame& v : testing::RandomGames(36, 300, 1, 6, GameClassFilter::kAny, 2)) {
    EXPECT_TRUE(
        CheckBoundPair(v, Functional(F::kKikutaLower), Functional(F::kMilnorUpper)).holds());
  }
}

TEST(RegularLowerTest, Examples) {
  for (const TuGame& v : testing::RandomGames(37, 100, 1, 5)) {
    if (IndividualWorths(v).Sum() <= v.grand_worth()) {
      EXPECT_TRUE(IsRegularLower(v, Functional(F::kIndividualWorths)).passed());
    }
    if (KikutaLower(v).Sum() <= v.grand_worth()) {
      EXPECT_TRUE(IsRegularLower(v, Functional(F::kKikutaLower)).passed());
    }
  }
  const TuGame five = BuildGame(3, {{C::Grand(3), Rational(5)}});
  const CheckOutcome o = IsRegularLower(five, ConstantLower(PayoffVector{1, 1, 1}));
  EXPECT_TRUE(o.failed());
  ASSERT_TRUE(o.witness.has_value());
  EXPECT_EQ(o.witness->lhs, (PayoffVector{1, 1, 1}));
  // Outside B_l(mu) the question is not posed.
  EXPECT_THROW(IsRegularLower(five, ConstantLower(PayoffVector{2, 2, 2})), NotInClassError);
}

TEST(TranslationCovarianceTest, Examples) {
  const TuGame g6 = FamilyGame(6);
  EXPECT_TRUE(CheckTranslationCovariance(Functional(F::kMarginalContributions), g6,
                                         PayoffVector{1, -2, 3})
                  .passed());
  EXPECT_TRUE(
      CheckTranslationCovariance(Functional(F::kEtaTrivial), g6, PayoffVector{1, 0, 0}).failed());
  EXPECT_TRUE(
      CheckTranslationCovariance(Functional(F::kZeroLower), g6, PayoffVector{1, 0, 0}).failed());
}

TEST(TranslationCovarianceTest, MilnorAgainstBruteForce) {
  GameSampler sampler(SamplerConfig{.n_min = 1, .n_max = 5, .denominator_max = 3, .seed = 38});
  for (int k = 0; k < 100; ++k) {
    const TuGame v = sampler.Next();
    const PayoffVector x = sampler.NextVector(v.players());
    const PayoffVector lhs = Vec(oracle::MilnorMax(Shift(v, x)));
    const PayoffVector rhs = Vec(oracle::MilnorMax(v)) + x;
    EXPECT_EQ(lhs, rhs);
    EXPECT_TRUE(CheckTranslationCovariance(Functional(F::kMilnorUpper), v, x).passed());
  }
}

TEST(TranslationCovarianceTest, RegistryFlagsHoldOnProbes) {
  GameSampler sampler(SamplerConfig{.n_min = 2, .n_max = 5, .denominator_max = 2, .seed = 39});
  int trivial_failures = 0;
  for (int k = 0; k < 200; ++k) {
    const TuGame v = sampler.Next();
    const PayoffVector x = sampler.NextVector(v.players());
    for (const F id : RegistryIds()) {
      const BoundFunctional& f = Functional(id);
      if (!f.is_translation_covariant()) continue;
      EXPECT_TRUE(CheckTranslationCovariance(f, v, x).passed()) << f.name();
    }
    if (CheckTranslationCovariance(Functional(F::kEtaTrivial), v, x).failed()) ++trivial_failures;
  }
  EXPECT_GT(trivial_failures, 0);
}

TEST(StructuralIdentityTest, LowerBoundEtaSums) {
  for (const TuGame& v : testing::RandomGames(40, 300, 1, 6, GameClassFilter::kAny, 2)) {
    const int n = v.players();
    for (const F id : {F::kIndividualWorths, F::kMarginalContributions, F::kZeroLower}) {
      const PayoffVector mu = Functional(id)(v);
      EXPECT_EQ(EtaFromLower(v, mu).Sum() - v.grand_worth(),
                Rational(n - 1) * (v.grand_worth() - mu.Sum()));
    }
    EXPECT_TRUE(IndividualWorths(v).DominatedBy(MuFromUpper(v, Functional(F::kMarginalContributions))));
    EXPECT_TRUE(KikutaLower(v).DominatedBy(MilnorUpper(v)));
    EXPECT_LE(KikutaLower(v).Sum(), v.grand_worth());
    EXPECT_GE(MilnorUpper(v).Sum(), v.grand_worth());
  }
}

TEST(StructuralIdentityTest, ResidualBelowUpperOnStronglyBoundGames) {
  int checked = 0;
  for (const TuGame& v : testing::RandomGames(41, 300, 2, 5)) {
    for (const F id : {F::kMarginalContributions, F::kMilnorUpper, F::kEtaPrime}) {
      const PayoffVector eta = Functional(id)(v);
      if (!IsStronglyBound(v, eta)) continue;
      EXPECT_TRUE(ResidualLower(v, eta).DominatedBy(eta));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(MembershipTest, FamilyGameThresholds) {
  const BoundFunctional& nu = Functional(F::kIndividualWorths);
  const BoundFunctional& eta_prime = Functional(F::kEtaPrime);
  EXPECT_EQ(eta_prime(FamilyGame(4)), (PayoffVector{5, 5, 6}));
  EXPECT_TRUE(Membership(FamilyGame(10), nu, eta_prime).in_strong_upper);
  EXPECT_FALSE(Membership(FamilyGame(11), nu, eta_prime).in_strong_upper);
  EXPECT_TRUE(Membership(FamilyGame(6), nu, eta_prime).in_b_hat);
  EXPECT_FALSE(Membership(FamilyGame(7), nu, eta_prime).in_b_hat);
  const MembershipReport km =
      Membership(FamilyGame(6), Functional(F::kKikutaLower), Functional(F::kMilnorUpper));
  EXPECT_TRUE(km.in_balanced);
  EXPECT_TRUE(km.in_proper_upper.value_or(false));
  EXPECT_FALSE(Membership(FamilyGame(6), nu, Functional(F::kEtaTrivial)).in_proper_upper);
}

TEST(MembershipTest, BHatInsideStrongUpperForWeaklyEssentialGames) {
  int in_hat = 0;
  for (const TuGame& v : testing::RandomGames(42, 400, 2, 5, GameClassFilter::kWeaklyEssential)) {
    if (!InBHat(v)) continue;
    ++in_hat;
    EXPECT_TRUE(IsStronglyBound(v, Functional(F::kEtaPrime)(v)));
  }
  EXPECT_GT(in_hat, 10);
}

TEST(MembershipTest, BTildeIsUpperClassOfMarginals) {
  for (const TuGame& v : testing::RandomGames(43, 100, 1, 5)) {
    EXPECT_EQ(InBTilde(v), v.grand_worth() <= MarginalContributions(v).Sum());
  }
}

}  // namespace
}  // namespace coopvals
