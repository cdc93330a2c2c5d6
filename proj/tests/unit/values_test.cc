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

#include <vector>

#include "coopvals/bounds.h"
#include "coopvals/classify.h"
#include "coopvals/error.h"
#include "coopvals/values.h"
#include "oracle.h"
#include "test_games.h"

namespace coopvals {
namespace {

using C = Coalition;
using F = BoundFunctionalId;
using testing::FamilyGame;
using testing::Q;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

TEST(CompromiseTest, Examples) {
  const TuGame g6 = FamilyGame(6);
  const ValueResult r = Compromise(g6, PayoffVector{1, 1, 2}, PayoffVector{5, 5, 5});
  EXPECT_EQ(r.lambda, Q(4, 11));
  EXPECT_EQ(r.allocation, (PayoffVector{Q(27, 11), Q(27, 11), Q(34, 11)}));

  const ValueResult same =
      Compromise(testing::Additive123(), PayoffVector{1, 2, 3}, PayoffVector{1, 2, 3});
  EXPECT_EQ(same.allocation, (PayoffVector{1, 2, 3}));
  EXPECT_FALSE(same.lambda.has_value());

  EXPECT_EQ(CodeOf([&] { Compromise(g6, PayoffVector{5, 5, 6}, PayoffVector{1, 1, 2}); }),
            ErrorCode::kBoundOrderViolated);
  EXPECT_EQ(CodeOf([&] { Compromise(g6, PayoffVector{3, 3, 3}, PayoffVector{4, 4, 4}); }),
            ErrorCode::kNotBalanced);
  EXPECT_EQ(CodeOf([&] { Compromise(g6, PayoffVector{1, 1}, PayoffVector{5, 5, 5}); }),
            ErrorCode::kLengthMismatch);
}

TEST(LbcValueTest, Examples) {
  const TuGame g6 = FamilyGame(6);
  EXPECT_EQ(LbcValue(g6, Functional(F::kIndividualWorths)).allocation,
            (PayoffVector{Q(7, 3), Q(7, 3), Q(10, 3)}));
  for (int a : {0, 2, 6, 8, 10}) {
    EXPECT_EQ(LbcValue(FamilyGame(a), Functional(F::kZeroLower)).allocation,
              PayoffVector::Constant(3, Q(8, 3)));
  }
  EXPECT_EQ(LbcValue(g6, Functional(F::kMarginalContributions)).allocation,
            PayoffVector::Constant(3, Q(8, 3)));
  EXPECT_EQ(CodeOf([&] { LbcValue(g6, ConstantLower(PayoffVector{1, 1, 1})); }),
            ErrorCode::kNotRegularLowerBound);
  EXPECT_THROW(LbcValue(g6, ConstantLower(PayoffVector{3, 3, 3})), NotInClassError);
}

TEST(UbcValueTest, Examples) {
  const BoundFunctional& eta_prime = Functional(F::kEtaPrime);
  EXPECT_EQ(UbcValue(FamilyGame(8), eta_prime).allocation, (PayoffVector{3, 3, 2}));
  EXPECT_EQ(UbcValue(FamilyGame(7), eta_prime).allocation,
            (PayoffVector{Q(13, 5), Q(13, 5), Q(14, 5)}));
  EXPECT_EQ(UbcValue(FamilyGame(6), eta_prime).allocation,
            (PayoffVector{Q(7, 3), Q(7, 3), Q(10, 3)}));
  EXPECT_EQ(CodeOf([] { UbcValue(FamilyGame(6), Functional(F::kEtaTrivial)); }),
            ErrorCode::kNonCovariantUpperBound);
  EXPECT_THROW(UbcValue(FamilyGame(11), eta_prime), NotInClassError);
}

TEST(UbcValueTest, FamilyFormula) {
  for (int a : {6, 7, 8}) {
    const Rational top = Q(20 - a, 12 - a);
    EXPECT_EQ(UbcValue(FamilyGame(a), Functional(F::kEtaPrime)).allocation,
              (PayoffVector{top, top, Q(56 - 6 * a, 12 - a)}));
  }
}

TEST(TauTest, Examples) {
  const ValueResult r = Tau(FamilyGame(2));
  EXPECT_EQ(r.lower_used, (PayoffVector{1, 1, 4}));
  EXPECT_EQ(r.upper_used, (PayoffVector{2, 2, 6}));
  EXPECT_EQ(r.allocation, (PayoffVector{Q(3, 2), Q(3, 2), 5}));
  EXPECT_EQ(Tau(testing::Unanimity12()).allocation, (PayoffVector{Q(1, 2), Q(1, 2), 0}));
  try {
    Tau(FamilyGame(6));
    ADD_FAILURE() << "tau defined on a game that is not semi-balanced";
  } catch (const NotInClassError& e) {
    EXPECT_EQ(e.detail(), "not applicable: semi-balanced");
    EXPECT_EQ(e.class_name(), "semi-balanced");
  }
}

TEST(TauTest, AgreesWithBruteForceFormula) {
  int checked = 0;
  for (const TuGame& v : testing::RandomGames(51, 300, 2, 5, GameClassFilter::kSemiBalanced)) {
    const std::vector<Rational> m = oracle::MinimalRights(v);
    const std::vector<Rational> big_m = oracle::Marginal(v);
    ValueResult r;
    try {
      r = Tau(v);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotBalanced);
      continue;
    }
    if (PayoffVector(m) == PayoffVector(big_m)) continue;
    EXPECT_EQ(r.allocation, PayoffVector(oracle::Balance(v, m, big_m)));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

// The semi-balanced inequalities do not bound sum m by v(N).
TEST(TauTest, SemiBalancedGameWithoutEfficientTau) {
  const TuGame v = BuildGame(3, {{C::Of({1}), Rational(1)},
                                 {C::Of({2}), Rational(1)},
                                 {C::Grand(3), Rational(1)}});
  EXPECT_TRUE(IsSemiBalanced(v));
  EXPECT_TRUE(oracle::SemiBalanced(v));
  EXPECT_EQ(PayoffVector(oracle::MinimalRights(v)), (PayoffVector{0, 1, 1}));
  EXPECT_EQ(CodeOf([&] { Tau(v); }), ErrorCode::kNotBalanced);
}

TEST(ChiTest, Examples) {
  EXPECT_EQ(Chi(FamilyGame(6)).allocation, (PayoffVector{Q(27, 11), Q(27, 11), Q(34, 11)}));
  EXPECT_EQ(Chi(FamilyGame(6)).lower_used, (PayoffVector{1, 1, 2}));
  const TuGame hungry = BuildGame(2, {{C::Of({0}), Rational(2)}, {C::Grand(2), Rational(1)}});
  EXPECT_THROW(Chi(hungry), NotInClassError);
  for (const TuGame& v : testing::RandomGames(52, 100, 2, 6, GameClassFilter::kConvex)) {
    EXPECT_EQ(Chi(v).allocation, Tau(v).allocation);
  }
}

TEST(GatelyTest, Examples) {
  EXPECT_EQ(Gately(FamilyGame(4)).allocation, (PayoffVector{2, 2, 4}));
  EXPECT_EQ(Gately(FamilyGame(4)).allocation, MarginalContributions(FamilyGame(4)));
  EXPECT_EQ(Gately(testing::Additive123()).allocation, (PayoffVector{1, 2, 3}));
  EXPECT_THROW(Gately(FamilyGame(6)), NotInClassError);
}

TEST(GatelyTest, DegenerateAndStrictModes) {
  // sum (M - nu) = 0 with M != nu: nu = 0, M = (-1, 1, 0), v(N) = 0.
  const TuGame crossing = BuildGame(3, {{C::Of({1, 2}), Rational(1)},
                                        {C::Of({0, 2}), Rational(-1)}});
  ASSERT_TRUE(IsEssential(crossing));
  EXPECT_EQ(CodeOf([&] { Gately(crossing); }), ErrorCode::kDegenerateBounds);

  // Essential with nu_3 > M_3: the formula still applies, strict mode refuses.
  const TuGame v = BuildGame(3, {{C::Of({2}), Rational(3)},
                                 {C::Of({0, 1}), Rational(4)},
                                 {C::Of({0, 2}), Rational(3)},
                                 {C::Of({1, 2}), Rational(3)},
                                 {C::Grand(3), Rational(6)}});
  ASSERT_TRUE(IsEssential(v));
  ASSERT_GT(IndividualWorths(v)[2], MarginalContributions(v)[2]);
  const ValueResult g = Gately(v);
  EXPECT_EQ(g.allocation.Sum(), 6);
  EXPECT_EQ(CodeOf([&] { Gately(v, GatelyMode::kStrict); }), ErrorCode::kBoundOrderViolated);
}

TEST(CisTest, Examples) {
  for (int a : {0, 2, 6, 8, 10}) {
    EXPECT_EQ(Cis(FamilyGame(a)).allocation, (PayoffVector{Q(7, 3), Q(7, 3), Q(10, 3)}));
  }
  EXPECT_EQ(Cis(testing::Additive123()).allocation, (PayoffVector{1, 2, 3}));
  EXPECT_EQ(Cis(testing::Zero3()).allocation, PayoffVector(3));
}

TEST(PanscTest, Examples) {
  EXPECT_EQ(MarginalContributions(FamilyGame(8)), (PayoffVector{2, 2, 0}));
  // v(N) = 8 > sum M = 4: the formula gives (4, 4, 0) but the game is not
  // (0, M)-balanced, so the compromise value itself is not defined there.
  EXPECT_EQ(PanscFormula(FamilyGame(8)), (PayoffVector{4, 4, 0}));
  EXPECT_THROW(Pansc(FamilyGame(8)), NotInClassError);
  const TuGame g = BuildGame(3, {{C::Of({0, 1}), Rational(2)}, {C::Of({0, 2}), Rational(2)},
                                 {C::Of({1, 2}), Rational(2)}, {C::Grand(3), Rational(3)}});
  const ValueResult r = Pansc(g);
  EXPECT_EQ(r.allocation, PayoffVector::Constant(3, 1));
  EXPECT_EQ(r.lambda, Q(1, 1));
  EXPECT_EQ(PanscFormula(g), r.allocation);
  EXPECT_EQ(Pansc(testing::Additive123()).allocation, (PayoffVector{1, 2, 3}));
  const ValueResult z = Pansc(testing::Zero3());
  EXPECT_EQ(z.allocation, PayoffVector(3));
  EXPECT_FALSE(z.lambda.has_value());
  EXPECT_THROW(Pansc(FamilyGame(6)), NotInClassError);
}

TEST(PanscTest, NegativeMarginalIsABoundOrderError) {
  const TuGame v = BuildGame(2, {{C::Of({0}), Rational(-1)},
                                 {C::Of({1}), Rational(3)},
                                 {C::Grand(2), Rational(2)}});
  ASSERT_EQ(MarginalContributions(v), (PayoffVector{-1, 3}));
  EXPECT_EQ(CodeOf([&] { Pansc(v); }), ErrorCode::kBoundOrderViolated);
  EXPECT_EQ(PanscFormula(v), (PayoffVector{-1, 3}));
  EXPECT_EQ(CodeOf([&] { PanscFormula(testing::Zero3()); }), ErrorCode::kDegenerateBounds);
}

TEST(PanscTest, FormulaMatchesValueInClass) {
  int in_class = 0;
  for (const TuGame& v : testing::RandomGames(57, 300, 2, 5, GameClassFilter::kMUpper, 3)) {
    ValueResult r;
    try {
      r = Pansc(v);
    } catch (const Error&) {
      continue;
    }
    ++in_class;
    if (MarginalContributions(v).Sum() != 0) { EXPECT_EQ(PanscFormula(v), r.allocation); }
  }
  EXPECT_GT(in_class, 20);
}

TEST(EgalitarianTest, Examples) {
  EXPECT_EQ(Egalitarian(FamilyGame(3)).allocation, PayoffVector::Constant(3, Q(8, 3)));
  EXPECT_EQ(Egalitarian(testing::Zero3()).allocation, PayoffVector(3));
  EXPECT_THROW(Egalitarian(BuildGame(2, {{C::Grand(2), Rational(-1)}})), NotInClassError);
}

TEST(EanscTest, Examples) {
  const ValueResult r = Eansc(FamilyGame(6));
  EXPECT_EQ(r.allocation, PayoffVector::Constant(3, Q(8, 3)));
  EXPECT_EQ(r.routes, (std::vector<std::string>{"(M,eta^M)"}));
  const ValueResult add = Eansc(testing::Additive123());
  EXPECT_EQ(add.allocation, (PayoffVector{1, 2, 3}));
  EXPECT_EQ(add.routes.size(), 2u);
  const ValueResult single = Eansc(BuildGame(1, {{C::Grand(1), Rational(-4)}}));
  EXPECT_EQ(single.allocation, PayoffVector{-4});
}

TEST(EanscTest, DualOfCisFormula) {
  for (const TuGame& v : testing::RandomGames(53, 200, 1, 6, GameClassFilter::kAny, 3)) {
    const TuGame d = Dual(v);
    const int n = v.players();
    PayoffVector expected = IndividualWorths(d);
    const Rational share = (d.grand_worth() - expected.Sum()) / n;
    for (Player i = 0; i < n; ++i) expected[i] += share;
    const ValueResult r = Eansc(v);
    EXPECT_EQ(r.allocation, expected);
    EXPECT_FALSE(r.routes.empty());
  }
}

TEST(KmTest, Examples) {
  EXPECT_EQ(Km(FamilyGame(6)).allocation, (PayoffVector{Q(27, 11), Q(27, 11), Q(34, 11)}));
  EXPECT_EQ(Km(testing::Unanimity12()).allocation, (PayoffVector{Q(1, 2), Q(1, 2), 0}));
  for (const TuGame& v : testing::RandomGames(54, 200, 1, 6, GameClassFilter::kAny, 2)) {
    EXPECT_EQ(Km(Dual(v)).allocation, Km(v).allocation);
  }
}

TEST(ValueRegistryTest, NamesRoundTrip) {
  for (const ValueId id : AllValueIds()) {
    EXPECT_EQ(ParseValueId(ValueName(id)), id);
    EXPECT_FALSE(ValueClassName(id).empty());
  }
  EXPECT_FALSE(ParseValueId("shapley").has_value());
  EXPECT_EQ(ComputeValue(ValueId::kCis, FamilyGame(6)).allocation,
            Cis(FamilyGame(6)).allocation);
}

TEST(ValueInvariantsTest, EfficiencyBracketingAndEngineConsistency) {
  for (const TuGame& v : testing::RandomGames(55, 300, 1, 5, GameClassFilter::kAny, 2)) {
    for (const ValueId id : AllValueIds()) {
      ValueResult r;
      try {
        r = ComputeValue(id, v);
      } catch (const Error&) {
        continue;
      }
      EXPECT_EQ(r.allocation.Sum(), v.grand_worth()) << ValueName(id);
      if (id == ValueId::kGately && !r.lower_used.DominatedBy(r.upper_used)) continue;
      EXPECT_TRUE(r.lower_used.DominatedBy(r.allocation)) << ValueName(id);
      EXPECT_TRUE(r.allocation.DominatedBy(r.upper_used)) << ValueName(id);
      if (r.lambda) {
        EXPECT_GE(*r.lambda, 0);
        EXPECT_LE(*r.lambda, 1);
        EXPECT_EQ(r.allocation,
                  *r.lambda * r.upper_used + (Rational(1) - *r.lambda) * r.lower_used);
      }
    }
    const BoundFunctional& nu = Functional(F::kIndividualWorths);
    if (nu(v).Sum() <= v.grand_worth()) {
      EXPECT_EQ(LbcValue(v, nu).allocation,
                Compromise(v, nu(v), EtaFromLower(v, nu(v))).allocation);
    }
    const BoundFunctional& milnor = Functional(F::kMilnorUpper);
    try {
      const ValueResult u = UbcValue(v, milnor);
      EXPECT_EQ(u.allocation,
                Compromise(v, MuFromUpper(v, milnor), milnor(v)).allocation);
    } catch (const Error&) {
    }
  }
}

TEST(ValueInvariantsTest, SinglePlayerGamesGetTheirWorth) {
  for (int w : {0, 3}) {
    const TuGame v = BuildGame(1, {{C::Grand(1), Rational(w)}});
    for (const ValueId id : AllValueIds()) {
      EXPECT_EQ(ComputeValue(id, v).allocation, PayoffVector{w}) << ValueName(id);
    }
  }
}

}  // namespace
}  // namespace coopvals
