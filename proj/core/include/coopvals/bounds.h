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

#ifndef COOPVALS_BOUNDS_H_
#define COOPVALS_BOUNDS_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "coopvals/check.h"
#include "coopvals/game.h"
#include "coopvals/rational.h"

namespace coopvals {

// ---------------------------------------------------------------------------
// Bound functionals evaluated directly on a game.

// M_i(v) = v(N) - v(N-i), the utopia (marginal contribution) vector.
BoundVector MarginalContributions(const TuGame& v);

// Minimum of v(S) - v(S-i) over S containing i.
BoundVector KikutaLower(const TuGame& v);

// Maximum of v(S) - v(S-i) over S containing i.
BoundVector MilnorUpper(const TuGame& v);

// eta^mu_i(v) = v(N) - sum_{j != i} mu_j. With mu = 0 this is the trivial
// upper bound (v(N),...,v(N)); with mu = nu it is eta'; with mu = M it is
// eta^M.
BoundVector EtaFromLower(const TuGame& v, const BoundVector& lower);

// Residual lower bound of an upper bound vector: for every i the maximum over
// nonempty S containing i of v(S) - sum_{j in S-i} eta_j. With eta = M this is
// the minimal rights vector m(v). Always >= (v_1, ..., v_n).
BoundVector ResidualLower(const TuGame& v, const BoundVector& upper);

// mu~_i = M_i + (v(N) - sum_j M_j) / (n-1), the solution of
// sum_{j != i} mu~_j = v(N-i) for all i. The system is re-verified before
// returning. Throws kTooFewPlayers for n == 1.
BoundVector EanscTildeLower(const TuGame& v);

// ---------------------------------------------------------------------------
// Registry of named functionals.

enum class BoundFunctionalId {
  kMarginalContributions,
  kMinimalRights,
  kKikutaLower,
  kMilnorUpper,
  kIndividualWorths,
  kZeroLower,
  kEtaTrivial,
  kEtaPrime,
  kEanscTildeLower,
  kEtaFromM,
  // Built by DerivedLowerFromUpper / DerivedUpperFromLower.
  kDerived,
  // Constant vector; only a lower bound when it is zero. Test fixture.
  kConstant,
};

class BoundFunctional {
 public:
  using Rule = std::function<BoundVector(const TuGame&)>;

  BoundFunctional(BoundFunctionalId id, std::string name, Rule rule,
                  bool translation_covariant, bool regular_lower);

  BoundVector operator()(const TuGame& v) const { return rule_(v); }

  BoundFunctionalId id() const { return id_; }
  const std::string& name() const { return name_; }
  // f(v + x) = f(v) + x on the whole game space.
  bool is_translation_covariant() const { return covariant_; }
  // mu(v - mu(v)) = 0 on its lower-bound class.
  bool is_regular_lower() const { return regular_lower_; }

 private:
  BoundFunctionalId id_;
  std::string name_;
  Rule rule_;
  bool covariant_;
  bool regular_lower_;
};

// Named entries. kDerived and kConstant are not in the registry and throw
// std::invalid_argument.
const BoundFunctional& Functional(BoundFunctionalId id);

// All registry ids, in declaration order.
std::span<const BoundFunctionalId> RegistryIds();

// Canonical kebab-case name ("marginal-contributions", "eta-prime", ...).
std::string_view FunctionalName(BoundFunctionalId id);
std::optional<BoundFunctionalId> ParseFunctionalId(std::string_view name);

// mu^eta for a translation covariant eta. Throws kNonCovariantUpperBound.
BoundFunctional DerivedLowerFromUpper(const BoundFunctional& upper);

// eta^mu for any lower bound functional.
BoundFunctional DerivedUpperFromLower(const BoundFunctional& lower);

BoundFunctional ConstantLower(PayoffVector value);

// mu^eta(v). Throws kNonCovariantUpperBound if the functional is not flagged
// translation covariant.
BoundVector MuFromUpper(const TuGame& v, const BoundFunctional& upper);

// ---------------------------------------------------------------------------
// Property checks.

struct BoundPairReport {
  // mu(v) <= eta(v).
  bool property_i_holds = false;
  // mu(v - mu(v)) = 0.
  bool property_iia_holds = false;
  // eta(v - mu(v)) = eta(v) - mu(v).
  bool property_iib_holds = false;
  std::optional<Witness> property_i_witness;
  std::optional<Witness> property_iia_witness;
  std::optional<Witness> property_iib_witness;

  bool holds() const {
    return property_i_holds && property_iia_holds && property_iib_holds;
  }
};

// Evaluates the three bound pair conditions on v and on v - mu(v). Failures
// are reported as data.
BoundPairReport CheckBoundPair(const TuGame& v, const BoundFunctional& lower,
                               const BoundFunctional& upper);

// Pass iff mu(v - mu(v)) == 0. Throws NotInClassError unless
// sum mu_i(v) <= v(N).
CheckOutcome IsRegularLower(const TuGame& v, const BoundFunctional& lower);

// Pass iff f(v + x) == f(v) + x.
CheckOutcome CheckTranslationCovariance(const BoundFunctional& f,
                                        const TuGame& v, const PayoffVector& x);

struct MembershipReport {
  // sum mu <= v(N) <= sum eta.
  bool in_balanced = false;
  // sum mu <= v(N).
  bool in_lower_class = false;
  // v(S) <= eta(S) for every nonempty S.
  bool in_strong_upper = false;
  // Strongly eta-bound and sum mu^eta <= v(N) <= sum eta. Empty when eta is
  // not translation covariant (mu^eta undefined).
  std::optional<bool> in_proper_upper;
  // v(S) - nu(S) <= (|S|-1)(v(N) - nu(N)) for every nonempty S.
  bool in_b_hat = false;
  // v(N) <= sum M_j.
  bool in_b_tilde = false;
};

MembershipReport Membership(const TuGame& v, const BoundFunctional& lower,
                            const BoundFunctional& upper);

// v(S) <= sum_{i in S} upper_i for every nonempty S.
bool IsStronglyBound(const TuGame& v, const BoundVector& upper);
bool InBHat(const TuGame& v);
bool InBTilde(const TuGame& v);

}  // namespace coopvals

#endif  // COOPVALS_BOUNDS_H_
