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

#ifndef COOPVALS_VERIFY_H_
#define COOPVALS_VERIFY_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coopvals/bounds.h"
#include "coopvals/check.h"
#include "coopvals/game.h"
#include "coopvals/values.h"

namespace coopvals {

// ---------------------------------------------------------------------------
// Seeded game sampling.

enum class GameClassFilter {
  kAny,
  kZeroNormalised,
  kConvex,
  kEssential,
  kWeaklyEssential,
  kSemiBalanced,
  kMLower,
  kMUpper,
};

std::string_view FilterName(GameClassFilter filter);
std::optional<GameClassFilter> ParseFilter(std::string_view name);

struct SamplerConfig {
  int n_min = 2;
  int n_max = 4;
  // Worths are num/den with num uniform in [numerator_min, numerator_max]
  // and den uniform in [1, denominator_max].
  std::int64_t numerator_min = -10;
  std::int64_t numerator_max = 10;
  std::int64_t denominator_max = 1;
  GameClassFilter filter = GameClassFilter::kAny;
  int count = 100;
  std::uint64_t seed = 42;
  // Rejection attempts per requested game for the rejection filters.
  int retry_cap = 1000;
};

// Deterministic stream of games: the seed fixes the whole sequence.
//
// kConvex builds sum_T c_T u_T with c_T >= 0 plus an additive shift, so every
// draw is convex. kZeroNormalised zero-normalises a uniform draw. The other
// filters reject; candidates alternate between uniform worths and a convex
// game with integer noise added.
class GameSampler {
 public:
  explicit GameSampler(const SamplerConfig& config);

  // Throws Error(kSamplerExhausted) when the rejection cap is hit.
  TuGame Next();

  // Helpers for probes that must follow the same seeded stream.
  Rational NextWorth();
  PayoffVector NextVector(int n);
  std::mt19937_64& engine() { return rng_; }

 private:
  TuGame Uniform(int n);
  TuGame Convex(int n);
  TuGame NoisyConvex(int n);
  int NextPlayerCount();

  SamplerConfig config_;
  std::mt19937_64 rng_;
  std::uint64_t attempts_ = 0;
};

std::vector<TuGame> SampleGames(const SamplerConfig& config);

bool MatchesFilter(const TuGame& v, GameClassFilter filter);

// ---------------------------------------------------------------------------
// Axiom checks.

enum class Axiom {
  kMinimalRights,
  kRestrictedProportionality,
  kEgalitarianDivision,
  kCovariance,
  kEfficiency,
  kSelfDuality,
  kIndividualRationality,
};

std::string_view AxiomName(Axiom axiom);

// A value together with the bound pair it is a compromise of. The axioms are
// checked with respect to this pair.
struct ValueRule {
  std::string name;
  std::function<ValueResult(const TuGame&)> compute;
  BoundFunctional lower;
  BoundFunctional upper;
};

// tau: (m, M); chi: (mu^Milnor, Milnor); km: (Kikuta, Milnor);
// pansc: (0, M); gately: (nu, M); cis: (nu, eta'); egal: (0, eta^0);
// eansc: (M, eta^M).
ValueRule RuleFor(ValueId id);

// Probe for the covariance axiom f(scale v + shift) = scale f(v) + shift.
struct CovarianceProbe {
  Rational scale = 1;
  PayoffVector shift;
};

// Exact check of one axiom for one value on one game.
//   kMinimalRights               f(v) = f(v - mu(v)) + mu(v)
//   kRestrictedProportionality   mu(v) = 0  =>  f(v) collinear with eta(v)
//   kEgalitarianDivision         mu(v) = 0  =>  all f_i equal
//   kCovariance                  needs a probe (default: scale 3, shift
//                                (1, -2, 3, -4, ...))
//   kEfficiency                  sum f = v(N)
//   kSelfDuality                 f(v) = f(v*)
//   kIndividualRationality       f(v) >= nu(v)
// Throws NotInClassError if the value is not defined for v. Unmet
// preconditions (mu(v) != 0, dual out of class, lower bound not dominating
// nu) are reported as kSkip.
CheckOutcome CheckAxiom(Axiom axiom, const ValueRule& rule, const TuGame& v,
                        const std::optional<CovarianceProbe>& probe = {});

// tau(v) = chi(v) = km(v), m(v) = nu(v) and Milnor(v) = M(v).
// Throws NotInClassError if v is not convex.
CheckOutcome CheckConvexCoincidence(const TuGame& v);

// ---------------------------------------------------------------------------
// Suite.

struct CheckTally {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  // Smallest game index with a failure and its witness.
  int first_failure_game = -1;
  std::optional<Witness> first_failure;
};

// A check that must fail (or differ): a negative example of a claim.
struct FixtureResult {
  std::string id;
  // The expected failure was observed, with nothing else out of place.
  bool behaved = false;
  std::string detail;
};

struct SuiteReport {
  SamplerConfig config;
  int games = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<FixtureResult> fixtures;

  int total_failures() const;
  // No check failed and every fixture behaved.
  bool ok() const;

  // Deterministic JSON; identical inputs give identical bytes.
  std::string ToJson(int indent = 2) const;
  std::string ToTable() const;
};

// Samples `config.count` games and runs every applicable check on each.
SuiteReport RunSuite(const SamplerConfig& config);

// Same checks on the given games. Covariance probes are drawn from a stream
// seeded with `config.seed`.
SuiteReport RunSuiteOnGames(std::span<const TuGame> games,
                            const SamplerConfig& config);

// The negative fixtures alone.
std::vector<FixtureResult> RunNegativeFixtures();

}  // namespace coopvals

#endif  // COOPVALS_VERIFY_H_
