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

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "coopvals/classify.h"
#include "coopvals/error.h"
#include "coopvals/verify.h"

namespace coopvals {
namespace {

struct FilterEntry {
  GameClassFilter filter;
  std::string_view name;
};

constexpr std::array kFilters = {
    FilterEntry{GameClassFilter::kAny, "any"},
    FilterEntry{GameClassFilter::kZeroNormalised, "zero-normalised"},
    FilterEntry{GameClassFilter::kConvex, "convex"},
    FilterEntry{GameClassFilter::kEssential, "essential"},
    FilterEntry{GameClassFilter::kWeaklyEssential, "weakly-essential"},
    FilterEntry{GameClassFilter::kSemiBalanced, "semi-balanced"},
    FilterEntry{GameClassFilter::kMLower, "M-lower"},
    FilterEntry{GameClassFilter::kMUpper, "M-upper"},
};

void Validate(const SamplerConfig& c) {
  if (c.n_min < 1 || c.n_max < c.n_min || c.n_max > kMaxSupportedPlayers) {
    throw std::invalid_argument("sampler: need 1 <= n_min <= n_max <= " +
                                std::to_string(kMaxSupportedPlayers));
  }
  if (c.numerator_max < c.numerator_min) {
    throw std::invalid_argument("sampler: numerator_min > numerator_max");
  }
  if (c.denominator_max < 1) {
    throw std::invalid_argument("sampler: denominator_max must be >= 1");
  }
  if (c.count < 0 || c.retry_cap < 1) {
    throw std::invalid_argument("sampler: count >= 0 and retry_cap >= 1 required");
  }
}

// In place: f(S) <- sum over T subset of S of f(T).
void SubsetSum(std::vector<Rational>& f, int n) {
  for (int bit = 0; bit < n; ++bit) {
    const size_t b = size_t{1} << bit;
    for (size_t mask = 0; mask < f.size(); ++mask) {
      if (mask & b) f[mask] += f[mask ^ b];
    }
  }
}

}  // namespace

std::string_view FilterName(GameClassFilter filter) {
  for (const FilterEntry& e : kFilters) {
    if (e.filter == filter) return e.name;
  }
  return "unknown";
}

std::optional<GameClassFilter> ParseFilter(std::string_view name) {
  for (const FilterEntry& e : kFilters) {
    if (e.name == name) return e.filter;
  }
  return std::nullopt;
}

bool MatchesFilter(const TuGame& v, GameClassFilter filter) {
  switch (filter) {
    case GameClassFilter::kAny: return true;
    case GameClassFilter::kZeroNormalised: return IndividualWorths(v).IsZero();
    case GameClassFilter::kConvex: return IsConvex(v);
    case GameClassFilter::kEssential: return IsEssential(v);
    case GameClassFilter::kWeaklyEssential: return IsWeaklyEssential(v);
    case GameClassFilter::kSemiBalanced: return IsSemiBalanced(v);
    case GameClassFilter::kMLower:
      return v.grand_worth() >= MarginalContributions(v).Sum();
    case GameClassFilter::kMUpper:
      return v.grand_worth() <= MarginalContributions(v).Sum();
  }
  return false;
}

GameSampler::GameSampler(const SamplerConfig& config)
    : config_(config), rng_(config.seed) {
  Validate(config_);
}

Rational GameSampler::NextWorth() {
  std::uniform_int_distribution<std::int64_t> num(config_.numerator_min,
                                                  config_.numerator_max);
  std::uniform_int_distribution<std::int64_t> den(1, config_.denominator_max);
  const std::int64_t p = num(rng_);
  const std::int64_t q = den(rng_);
  Rational r(mpz_class(std::to_string(p), 10), mpz_class(std::to_string(q), 10));
  r.canonicalize();
  return r;
}

PayoffVector GameSampler::NextVector(int n) {
  PayoffVector x(n);
  for (Player i = 0; i < n; ++i) x[i] = NextWorth();
  return x;
}

int GameSampler::NextPlayerCount() {
  std::uniform_int_distribution<int> dist(config_.n_min, config_.n_max);
  return dist(rng_);
}

TuGame GameSampler::Uniform(int n) {
  std::vector<Rational> worths(size_t{1} << n);
  for (size_t mask = 1; mask < worths.size(); ++mask) worths[mask] = NextWorth();
  return TuGame::FromTable(n, std::move(worths), kMaxSupportedPlayers);
}

TuGame GameSampler::Convex(int n) {
  // Nonnegative dividends on roughly half the coalitions.
  std::bernoulli_distribution keep(0.5);
  std::vector<Rational> dividends(size_t{1} << n);
  for (size_t mask = 1; mask < dividends.size(); ++mask) {
    if (keep(rng_)) dividends[mask] = abs(NextWorth());
  }
  SubsetSum(dividends, n);
  const std::vector<Rational> shift = CoalitionSums(NextVector(n));
  for (size_t mask = 1; mask < dividends.size(); ++mask) dividends[mask] += shift[mask];
  return TuGame::FromTable(n, std::move(dividends), kMaxSupportedPlayers);
}

TuGame GameSampler::NoisyConvex(int n) {
  const TuGame base = Convex(n);
  std::vector<Rational> worths(base.table().begin(), base.table().end());
  for (size_t mask = 1; mask < worths.size(); ++mask) {
    worths[mask] += NextWorth() / 4;
  }
  return TuGame::FromTable(n, std::move(worths), kMaxSupportedPlayers);
}

TuGame GameSampler::Next() {
  const int n = NextPlayerCount();
  switch (config_.filter) {
    case GameClassFilter::kAny: return Uniform(n);
    case GameClassFilter::kZeroNormalised: return ZeroNormalise(Uniform(n));
    case GameClassFilter::kConvex: return Convex(n);
    default: break;
  }
  for (int attempt = 0; attempt < config_.retry_cap; ++attempt) {
    ++attempts_;
    TuGame candidate = attempt % 2 == 0 ? Uniform(n) : NoisyConvex(n);
    if (MatchesFilter(candidate, config_.filter)) return candidate;
  }
  throw Error(ErrorCode::kSamplerExhausted,
              std::string(FilterName(config_.filter)) + " after " +
                  std::to_string(config_.retry_cap) + " attempts");
}

std::vector<TuGame> SampleGames(const SamplerConfig& config) {
  GameSampler sampler(config);
  std::vector<TuGame> games;
  games.reserve(static_cast<size_t>(config.count));
  for (int k = 0; k < config.count; ++k) games.push_back(sampler.Next());
  return games;
}

}  // namespace coopvals
