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
#include <exception>
#include <sstream>
#include <string>
#include <utility>

#include "coopvals/classify.h"
#include "coopvals/error.h"
#include "coopvals/verify.h"
#include "json_internal.h"

namespace coopvals {
namespace {

using internal::Json;

Witness Note(const TuGame& v, std::string inputs) {
  return Witness{v, std::move(inputs), {}, {}, -1};
}

CheckOutcome Expect(std::string id, bool ok, const TuGame& v, std::string inputs) {
  if (ok) return CheckOutcome::Pass(std::move(id));
  return CheckOutcome::Fail(std::move(id), Note(v, std::move(inputs)));
}

// Runs `body`; class guards become skips and anything else thrown is a
// failure of the check.
template <typename Body>
CheckOutcome Guarded(const std::string& id, const TuGame& v, Body&& body) {
  try {
    return body();
  } catch (const NotInClassError& e) {
    return CheckOutcome::Skip(id, e.what());
  } catch (const std::exception& e) {
    return CheckOutcome::Fail(id, Note(v, std::string("raised: ") + e.what()));
  }
}

PayoffVector DefaultShift(int n) {
  PayoffVector x(n);
  for (Player i = 0; i < n; ++i) x[i] = (i % 2 == 0 ? 1 : -1) * (i + 1);
  return x;
}

// f collinear with eta, division free.
CheckOutcome Collinear(std::string id, const TuGame& v, const Allocation& f,
                       const BoundVector& eta) {
  const Rational sum_eta = eta.Sum();
  if (sum_eta != 0) {
    const Rational sum_f = f.Sum();
    PayoffVector lhs = f, rhs = eta;
    lhs *= sum_eta;
    rhs *= sum_f;
    return CompareEqual(std::move(id), v, "f(v) * sum eta vs (sum f) * eta(v)", lhs, rhs);
  }
  int k = 0;
  while (k < eta.size() && eta[k] == 0) ++k;
  if (k == eta.size()) {
    return CompareEqual(std::move(id), v, "eta(v) = 0 forces f(v) = 0", f,
                        PayoffVector(f.size()));
  }
  PayoffVector lhs(f.size()), rhs(f.size());
  for (Player i = 0; i < f.size(); ++i) {
    lhs[i] = f[i] * eta[k];
    rhs[i] = f[k] * eta[i];
  }
  return CompareEqual(std::move(id), v, "f_i eta_k vs f_k eta_i", lhs, rhs);
}

std::string Join(std::string_view a, std::string_view b) {
  return std::string(a) + "/" + std::string(b);
}

}  // namespace

std::string_view AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kMinimalRights: return "minimal-rights";
    case Axiom::kRestrictedProportionality: return "restricted-proportionality";
    case Axiom::kEgalitarianDivision: return "egalitarian-division";
    case Axiom::kCovariance: return "covariance";
    case Axiom::kEfficiency: return "efficiency";
    case Axiom::kSelfDuality: return "self-duality";
    case Axiom::kIndividualRationality: return "individual-rationality";
  }
  return "unknown";
}

ValueRule RuleFor(ValueId id) {
  using F = BoundFunctionalId;
  auto compute = [id](const TuGame& v) { return ComputeValue(id, v); };
  std::string name(ValueName(id));
  switch (id) {
    case ValueId::kTau:
      return {name, compute, Functional(F::kMinimalRights), Functional(F::kMarginalContributions)};
    case ValueId::kChi:
      return {name, compute, DerivedLowerFromUpper(Functional(F::kMilnorUpper)),
              Functional(F::kMilnorUpper)};
    case ValueId::kKm:
      return {name, compute, Functional(F::kKikutaLower), Functional(F::kMilnorUpper)};
    case ValueId::kPansc:
      return {name, compute, Functional(F::kZeroLower), Functional(F::kMarginalContributions)};
    case ValueId::kGately:
      return {name, compute, Functional(F::kIndividualWorths),
              Functional(F::kMarginalContributions)};
    case ValueId::kCis:
      return {name, compute, Functional(F::kIndividualWorths), Functional(F::kEtaPrime)};
    case ValueId::kEgalitarian:
      return {name, compute, Functional(F::kZeroLower), Functional(F::kEtaTrivial)};
    case ValueId::kEansc:
      return {name, compute, Functional(F::kMarginalContributions), Functional(F::kEtaFromM)};
  }
  throw std::invalid_argument("unknown value id");
}

CheckOutcome CheckAxiom(Axiom axiom, const ValueRule& rule, const TuGame& v,
                        const std::optional<CovarianceProbe>& probe) {
  std::string id = Join(AxiomName(axiom), rule.name);
  const ValueResult f = rule.compute(v);
  const int n = v.players();
  switch (axiom) {
    case Axiom::kEfficiency:
      return CompareEqual(std::move(id), v, "sum f(v) vs v(N)",
                          PayoffVector{f.allocation.Sum()}, PayoffVector{v.grand_worth()});
    case Axiom::kMinimalRights: {
      const BoundVector mu = rule.lower(v);
      const TuGame reduced = ShiftDown(v, mu);
      ValueResult g;
      try {
        g = rule.compute(reduced);
      } catch (const Error& e) {
        return CheckOutcome::Fail(
            std::move(id), Note(v, std::string("v - mu(v) rejected: ") + e.what()));
      }
      return CompareEqual(std::move(id), v, "f(v) vs f(v - mu(v)) + mu(v)", f.allocation,
                          g.allocation + mu);
    }
    case Axiom::kRestrictedProportionality: {
      if (!rule.lower(v).IsZero()) return CheckOutcome::Skip(std::move(id), "mu(v) != 0");
      return Collinear(std::move(id), v, f.allocation, rule.upper(v));
    }
    case Axiom::kEgalitarianDivision: {
      if (!rule.lower(v).IsZero()) return CheckOutcome::Skip(std::move(id), "mu(v) != 0");
      return CompareEqual(std::move(id), v, "f_i vs f_1", f.allocation,
                          PayoffVector::Constant(n, f.allocation[0]));
    }
    case Axiom::kCovariance: {
      const CovarianceProbe p =
          probe.has_value() ? *probe : CovarianceProbe{Rational(3), DefaultShift(n)};
      const TuGame w = Transform(v, p.scale, p.shift);
      std::ostringstream inputs;
      inputs << "scale " << ToString(p.scale) << ", shift (" << ToString(p.shift) << ")";
      ValueResult g;
      try {
        g = rule.compute(w);
      } catch (const Error& e) {
        return CheckOutcome::Fail(
            std::move(id), Note(v, inputs.str() + ": transformed game rejected: " + e.what()));
      }
      return CompareEqual(std::move(id), v, inputs.str() + ": f(a v + x) vs a f(v) + x",
                          g.allocation, p.scale * f.allocation + p.shift);
    }
    case Axiom::kSelfDuality: {
      ValueResult g;
      try {
        g = rule.compute(Dual(v));
      } catch (const NotInClassError& e) {
        return CheckOutcome::Skip(std::move(id), std::string("dual ") + e.what());
      }
      return CompareEqual(std::move(id), v, "f(v) vs f(v*)", f.allocation, g.allocation);
    }
    case Axiom::kIndividualRationality: {
      const BoundVector nu = IndividualWorths(v);
      if (!nu.DominatedBy(f.lower_used)) {
        return CheckOutcome::Skip(std::move(id), "lower bound does not dominate nu");
      }
      if (!f.lower_used.DominatedBy(f.upper_used)) {
        return CheckOutcome::Skip(std::move(id), "bounds cross");
      }
      const int i = FirstExcess(nu, f.allocation);
      if (i < 0) return CheckOutcome::Pass(std::move(id));
      return CheckOutcome::Fail(std::move(id),
                                Witness{v, "nu(v) vs f(v)", nu, f.allocation, i});
    }
  }
  throw std::invalid_argument("unknown axiom");
}

CheckOutcome CheckConvexCoincidence(const TuGame& v) {
  if (!IsConvex(v)) throw NotInClassError("convex");
  const std::string id = "convex-coincidence";
  const Allocation tau = Tau(v).allocation;
  if (CheckOutcome o = CompareEqual(id, v, "tau vs chi", tau, Chi(v).allocation); !o.passed()) {
    return o;
  }
  if (CheckOutcome o = CompareEqual(id, v, "tau vs km", tau, Km(v).allocation); !o.passed()) {
    return o;
  }
  if (CheckOutcome o = CompareEqual(id, v, "m vs nu", Functional(BoundFunctionalId::kMinimalRights)(v), IndividualWorths(v));
      !o.passed()) {
    return o;
  }
  return CompareEqual(id, v, "Milnor vs M", MilnorUpper(v), MarginalContributions(v));
}

// ---------------------------------------------------------------------------
// Suite.

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}
  void set_game(int index) { game_ = index; }

  void Add(const CheckOutcome& outcome) {
    CheckTally& tally = report_.checks[outcome.check_id];
    switch (outcome.verdict) {
      case Verdict::kPass: ++tally.passed; break;
      case Verdict::kSkip: ++tally.skipped; break;
      case Verdict::kFail:
        ++tally.failed;
        if (tally.first_failure_game < 0) {
          tally.first_failure_game = game_;
          tally.first_failure = outcome.witness;
        }
        break;
    }
  }

  template <typename Body>
  void Run(const std::string& id, const TuGame& v, Body&& body) {
    Add(Guarded(id, v, std::forward<Body>(body)));
  }

  void Skip(const std::string& id, std::string reason) {
    Add(CheckOutcome::Skip(id, std::move(reason)));
  }

 private:
  SuiteReport& report_;
  int game_ = -1;
};

CheckOutcome BoundPairOutcome(std::string id, const TuGame& v, const BoundFunctional& lower,
                              const BoundFunctional& upper) {
  const BoundPairReport r = CheckBoundPair(v, lower, upper);
  if (r.holds()) return CheckOutcome::Pass(std::move(id));
  if (!r.property_i_holds) return CheckOutcome::Fail(std::move(id), *r.property_i_witness);
  if (!r.property_iia_holds) return CheckOutcome::Fail(std::move(id), *r.property_iia_witness);
  return CheckOutcome::Fail(std::move(id), *r.property_iib_witness);
}

void StructuralChecks(Recorder& rec, const TuGame& v, GameSampler& probes) {
  using F = BoundFunctionalId;
  const int n = v.players();
  const Rational& grand = v.grand_worth();

  rec.Run("dual-involution", v, [&] {
    return Expect("dual-involution", Dual(Dual(v)) == v, v, "(v*)* != v");
  });
  rec.Run("kikuta-le-milnor", v, [&] {
    const BoundVector lo = KikutaLower(v), hi = MilnorUpper(v);
    const int i = FirstExcess(lo, hi);
    if (i < 0) return CheckOutcome::Pass("kikuta-le-milnor");
    return CheckOutcome::Fail("kikuta-le-milnor", Witness{v, "Kikuta vs Milnor", lo, hi, i});
  });
  rec.Run("km-balanced", v, [&] {
    const Rational lo = KikutaLower(v).Sum(), hi = MilnorUpper(v).Sum();
    return Expect("km-balanced", lo <= grand && grand <= hi, v,
                  "sum Kikuta <= v(N) <= sum Milnor fails");
  });
  rec.Run("minimal-rights-ge-nu", v, [&] {
    return Expect("minimal-rights-ge-nu", IndividualWorths(v).DominatedBy(Functional(BoundFunctionalId::kMinimalRights)(v)), v,
                  "m(v) < nu(v) for some player");
  });
  for (const F lower_id : {F::kIndividualWorths, F::kMarginalContributions, F::kZeroLower}) {
    const BoundFunctional& mu = Functional(lower_id);
    const std::string id = "lbc-upper-identity/" + mu.name();
    rec.Run(id, v, [&] {
      const BoundVector lower = mu(v);
      const Rational lhs = EtaFromLower(v, lower).Sum() - grand;
      const Rational rhs = Rational(n - 1) * (grand - lower.Sum());
      return CompareEqual(id, v, "sum eta^mu - v(N) vs (n-1)(v(N) - sum mu)",
                          PayoffVector{lhs}, PayoffVector{rhs});
    });
  }
  for (const F upper_id : {F::kMarginalContributions, F::kMilnorUpper, F::kEtaPrime}) {
    const BoundFunctional& eta = Functional(upper_id);
    const std::string id = "residual-lower-le-upper/" + eta.name();
    const BoundVector upper = eta(v);
    if (!IsStronglyBound(v, upper)) {
      rec.Skip(id, "not in B_u(" + eta.name() + ")");
      continue;
    }
    rec.Run(id, v, [&] {
      const BoundVector lower = ResidualLower(v, upper);
      const int i = FirstExcess(lower, upper);
      if (i < 0) return CheckOutcome::Pass(id);
      return CheckOutcome::Fail(id, Witness{v, "mu^eta vs eta", lower, upper, i});
    });
  }
  rec.Run("residual-lower-ge-nu", v, [&] {
    // v(S) with S = {i} is one of the terms of the maximum.
    const BoundVector lower = ResidualLower(v, MilnorUpper(v));
    const BoundVector nu = IndividualWorths(v);
    const int i = FirstExcess(nu, lower);
    if (i < 0) return CheckOutcome::Pass("residual-lower-ge-nu");
    return CheckOutcome::Fail("residual-lower-ge-nu",
                              Witness{v, "nu vs mu^Milnor", nu, lower, i});
  });
  if (n >= 2) {
    rec.Run("tilde-system", v, [&] {
      EanscTildeLower(v);
      return CheckOutcome::Pass("tilde-system");
    });
  } else {
    rec.Skip("tilde-system", "n = 1");
  }

  const ClassReport cls = Classify(v);
  rec.Run("class-implications", v, [&] {
    if (cls.convex && !cls.semi_balanced) {
      return CheckOutcome::Fail("class-implications", Note(v, "convex but not semi-balanced"));
    }
    if (cls.convex && !cls.superadditive) {
      return CheckOutcome::Fail("class-implications", Note(v, "convex but not superadditive"));
    }
    if (cls.essential && !cls.weakly_essential) {
      return CheckOutcome::Fail("class-implications", Note(v, "essential but not weakly essential"));
    }
    if (cls.weakly_essential != IsWeaklyEssential(ZeroNormalise(v))) {
      return CheckOutcome::Fail("class-implications",
                                Note(v, "weak essentiality changes under zero-normalisation"));
    }
    return CheckOutcome::Pass("class-implications");
  });
  rec.Run("dual-swaps-bounds", v, [&] {
    // nu(v*) = M(v) and M(v*) = nu(v): duality exchanges the two inequalities
    // of essentiality.
    const TuGame d = Dual(v);
    if (CheckOutcome o = CompareEqual("dual-swaps-bounds", v, "nu(v*) vs M(v)",
                                      IndividualWorths(d), MarginalContributions(v));
        !o.passed()) {
      return o;
    }
    return CompareEqual("dual-swaps-bounds", v, "M(v*) vs nu(v)", MarginalContributions(d),
                        IndividualWorths(v));
  });

  for (const F fid : RegistryIds()) {
    const BoundFunctional& f = Functional(fid);
    if (fid == F::kEanscTildeLower && n < 2) continue;
    if (f.is_translation_covariant()) {
      const std::string id = "translation-covariance/" + f.name();
      const PayoffVector x = probes.NextVector(n);
      rec.Run(id, v, [&] {
        CheckOutcome o = CheckTranslationCovariance(f, v, x);
        o.check_id = id;
        return o;
      });
    }
    if (f.is_regular_lower()) {
      const std::string id = "regular-lower/" + f.name();
      if (f(v).Sum() > grand) {
        rec.Skip(id, "sum mu(v) > v(N)");
        continue;
      }
      rec.Run(id, v, [&] {
        CheckOutcome o = IsRegularLower(v, f);
        o.check_id = id;
        return o;
      });
    }
  }
}

void BoundPairChecks(Recorder& rec, const TuGame& v) {
  using F = BoundFunctionalId;
  const int n = v.players();
  const Rational& grand = v.grand_worth();
  const Rational sum_m = MarginalContributions(v).Sum();
  const BoundFunctional& m_fn = Functional(F::kMarginalContributions);
  const BoundFunctional& milnor = Functional(F::kMilnorUpper);
  const BoundFunctional& eta_prime = Functional(F::kEtaPrime);
  const BoundFunctional& nu = Functional(F::kIndividualWorths);
  const BoundFunctional& zero = Functional(F::kZeroLower);

  auto pair = [&](const std::string& name, bool applies, std::string why,
                  const BoundFunctional& lower, const BoundFunctional& upper) {
    const std::string id = "bound-pair/" + name;
    if (!applies) {
      rec.Skip(id, std::move(why));
      return;
    }
    rec.Run(id, v, [&] { return BoundPairOutcome(id, v, lower, upper); });
  };

  pair("km", true, "", Functional(F::kKikutaLower), milnor);
  pair("tau", IsSemiBalanced(v), "not semi-balanced", Functional(F::kMinimalRights), m_fn);
  pair("chi", true, "", DerivedLowerFromUpper(milnor), milnor);
  pair("cis", IsWeaklyEssential(v), "not weakly essential", nu, eta_prime);
  pair("ubc-eta-prime", IsStronglyBound(v, eta_prime(v)), "not in B_u(eta-prime)",
       DerivedLowerFromUpper(eta_prime), eta_prime);
  pair("pansc", PayoffVector(n).DominatedBy(m_fn(v)), "M(v) has a negative entry", zero, m_fn);
  pair("egal", grand >= 0, "v(N) < 0", zero, Functional(F::kEtaTrivial));
  pair("eansc-lbc", grand >= sum_m, "v(N) < sum M", m_fn, Functional(F::kEtaFromM));
  pair("eansc-tilde", n >= 2 && grand <= sum_m, "n = 1 or v(N) > sum M",
       Functional(F::kEanscTildeLower), m_fn);
}

// Errors a value may raise on a game that passes its class guard.
//   gately: sum (M - nu) = 0 with M != nu.
//   pansc:  some M_i < 0, so (0, M) is not ordered.
//   tau:    the semi-balanced inequalities give m <= M and v(N) <= sum M but
//           not sum m <= v(N); see the semi-balanced fixture.
bool ExpectedDomainError(ValueId id, ErrorCode code) {
  switch (id) {
    case ValueId::kGately: return code == ErrorCode::kDegenerateBounds;
    case ValueId::kPansc: return code == ErrorCode::kBoundOrderViolated;
    case ValueId::kTau: return code == ErrorCode::kNotBalanced;
    default: return false;
  }
}

// Closed form of the Gately value without its class guard.
std::optional<Allocation> GatelyFormula(const TuGame& v) {
  const BoundVector nu = IndividualWorths(v);
  const BoundVector m = MarginalContributions(v);
  const Rational spread = m.Sum() - nu.Sum();
  if (spread == 0) return std::nullopt;
  const Rational lambda = (v.grand_worth() - nu.Sum()) / spread;
  return nu + lambda * (m - nu);
}

void ValueChecks(Recorder& rec, const TuGame& v, GameSampler& probes) {
  const int n = v.players();
  for (const ValueId vid : AllValueIds()) {
    const ValueRule rule = RuleFor(vid);
    const std::string name = rule.name;
    std::optional<ValueResult> f;
    try {
      f = rule.compute(v);
    } catch (const NotInClassError& e) {
      rec.Skip("class-guard/" + name, e.what());
      continue;
    } catch (const Error& e) {
      if (ExpectedDomainError(vid, e.code())) {
        rec.Skip("class-guard/" + name, e.what());
        continue;
      }
      rec.Add(CheckOutcome::Fail("class-guard/" + name,
                                 Note(v, std::string("raised inside its class: ") + e.what())));
      continue;
    } catch (const std::exception& e) {
      rec.Add(CheckOutcome::Fail("class-guard/" + name, Note(v, e.what())));
      continue;
    }
    rec.Add(CheckOutcome::Pass("class-guard/" + name));

    auto axiom = [&](Axiom a, const TuGame& game, std::optional<CovarianceProbe> probe = {}) {
      const std::string id = Join(AxiomName(a), name);
      rec.Run(id, game, [&] { return CheckAxiom(a, rule, game, probe); });
    };

    axiom(Axiom::kEfficiency, v);
    axiom(Axiom::kMinimalRights, v);

    const std::string bracket_id = "bracketing/" + name;
    if (vid == ValueId::kGately && !f->lower_used.DominatedBy(f->upper_used)) {
      rec.Skip(bracket_id, "nu(v) not below M(v)");
    } else {
      rec.Run(bracket_id, v, [&] {
        const Allocation& x = f->allocation;
        if (int i = FirstExcess(f->lower_used, x); i >= 0) {
          return CheckOutcome::Fail(bracket_id, Witness{v, "lower vs f", f->lower_used, x, i});
        }
        if (int i = FirstExcess(x, f->upper_used); i >= 0) {
          return CheckOutcome::Fail(bracket_id, Witness{v, "f vs upper", x, f->upper_used, i});
        }
        if (!f->lambda.has_value()) {
          return CompareEqual(bracket_id, v, "degenerate pair: f vs lower", x, f->lower_used);
        }
        const Rational& lambda = *f->lambda;
        if (lambda < 0 || lambda > 1) {
          return CheckOutcome::Fail(bracket_id, Note(v, "lambda = " + ToString(lambda)));
        }
        return CompareEqual(bracket_id, v, "f vs lambda U + (1 - lambda) L", x,
                            lambda * f->upper_used + (Rational(1) - lambda) * f->lower_used);
      });
    }

    const bool proportional = vid == ValueId::kTau || vid == ValueId::kChi ||
                              vid == ValueId::kKm || vid == ValueId::kPansc ||
                              vid == ValueId::kGately;
    const bool egalitarian = vid == ValueId::kCis || vid == ValueId::kEgalitarian ||
                             vid == ValueId::kEansc;
    if (proportional || egalitarian) {
      const Axiom a = proportional ? Axiom::kRestrictedProportionality
                                   : Axiom::kEgalitarianDivision;
      axiom(a, v);
      // The reduced game has mu = 0, so the axiom is exercised, not skipped.
      const TuGame reduced = ShiftDown(v, rule.lower(v));
      axiom(a, reduced);
    }

    if (vid == ValueId::kTau || vid == ValueId::kChi) {
      for (const Rational& scale : {Rational(1, 2), Rational(1), Rational(3)}) {
        axiom(Axiom::kCovariance, v, CovarianceProbe{scale, probes.NextVector(n)});
      }
    }
    if (vid == ValueId::kKm || vid == ValueId::kGately) axiom(Axiom::kSelfDuality, v);
    if (vid == ValueId::kGately) {
      // The dual of an essential game is essential only when sum nu = v(N) =
      // sum M, so the guarded check above is mostly skipped. The formula
      // itself is self-dual.
      const std::string id = "self-duality/gately-formula";
      const std::optional<Allocation> dual_formula = GatelyFormula(Dual(v));
      if (!dual_formula) {
        rec.Skip(id, "sum (M - nu) = 0");
      } else {
        rec.Run(id, v, [&] {
          return CompareEqual(id, v, "gately(v) vs Gately formula on v*", f->allocation,
                              *dual_formula);
        });
      }
    }
    if (vid == ValueId::kTau || vid == ValueId::kChi || vid == ValueId::kCis ||
        vid == ValueId::kGately) {
      axiom(Axiom::kIndividualRationality, v);
    }
  }
}

void ValueIdentityChecks(Recorder& rec, const TuGame& v) {
  const int n = v.players();
  const Rational& grand = v.grand_worth();
  const Rational sum_m = MarginalContributions(v).Sum();

  if (IsConvex(v)) {
    rec.Run("convex-coincidence", v, [&] { return CheckConvexCoincidence(v); });
  } else {
    rec.Skip("convex-coincidence", "not convex");
  }

  rec.Run("eansc-dual-identity", v, [&] {
    // CIS closed form applied to the dual game, with no class guard.
    const TuGame d = Dual(v);
    const BoundVector nu_d = IndividualWorths(d);
    Allocation expected = nu_d;
    const Rational share = (d.grand_worth() - nu_d.Sum()) / n;
    for (Player i = 0; i < n; ++i) expected[i] += share;
    return CompareEqual("eansc-dual-identity", v, "eansc(v) vs CIS formula on v*",
                        Eansc(v).allocation, expected);
  });

  rec.Run("eansc-routes", v, [&] {
    const ValueResult r = Eansc(v);
    auto has = [&](std::string_view route) {
      for (const std::string& s : r.routes) {
        if (s == route) return true;
      }
      return false;
    };
    const bool want_tilde = n >= 2 && grand <= sum_m;
    const bool want_lbc = grand >= sum_m;
    return Expect("eansc-routes", has("(mu~,M)") == want_tilde && has("(M,eta^M)") == want_lbc,
                  v, "bound pair routes do not match v(N) against sum M");
  });

  if (InBHat(v) && IsWeaklyEssential(v)) {
    rec.Run("cis-ubc-agreement", v, [&] {
      return CompareEqual("cis-ubc-agreement", v, "ubc(eta-prime) vs cis",
                          UbcValue(v, Functional(BoundFunctionalId::kEtaPrime)).allocation,
                          Cis(v).allocation);
    });
    rec.Run("b-hat-in-strong-upper", v, [&] {
      return Expect("b-hat-in-strong-upper",
                    IsStronglyBound(v, Functional(BoundFunctionalId::kEtaPrime)(v)), v,
                    "in B-hat but not in B_u(eta-prime)");
    });
  } else {
    rec.Skip("cis-ubc-agreement", "not in B-hat or not weakly essential");
    rec.Skip("b-hat-in-strong-upper", "not in B-hat or not weakly essential");
  }

  rec.Run("km-totality", v, [&] {
    return CompareEqual("km-totality", v, "sum km vs v(N)",
                        PayoffVector{Km(v).allocation.Sum()}, PayoffVector{grand});
  });
}

// The three-player family with v12 = a used throughout the negative fixtures.
TuGame FamilyGame(int a) {
  using C = Coalition;
  return BuildGame(3, {{C::Of({0}), Rational(1)},
                       {C::Of({1}), Rational(1)},
                       {C::Of({2}), Rational(2)},
                       {C::Of({0, 1}), Rational(a)},
                       {C::Of({0, 2}), Rational(6)},
                       {C::Of({1, 2}), Rational(6)},
                       {C::Of({0, 1, 2}), Rational(8)}});
}

std::string Describe(const Witness& w) {
  std::string out = w.inputs;
  if (w.component >= 0) out += " at player " + std::to_string(w.component + 1);
  if (w.lhs.size() > 0 || w.rhs.size() > 0) {
    out += ": (" + ToString(w.lhs) + ") vs (" + ToString(w.rhs) + ")";
  }
  return out;
}

FixtureResult Fixture(std::string id, const std::function<FixtureResult()>& body) {
  try {
    FixtureResult r = body();
    r.id = std::move(id);
    return r;
  } catch (const std::exception& e) {
    return FixtureResult{std::move(id), false, std::string("raised: ") + e.what()};
  }
}

Json WitnessToJson(const Witness& w) {
  Json j;
  j["inputs"] = w.inputs;
  j["player"] = w.component >= 0 ? Json(w.component + 1) : Json(nullptr);
  j["lhs"] = internal::PayoffToJson(w.lhs);
  j["rhs"] = internal::PayoffToJson(w.rhs);
  j["game"] = w.game.has_value() ? internal::GameToJson(*w.game) : Json(nullptr);
  return j;
}

}  // namespace

std::vector<FixtureResult> RunNegativeFixtures() {
  using F = BoundFunctionalId;
  std::vector<FixtureResult> out;

  out.push_back(Fixture("bound-pair-fails-iib/individual-worths,eta-trivial", [] {
    const TuGame v = FamilyGame(6);
    const BoundPairReport r =
        CheckBoundPair(v, Functional(F::kIndividualWorths), Functional(F::kEtaTrivial));
    const bool expected_witness = r.property_iib_witness.has_value() &&
                                  r.property_iib_witness->lhs == PayoffVector{4, 4, 4} &&
                                  r.property_iib_witness->rhs == PayoffVector{7, 7, 6};
    const bool behaved = r.property_i_holds && r.property_iia_holds && !r.property_iib_holds &&
                         expected_witness;
    return FixtureResult{"", behaved,
                         r.property_iib_witness ? Describe(*r.property_iib_witness)
                                                : "property (ii-b) unexpectedly holds"};
  }));

  out.push_back(Fixture("not-regular/constant(1,1,1)", [] {
    const TuGame v = BuildGame(3, {{Coalition::Grand(3), Rational(5)}});
    const CheckOutcome o = IsRegularLower(v, ConstantLower(PayoffVector{1, 1, 1}));
    const bool behaved = o.failed() && o.witness && o.witness->lhs == PayoffVector{1, 1, 1};
    return FixtureResult{"", behaved, o.witness ? Describe(*o.witness) : "regularity holds"};
  }));

  out.push_back(Fixture("not-covariant/eta-trivial", [] {
    const TuGame v = FamilyGame(6);
    const CheckOutcome o =
        CheckTranslationCovariance(Functional(F::kEtaTrivial), v, PayoffVector{1, 0, 0});
    return FixtureResult{"", o.failed(), o.witness ? Describe(*o.witness) : "covariance holds"};
  }));

  out.push_back(Fixture("not-covariant/zero-lower", [] {
    const TuGame v = FamilyGame(6);
    const CheckOutcome o =
        CheckTranslationCovariance(Functional(F::kZeroLower), v, PayoffVector{1, 0, 0});
    return FixtureResult{"", o.failed(), o.witness ? Describe(*o.witness) : "covariance holds"};
  }));

  out.push_back(Fixture("ubc-eta-prime-differs-from-cis", [] {
    const TuGame v = FamilyGame(8);
    const Allocation ubc = UbcValue(v, Functional(F::kEtaPrime)).allocation;
    const Allocation cis = Cis(v).allocation;
    const bool behaved = ubc == PayoffVector{3, 3, 2} && ubc != cis && !InBHat(v) &&
                         IsStronglyBound(v, Functional(F::kEtaPrime)(v));
    return FixtureResult{"", behaved,
                         "ubc(eta-prime) = (" + ToString(ubc) + "), cis = (" + ToString(cis) + ")"};
  }));

  out.push_back(Fixture("mutant-tau-violates-proportionality", [] {
    // A zero-normalised convex game, so m(v) = 0 and the axiom applies.
    using C = Coalition;
    const TuGame v = BuildGame(3, {{C::Of({0, 1}), Rational(2)},
                                   {C::Of({0, 2}), Rational(3)},
                                   {C::Of({1, 2}), Rational(4)},
                                   {C::Of({0, 1, 2}), Rational(9)}});
    ValueRule mutant = RuleFor(ValueId::kTau);
    mutant.name = "tau-mutant";
    mutant.compute = [](const TuGame& g) {
      ValueResult r = Tau(g);
      r.allocation[0] += Rational(1, 10);
      r.allocation[1] -= Rational(1, 10);
      return r;
    };
    const CheckOutcome eff = CheckAxiom(Axiom::kEfficiency, mutant, v);
    const CheckOutcome prop = CheckAxiom(Axiom::kRestrictedProportionality, mutant, v);
    const CheckOutcome honest =
        CheckAxiom(Axiom::kRestrictedProportionality, RuleFor(ValueId::kTau), v);
    const bool behaved = eff.passed() && prop.failed() && honest.passed();
    return FixtureResult{"", behaved,
                         prop.witness ? Describe(*prop.witness) : "mutant passes the axiom"};
  }));

  out.push_back(Fixture("semi-balanced-not-quasi-balanced", [] {
    // m = (0, 1, 1) sums to 2 > v(N) although every semi-balanced inequality
    // holds, so tau is not defined as a compromise here.
    using C = Coalition;
    const TuGame v = BuildGame(3, {{C::Of({1}), Rational(1)},
                                   {C::Of({2}), Rational(1)},
                                   {C::Of({0, 1, 2}), Rational(1)}});
    const BoundVector m = Functional(F::kMinimalRights)(v);
    bool not_balanced = false;
    try {
      Tau(v);
    } catch (const Error& e) {
      not_balanced = e.code() == ErrorCode::kNotBalanced;
    }
    const bool behaved = IsSemiBalanced(v) && m == PayoffVector{0, 1, 1} && not_balanced;
    return FixtureResult{"", behaved, "m = (" + ToString(m) + "), v(N) = 1"};
  }));

  out.push_back(Fixture("dual-of-essential-not-essential", [] {
    const TuGame v = FamilyGame(2);
    const TuGame d = Dual(v);
    const bool behaved = IsEssential(v) && !IsEssential(d) &&
                         GatelyFormula(d) == std::optional<Allocation>(Gately(v).allocation);
    return FixtureResult{"", behaved,
                         "nu(v*) = (" + ToString(IndividualWorths(d)) + "), v*(N) = " +
                             ToString(d.grand_worth())};
  }));

  return out;
}

SuiteReport RunSuiteOnGames(std::span<const TuGame> games, const SamplerConfig& config) {
  SuiteReport report;
  report.config = config;
  report.games = static_cast<int>(games.size());
  SamplerConfig probe_config = config;
  probe_config.seed = config.seed ^ 0x9e3779b97f4a7c15ULL;
  GameSampler probes(probe_config);
  Recorder rec(report);
  for (size_t k = 0; k < games.size(); ++k) {
    const TuGame& v = games[k];
    rec.set_game(static_cast<int>(k));
    StructuralChecks(rec, v, probes);
    BoundPairChecks(rec, v);
    ValueChecks(rec, v, probes);
    ValueIdentityChecks(rec, v);
  }
  report.fixtures = RunNegativeFixtures();
  return report;
}

SuiteReport RunSuite(const SamplerConfig& config) {
  const std::vector<TuGame> games = SampleGames(config);
  return RunSuiteOnGames(games, config);
}

int SuiteReport::total_failures() const {
  int total = 0;
  for (const auto& [id, tally] : checks) total += tally.failed;
  for (const FixtureResult& f : fixtures) total += f.behaved ? 0 : 1;
  return total;
}

bool SuiteReport::ok() const { return total_failures() == 0; }

std::string SuiteReport::ToJson(int indent) const {
  Json j;
  Json c;
  c["n_min"] = config.n_min;
  c["n_max"] = config.n_max;
  c["numerator_min"] = config.numerator_min;
  c["numerator_max"] = config.numerator_max;
  c["denominator_max"] = config.denominator_max;
  c["filter"] = std::string(FilterName(config.filter));
  c["count"] = config.count;
  c["seed"] = config.seed;
  c["retry_cap"] = config.retry_cap;
  j["config"] = std::move(c);
  j["games"] = games;
  j["ok"] = ok();
  j["failures"] = total_failures();
  Json checks_json = Json::object();
  for (const auto& [id, tally] : checks) {
    Json t;
    t["passed"] = tally.passed;
    t["failed"] = tally.failed;
    t["skipped"] = tally.skipped;
    if (tally.first_failure.has_value()) {
      t["first_failure"] = {{"game_index", tally.first_failure_game},
                            {"witness", WitnessToJson(*tally.first_failure)}};
    } else {
      t["first_failure"] = nullptr;
    }
    checks_json[id] = std::move(t);
  }
  j["checks"] = std::move(checks_json);
  Json fixtures_json = Json::array();
  for (const FixtureResult& f : fixtures) {
    fixtures_json.push_back({{"id", f.id}, {"behaved", f.behaved}, {"detail", f.detail}});
  }
  j["fixtures"] = std::move(fixtures_json);
  return j.dump(indent);
}

std::string SuiteReport::ToTable() const {
  std::ostringstream out;
  out << "games: " << games << "  seed: " << config.seed << "  filter: "
      << FilterName(config.filter) << "\n";
  for (const auto& [id, tally] : checks) {
    out << (tally.failed == 0 ? "PASS " : "FAIL ") << id << "  passed " << tally.passed
        << "  failed " << tally.failed << "  skipped " << tally.skipped << "\n";
    if (tally.first_failure.has_value()) {
      out << "     first failure in game " << tally.first_failure_game << ": "
          << Describe(*tally.first_failure) << "\n";
    }
  }
  for (const FixtureResult& f : fixtures) {
    out << (f.behaved ? "PASS " : "FAIL ") << "fixture " << f.id << "  " << f.detail << "\n";
  }
  out << (ok() ? "OK" : "FAILED") << ": " << total_failures() << " failure(s)\n";
  return out.str();
}

}  // namespace coopvals
