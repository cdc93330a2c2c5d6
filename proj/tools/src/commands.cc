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

#include "coopvals_cli/commands.h"

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "coopvals/bounds.h"
#include "coopvals/classify.h"
#include "coopvals/error.h"
#include "coopvals/game.h"
#include "coopvals/game_io.h"
#include "coopvals/rational.h"
#include "coopvals/values.h"
#include "coopvals/verify.h"
#include "json.hpp"

namespace coopvals::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kTable, kJson };

// Raised for problems with the command line or the game file; exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json RationalJson(const Rational& r) { return ToString(r); }

Json VectorJson(const PayoffVector& x) {
  Json out = Json::array();
  for (const Rational& r : x.values()) out.push_back(ToString(r));
  return out;
}

std::string Decimals(const PayoffVector& x) {
  std::string out;
  for (int i = 0; i < x.size(); ++i) {
    if (i > 0) out += ' ';
    out += ToDecimalString(x[i]);
  }
  return out;
}

const char* YesNo(bool b) { return b ? "true" : "false"; }

TuGame LoadGame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream bytes;
  bytes << in.rdbuf();
  try {
    return ParseGameFile(bytes.str());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json ValueJson(const ValueResult& r) {
  Json j;
  j["applicable"] = true;
  j["allocation"] = VectorJson(r.allocation);
  j["lambda"] = r.lambda ? RationalJson(*r.lambda) : Json(nullptr);
  j["lower"] = VectorJson(r.lower_used);
  j["upper"] = VectorJson(r.upper_used);
  if (!r.routes.empty()) j["routes"] = r.routes;
  return j;
}

void PrintValueTable(std::ostream& out, const ValueResult& r) {
  out << "allocation: " << ToString(r.allocation) << "\n";
  out << "decimal: " << Decimals(r.allocation) << "\n";
  out << "lambda: " << (r.lambda ? ToString(*r.lambda) : std::string("none")) << "\n";
  out << "lower: " << ToString(r.lower_used) << "\n";
  out << "upper: " << ToString(r.upper_used) << "\n";
  if (!r.routes.empty()) {
    out << "routes:";
    for (const std::string& s : r.routes) out << ' ' << s;
    out << "\n";
  }
}

Json ClassesJson(const ClassReport& c) {
  return Json{{"monotonic", c.monotonic},
              {"superadditive", c.superadditive},
              {"convex", c.convex},
              {"essential", c.essential},
              {"weakly_essential", c.weakly_essential},
              {"semi_balanced", c.semi_balanced},
              {"m_lower_class", c.m_lower_class},
              {"m_upper_class", c.m_upper_class}};
}

// ---------------------------------------------------------------------------
// report

int CmdReport(const std::string& path, Format format, std::ostream& out) {
  const TuGame v = LoadGame(path);
  const ClassReport cls = Classify(v);
  const int n = v.players();

  std::vector<std::pair<std::string, BoundVector>> bounds;
  for (const BoundFunctionalId id :
       {BoundFunctionalId::kIndividualWorths, BoundFunctionalId::kMarginalContributions,
        BoundFunctionalId::kMinimalRights, BoundFunctionalId::kKikutaLower,
        BoundFunctionalId::kMilnorUpper, BoundFunctionalId::kEtaPrime}) {
    bounds.emplace_back(std::string(FunctionalName(id)), Functional(id)(v));
  }

  struct Row {
    std::string name;
    std::optional<ValueResult> result;
    std::string reason;
  };
  std::vector<Row> rows;
  for (const ValueId id : AllValueIds()) {
    Row row{std::string(ValueName(id)), std::nullopt, ""};
    try {
      row.result = ComputeValue(id, v);
    } catch (const NotInClassError& e) {
      row.reason = e.detail();
    } catch (const Error& e) {
      row.reason = std::string("undefined: ") + e.what();
    }
    rows.push_back(std::move(row));
  }

  if (format == Format::kJson) {
    Json j;
    j["players"] = n;
    if (!v.labels().empty()) j["labels"] = v.labels();
    j["grand_worth"] = RationalJson(v.grand_worth());
    j["classes"] = ClassesJson(cls);
    j["membership"] = {{"b_hat", InBHat(v)}, {"b_tilde", InBTilde(v)}};
    Json b;
    for (const auto& [name, x] : bounds) b[name] = VectorJson(x);
    j["bounds"] = std::move(b);
    Json values;
    for (const Row& row : rows) {
      values[row.name] = row.result ? ValueJson(*row.result)
                                    : Json{{"applicable", false}, {"reason", row.reason}};
    }
    j["values"] = std::move(values);
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "players: " << n;
  if (!v.labels().empty()) {
    out << " (";
    for (size_t i = 0; i < v.labels().size(); ++i) out << (i ? ", " : "") << v.labels()[i];
    out << ")";
  }
  out << "\nv(N): " << ToString(v.grand_worth()) << "\n";
  out << "classes:";
  const Json flags = ClassesJson(cls);
  for (const auto& [key, flag] : flags.items()) {
    out << " " << key << "=" << YesNo(flag.get<bool>());
  }
  out << "\n";
  out << "membership: b_hat=" << YesNo(InBHat(v)) << " b_tilde=" << YesNo(InBTilde(v))
      << "\n\nbounds\n";
  for (const auto& [name, x] : bounds) {
    out << "  " << std::left << std::setw(24) << name << ToString(x) << "\n";
  }
  out << "\nvalues\n";
  for (const Row& row : rows) {
    out << "  " << std::left << std::setw(8) << row.name;
    if (!row.result) {
      out << row.reason << "\n";
      continue;
    }
    out << ToString(row.result->allocation) << "  [" << Decimals(row.result->allocation)
        << "]  lambda "
        << (row.result->lambda ? ToString(*row.result->lambda) : std::string("none")) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compute

int CmdCompute(const std::string& path, const std::string& value, bool strict, Format format,
               std::ostream& out) {
  const std::optional<ValueId> id = ParseValueId(value);
  if (!id) throw InputError("unknown value '" + value + "'");
  const TuGame v = LoadGame(path);
  const ValueResult r = (*id == ValueId::kGately && strict)
                            ? Gately(v, GatelyMode::kStrict)
                            : ComputeValue(*id, v);
  if (format == Format::kJson) {
    Json j;
    j["value"] = value;
    const Json fields = ValueJson(r);
    for (const auto& [key, item] : fields.items()) j[key] = item;
    out << j.dump(2) << "\n";
  } else {
    out << "value: " << value << "\n";
    PrintValueTable(out, r);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

struct PairSpec {
  std::string name;
  BoundFunctional lower;
  BoundFunctional upper;
};

PairSpec LookupPair(const std::string& name) {
  using F = BoundFunctionalId;
  const auto& f = [](F id) -> const BoundFunctional& { return Functional(id); };
  if (name == "km") return {name, f(F::kKikutaLower), f(F::kMilnorUpper)};
  if (name == "tau") return {name, f(F::kMinimalRights), f(F::kMarginalContributions)};
  if (name == "chi") return {name, DerivedLowerFromUpper(f(F::kMilnorUpper)), f(F::kMilnorUpper)};
  if (name == "cis") return {name, f(F::kIndividualWorths), f(F::kEtaPrime)};
  if (name == "gately") return {name, f(F::kIndividualWorths), f(F::kMarginalContributions)};
  if (name == "eansc") return {name, f(F::kEanscTildeLower), f(F::kMarginalContributions)};
  if (name == "eansc-lbc") return {name, f(F::kMarginalContributions), f(F::kEtaFromM)};
  if (name == "pansc") return {name, f(F::kZeroLower), f(F::kMarginalContributions)};
  if (name == "egal") return {name, f(F::kZeroLower), f(F::kEtaTrivial)};
  if (name == "ubc-eta-prime") {
    return {name, DerivedLowerFromUpper(f(F::kEtaPrime)), f(F::kEtaPrime)};
  }
  throw InputError("unknown pair '" + name + "'");
}

Json BoundPairJson(const BoundPairReport& r) {
  return Json{{"i", r.property_i_holds},
              {"ii_a", r.property_iia_holds},
              {"ii_b", r.property_iib_holds}};
}

int CmdBounds(const std::string& path, const std::string& pair_name, Format format,
              std::ostream& out) {
  const PairSpec pair = LookupPair(pair_name);
  const TuGame v = LoadGame(path);
  const BoundVector mu = pair.lower(v);
  const BoundVector eta = pair.upper(v);
  const MembershipReport m = Membership(v, pair.lower, pair.upper);
  const BoundPairReport bp = CheckBoundPair(v, pair.lower, pair.upper);
  if (format == Format::kJson) {
    Json j;
    j["pair"] = pair.name;
    j["lower_functional"] = pair.lower.name();
    j["upper_functional"] = pair.upper.name();
    j["mu"] = VectorJson(mu);
    j["eta"] = VectorJson(eta);
    j["sum_mu"] = RationalJson(mu.Sum());
    j["sum_eta"] = RationalJson(eta.Sum());
    j["grand_worth"] = RationalJson(v.grand_worth());
    j["balanced"] = m.in_balanced;
    j["lower_class"] = m.in_lower_class;
    j["strong_upper"] = m.in_strong_upper;
    j["proper_upper"] = m.in_proper_upper ? Json(*m.in_proper_upper) : Json(nullptr);
    j["b_hat"] = m.in_b_hat;
    j["b_tilde"] = m.in_b_tilde;
    j["bound_pair"] = BoundPairJson(bp);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "pair: " << pair.name << " (" << pair.lower.name() << ", " << pair.upper.name()
      << ")\n";
  out << "mu: " << ToString(mu) << "\n";
  out << "eta: " << ToString(eta) << "\n";
  out << "sum mu: " << ToString(mu.Sum()) << "\n";
  out << "sum eta: " << ToString(eta.Sum()) << "\n";
  out << "v(N): " << ToString(v.grand_worth()) << "\n";
  out << "balanced: " << YesNo(m.in_balanced) << "\n";
  out << "lower class: " << YesNo(m.in_lower_class) << "\n";
  out << "strong upper: " << YesNo(m.in_strong_upper) << "\n";
  out << "proper upper: "
      << (m.in_proper_upper ? YesNo(*m.in_proper_upper) : "n/a (upper bound not covariant)")
      << "\n";
  out << "b_hat: " << YesNo(m.in_b_hat) << "\n";
  out << "b_tilde: " << YesNo(m.in_b_tilde) << "\n";
  out << "bound pair: (i) " << YesNo(bp.property_i_holds) << ", (ii-a) "
      << YesNo(bp.property_iia_holds) << ", (ii-b) " << YesNo(bp.property_iib_holds) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check and sample

struct SampleFlags {
  std::uint64_t seed = 42;
  int count = 100;
  std::optional<int> n;
  int n_min = 2;
  int n_max = 4;
  std::int64_t numerator_min = -10;
  std::int64_t numerator_max = 10;
  std::int64_t denominator_max = 1;
  std::string filter = "any";

  void Register(CLI::App* app) {
    app->add_option("--seed", seed, "RNG seed")->capture_default_str();
    app->add_option("--count", count, "Number of games")->capture_default_str();
    app->add_option("--n", n, "Player count (sets both --n-min and --n-max)");
    app->add_option("--n-min", n_min, "Smallest player count")->capture_default_str();
    app->add_option("--n-max", n_max, "Largest player count")->capture_default_str();
    app->add_option("--numerator-min", numerator_min)->capture_default_str();
    app->add_option("--numerator-max", numerator_max)->capture_default_str();
    app->add_option("--denominator-max", denominator_max)->capture_default_str();
    app->add_option("--class", filter,
                    "any|zero-normalised|convex|essential|weakly-essential|semi-balanced|"
                    "M-lower|M-upper")
        ->capture_default_str();
  }

  SamplerConfig Config() const {
    SamplerConfig c;
    c.seed = seed;
    c.count = count;
    c.n_min = n ? *n : n_min;
    c.n_max = n ? *n : n_max;
    c.numerator_min = numerator_min;
    c.numerator_max = numerator_max;
    c.denominator_max = denominator_max;
    const std::optional<GameClassFilter> f = ParseFilter(filter);
    if (!f) throw InputError("unknown class filter '" + filter + "'");
    c.filter = *f;
    try {
      GameSampler probe(c);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return c;
  }
};

int CmdCheckPair(const std::string& path, const std::string& lower_name,
                 const std::string& upper_name, bool expect_fail, Format format,
                 std::ostream& out) {
  auto lookup = [](const std::string& name) -> const BoundFunctional& {
    const std::optional<BoundFunctionalId> id = ParseFunctionalId(name);
    if (!id) throw InputError("unknown bound functional '" + name + "'");
    return Functional(*id);
  };
  const BoundFunctional& lower = lookup(lower_name);
  const BoundFunctional& upper = lookup(upper_name);
  const TuGame v = LoadGame(path);
  const BoundPairReport r = CheckBoundPair(v, lower, upper);
  const bool failed = !r.holds();
  const bool as_expected = failed == expect_fail;

  struct Property {
    const char* name;
    bool holds;
    const std::optional<Witness>* witness;
  };
  const Property props[] = {{"i", r.property_i_holds, &r.property_i_witness},
                            {"ii-a", r.property_iia_holds, &r.property_iia_witness},
                            {"ii-b", r.property_iib_holds, &r.property_iib_witness}};
  if (format == Format::kJson) {
    Json j;
    j["lower"] = lower.name();
    j["upper"] = upper.name();
    j["expect_fail"] = expect_fail;
    Json p;
    for (const Property& prop : props) {
      Json entry{{"holds", prop.holds}};
      if (*prop.witness) {
        const Witness& w = **prop.witness;
        entry["witness"] = {{"inputs", w.inputs},
                            {"player", w.component >= 0 ? Json(w.component + 1) : Json(nullptr)},
                            {"lhs", VectorJson(w.lhs)},
                            {"rhs", VectorJson(w.rhs)}};
      }
      p[prop.name] = std::move(entry);
    }
    j["properties"] = std::move(p);
    j["holds"] = r.holds();
    j["as_expected"] = as_expected;
    out << j.dump(2) << "\n";
  } else {
    out << "bound pair (" << lower.name() << ", " << upper.name() << ")\n";
    for (const Property& prop : props) {
      out << "  (" << prop.name << ") " << (prop.holds ? "holds" : "FAILS");
      if (*prop.witness) {
        const Witness& w = **prop.witness;
        out << ": " << ToString(w.lhs) << " vs " << ToString(w.rhs);
        if (w.component >= 0) out << " at player " << w.component + 1;
      }
      out << "\n";
    }
    out << (failed ? "result: fails" : "result: holds")
        << (expect_fail ? " (expected to fail)" : "") << "\n";
  }
  return as_expected ? kExitOk : kExitDomainError;
}

int CmdCheckSuite(const std::optional<std::string>& path, const SampleFlags& flags,
                  Format format, std::ostream& out) {
  const SamplerConfig config = flags.Config();
  SuiteReport report;
  if (path) {
    const TuGame v = LoadGame(*path);
    report = RunSuiteOnGames(std::span<const TuGame>(&v, 1), config);
  } else {
    report = RunSuite(config);
  }
  out << (format == Format::kJson ? report.ToJson(2) + "\n" : report.ToTable());
  return report.ok() ? kExitOk : kExitDomainError;
}

int CmdSample(const SampleFlags& flags, Format format, std::ostream& out) {
  const std::vector<TuGame> games = SampleGames(flags.Config());
  if (format == Format::kJson) {
    Json all = Json::array();
    for (const TuGame& v : games) all.push_back(Json::parse(SerializeGameFile(v)));
    out << all.dump(2) << "\n";
    return kExitOk;
  }
  for (size_t k = 0; k < games.size(); ++k) {
    out << "# game " << k << " (n = " << games[k].players() << ")\n"
        << SerializeGameFile(games[k]) << "\n";
  }
  return kExitOk;
}

Format ParseFormat(const std::string& name) {
  if (name == "table") return Format::kTable;
  if (name == "json") return Format::kJson;
  throw InputError("unknown format '" + name + "'");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact compromise values for cooperative TU-games", "coopvals"};
  app.require_subcommand(1);

  std::string game_path;
  std::string format_name;
  CLI::App* report = app.add_subcommand("report", "Classes, bounds and every named value");
  report->add_option("--game", game_path, "Game file (JSON)")->required();
  report->add_option("--format", format_name, "table|json");

  std::string value_name;
  bool strict = false;
  CLI::App* compute = app.add_subcommand("compute", "One named value");
  compute->add_option("--game", game_path, "Game file (JSON)")->required();
  compute->add_option("--value", value_name, "tau|chi|gately|cis|pansc|eansc|egal|km")
      ->required();
  compute->add_flag("--strict", strict, "Gately: require v_i <= M_i");
  compute->add_option("--format", format_name, "table|json");

  std::string pair_name;
  CLI::App* bounds = app.add_subcommand("bounds", "Bound vectors and class membership");
  bounds->add_option("--game", game_path, "Game file (JSON)")->required();
  bounds->add_option("--pair", pair_name,
                     "km|tau|chi|cis|gately|eansc|eansc-lbc|pansc|egal|ubc-eta-prime")
      ->required();
  bounds->add_option("--format", format_name, "table|json");

  SampleFlags check_flags;
  std::string lower_name, upper_name;
  bool use_sample = false, suite = false, expect_fail = false;
  CLI::App* check = app.add_subcommand("check", "Verification suite or a single bound pair");
  check->add_option("--game", game_path, "Game file (JSON)");
  check->add_flag("--sample", use_sample, "Check seeded random games");
  check->add_flag("--suite", suite, "Run the full suite (default)");
  check->add_option("--lower", lower_name, "Lower bound functional for a pair check");
  check->add_option("--upper", upper_name, "Upper bound functional for a pair check");
  check->add_flag("--expect-fail", expect_fail, "The pair check is expected to fail");
  check->add_option("--format", format_name, "table|json");
  check_flags.Register(check);

  SampleFlags sample_flags;
  CLI::App* sample = app.add_subcommand("sample", "Emit seeded random games");
  sample_flags.Register(sample);
  sample->add_option("--format", format_name, "json|table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    const bool is_sample = sample->parsed();
    const Format format =
        ParseFormat(format_name.empty() ? (is_sample ? "json" : "table") : format_name);
    if (report->parsed()) return CmdReport(game_path, format, out);
    if (compute->parsed()) return CmdCompute(game_path, value_name, strict, format, out);
    if (bounds->parsed()) return CmdBounds(game_path, pair_name, format, out);
    if (check->parsed()) {
      const bool pair_check = !lower_name.empty() || !upper_name.empty();
      if (pair_check) {
        if (lower_name.empty() || upper_name.empty() || game_path.empty()) {
          throw InputError("a pair check needs --game, --lower and --upper");
        }
        if (use_sample || suite) throw InputError("--lower/--upper cannot be combined with --suite");
        return CmdCheckPair(game_path, lower_name, upper_name, expect_fail, format, out);
      }
      if (expect_fail) throw InputError("--expect-fail applies to pair checks only");
      if (use_sample && !game_path.empty()) {
        throw InputError("--game and --sample are mutually exclusive");
      }
      std::optional<std::string> path;
      if (!game_path.empty()) path = game_path;
      return CmdCheckSuite(path, check_flags, format, out);
    }
    if (is_sample) return CmdSample(sample_flags, format, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const NotInClassError& e) {
    err << "error: " << e.detail() << "\n";
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return IsDomainError(e.code()) || e.code() == ErrorCode::kSamplerExhausted
               ? kExitDomainError
               : kExitParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitParseError;
}

}  // namespace coopvals::cli
