// Copyright 2026 The frobkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "frobkit/closed_forms.h"
#include "frobkit/constructive.h"

namespace frobkit::cli {

namespace {

constexpr std::size_t kMaxCounterexamples = 50;

Json ParamsJson(Int m, Int n) {
  return {{"m", IntToJson(m)}, {"n", IntToJson(n)}};
}

std::string Cell(Int m, Int n) {
  return "m=" + ToString(m) + " n=" + ToString(n);
}

struct CellOutcome {
  bool formula = true;
  bool witness = true;
  bool construction = true;
  bool lemma = true;
  std::vector<std::string> counterexamples;
};

CellOutcome VerifyCell(Int m, Int n, const VerifyArgs& args,
                       const OracleOptions& options) {
  CellOutcome out;
  const TripleParams params = MakeTripleParams(m, n);
  const PythTriple triple = TripleFromParams(params);
  const std::array<Int, 3> gens = triple.generators();
  const GeneratorSet set = GeneratorSetFromTriple(triple);
  const Int frobenius = PythagoreanFrobenius(params).value;

  const Int oracle = FrobeniusDp(set, options).value;
  if (oracle != frobenius) {
    out.formula = false;
    out.counterexamples.push_back("formula_vs_oracle " + Cell(m, n) +
                                  ": closed form " + ToString(frobenius) +
                                  ", oracle " + ToString(oracle));
  }

  const Int reach = std::max<Int>(args.rep_window, set.min());
  const ReachabilityTable table(set, CheckedAdd(frobenius, reach), options);
  if (table.contains(frobenius)) {
    out.witness = false;
    out.counterexamples.push_back("frobenius_witness " + Cell(m, n) + ": " +
                                  ToString(frobenius) + " is representable");
  }
  for (Int j = 1; j <= set.min(); ++j) {
    if (!table.contains(frobenius + j)) {
      out.witness = false;
      out.counterexamples.push_back("frobenius_witness " + Cell(m, n) + ": " +
                                    ToString(frobenius + j) +
                                    " is not representable");
    }
  }

  for (Int target = frobenius + 1; target <= frobenius + args.rep_window;
       ++target) {
    std::string failure;
    try {
      const Construction c = ConstructWithTrace(target, params);
      if (!Represents(c.rep, gens, target)) {
        failure = "invalid coefficients";
      } else if (c.witness.y * m + c.witness.x * n > c.pair.a) {
        failure = "ym + xn > a";
      } else if (!table.contains(target)) {
        failure = "oracle disagrees";
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInternal) throw;
      failure = e.what();
    }
    if (!failure.empty()) {
      out.construction = false;
      out.counterexamples.push_back("construction " + Cell(m, n) + " N=" +
                                    ToString(target) + ": " + failure);
    }
  }

  for (Int b = 0; b <= args.b_max; ++b) {
    if (!LemmaBoundHolds(LemmaIntervalSearch(b, params), params)) {
      out.lemma = false;
      out.counterexamples.push_back("lemma_bound " + Cell(m, n) +
                                    " b=" + ToString(b));
    }
  }
  return out;
}

}  // namespace

std::vector<Int> ParseGeneratorList(std::string_view text) {
  std::vector<Int> out;
  std::string item;
  auto flush = [&] {
    if (item.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "empty entry in generator list '" + std::string(text) + "'");
    }
    out.push_back(ParseInt(item));
    item.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == ',') {
      flush();
    } else {
      item.push_back(c);
    }
  }
  flush();
  return out;
}

OracleOptions OptionsFromEnvironment() {
  OracleOptions options;
  if (const char* value = std::getenv("FROBKIT_BUDGET")) {
    const Int budget = ParseInt(value);
    if (budget < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "FROBKIT_BUDGET must be a positive entry count");
    }
    options.max_table_entries = static_cast<std::size_t>(
        std::min<Int>(budget, static_cast<Int>(SIZE_MAX)));
  }
  return options;
}

Report RunFrobenius(const FrobeniusArgs& args, const OracleOptions& options) {
  const bool triple_mode = args.m.has_value() || args.n.has_value();
  if (triple_mode == args.generators.has_value() ||
      (triple_mode && !(args.m && args.n))) {
    throw Error(ErrorCode::kInvalidArgument,
                "pass either --m and --n, or --generators");
  }
  Report report;
  report.command = "frobenius";
  if (triple_mode) {
    const TripleParams params = MakeTripleParams(*args.m, *args.n);
    report.inputs = ParamsJson(*args.m, *args.n);
    const Int value = PythagoreanFrobenius(params).value;
    report.result = IntToJson(value);
    if (args.check) {
      const GeneratorSet set = GeneratorSetFromTriple(TripleFromParams(params));
      report.checks.push_back(
          {"frobenius_dp", FrobeniusDp(set, options).value == value});
    }
    return report;
  }
  const GeneratorSet set = MakeGeneratorSet(*args.generators);
  report.inputs = {{"generators", IntsToJson(set.gens())}};
  const Int value = FrobeniusRoundRobin(set).value;
  report.result = IntToJson(value);
  if (args.check) {
    report.checks.push_back(
        {"frobenius_dp", FrobeniusDp(set, options).value == value});
  }
  return report;
}

Report RunRepresent(const RepresentArgs& args, const OracleOptions& options) {
  const TripleParams params = MakeTripleParams(args.m, args.n);
  const std::array<Int, 3> gens = TripleFromParams(params).generators();
  const Int frobenius = PythagoreanFrobenius(params).value;

  Report report;
  report.command = "represent";
  report.inputs = ParamsJson(args.m, args.n);
  report.inputs["target"] = IntToJson(args.target);

  Json result = {{"generators", IntsToJson(gens)}};
  Representation rep;
  if (args.target > frobenius) {
    const Construction c = ConstructWithTrace(args.target, params);
    rep = c.rep;
    result["method"] = "construction";
    if (args.trace) {
      result["trace"] = {{"a", IntToJson(c.pair.a)},
                         {"b", IntToJson(c.pair.b)},
                         {"x", IntToJson(c.witness.x)},
                         {"y", IntToJson(c.witness.y)}};
    }
  } else {
    std::optional<Representation> found =
        RepresentAny(args.target, params, options);
    if (!found) {
      throw Error(ErrorCode::kNotRepresentable,
                  "target " + ToString(args.target) +
                      " is not representable (frobenius=" +
                      ToString(frobenius) + ")");
    }
    rep = *found;
    result["method"] = "oracle";
  }
  if (!Represents(rep, gens, args.target)) {
    throw Error(ErrorCode::kInternal, "representation failed verification");
  }
  result["coefficients"] = IntsToJson(rep.coeffs);
  report.result = std::move(result);
  return report;
}

Report RunVerify(const VerifyArgs& args, const OracleOptions& options) {
  if (args.rep_window < 0 || args.b_max < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "--rep-window and --b-max must be nonnegative");
  }
  std::vector<std::pair<Int, Int>> cells;
  for (Int m = 2; m <= args.max_m; ++m) {
    for (Int n = 1; n < m; ++n) {
      if (Gcd(m, n) == 1 && (m - n) % 2 != 0) cells.emplace_back(m, n);
    }
  }

  std::vector<CellOutcome> outcomes(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        outcomes[i] = VerifyCell(cells[i].first, cells[i].second, args, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::clamp<unsigned>(
      args.jobs, 1, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Report report;
  report.command = "verify";
  report.inputs = {{"max_m", args.max_m},
                   {"rep_window", args.rep_window},
                   {"b_max", args.b_max}};
  Check formula{"formula_vs_oracle", true};
  Check witness{"frobenius_witness", true};
  Check construction{"construction", true};
  Check lemma{"lemma_bound", true};
  Json counterexamples = Json::array();
  std::size_t total_counterexamples = 0;
  for (const CellOutcome& o : outcomes) {
    formula.passed &= o.formula;
    witness.passed &= o.witness;
    construction.passed &= o.construction;
    lemma.passed &= o.lemma;
    for (const std::string& c : o.counterexamples) {
      if (counterexamples.size() < kMaxCounterexamples) {
        counterexamples.push_back(c);
      }
      ++total_counterexamples;
    }
  }
  report.checks = {formula, witness, construction, lemma};

  Json params = Json::array();
  for (const auto& [m, n] : cells) params.push_back(ParamsJson(m, n));
  report.result = {{"pairs", cells.size()},
                   {"params", std::move(params)},
                   {"counterexamples", std::move(counterexamples)},
                   {"counterexample_count", total_counterexamples}};
  if (cells.empty()) report.result["note"] = "empty parameter set";
  return report;
}

Report RunApery(const std::vector<Int>& generators, std::optional<Int> modulus,
                const OracleOptions& options) {
  const GeneratorSet set = MakeGeneratorSet(generators);
  const Int chosen = modulus.value_or(set.min());
  const AperySet apery = ComputeAperySet(set, chosen, options);
  Report report;
  report.command = "apery";
  report.inputs = {{"generators", IntsToJson(set.gens())},
                   {"modulus", IntToJson(chosen)}};
  report.result = {{"elements", IntsToJson(apery.elems)},
                   {"frobenius", IntToJson(apery.frobenius())}};
  return report;
}

Report RunGaps(const std::vector<Int>& generators,
               const OracleOptions& options) {
  const GeneratorSet set = MakeGeneratorSet(generators);
  const std::vector<Int> gaps = Gaps(set, options);
  Report report;
  report.command = "gaps";
  report.inputs = {{"generators", IntsToJson(set.gens())}};
  report.result = {{"gaps", IntsToJson(gaps)},
                   {"genus", gaps.size()},
                   {"frobenius", IntToJson(gaps.empty() ? -1 : gaps.back())}};
  return report;
}

Report RunDenumerant(const std::vector<Int>& generators, Int target,
                     const OracleOptions& options) {
  const GeneratorSet set = MakeGeneratorSet(generators);
  Report report;
  report.command = "denumerant";
  report.inputs = {{"generators", IntsToJson(set.gens())},
                   {"target", IntToJson(target)}};
  report.result = IntToJson(Denumerant(target, set, options));
  return report;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Frobenius numbers of primitive Pythagorean triples"};
  app.name("frobkit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool check = false;
  bool trace = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", check, "Cross-check against the DP oracle");
  app.add_flag("--trace", trace, "Show construction intermediates");

  std::string m_text, n_text, target_text, generators_text;
  std::optional<std::string> modulus_text;

  CLI::App* frobenius = app.add_subcommand("frobenius", "Frobenius number");
  frobenius->add_option("--m", m_text, "Triple parameter m");
  frobenius->add_option("--n", n_text, "Triple parameter n");
  frobenius->add_option("--generators", generators_text,
                        "Comma-separated generators");

  CLI::App* represent =
      app.add_subcommand("represent", "Representation of a target");
  represent->add_option("--m", m_text)->required();
  represent->add_option("--n", n_text)->required();
  represent->add_option("--target", target_text)->required();

  VerifyArgs verify_args;
  verify_args.jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* verify = app.add_subcommand("verify", "Property sweep");
  verify->add_option("--max-m", verify_args.max_m, "Largest m")->capture_default_str();
  verify->add_option("--rep-window", verify_args.rep_window,
                     "Targets checked above the Frobenius number")
      ->capture_default_str();
  verify->add_option("--b-max", verify_args.b_max,
                     "Largest offset for the interval bound")
      ->capture_default_str();
  verify->add_option("--jobs", verify_args.jobs, "Worker threads");

  CLI::App* apery = app.add_subcommand("apery", "Apery set");
  apery->add_option("--generators", generators_text)->required();
  apery->add_option("--modulus", modulus_text);

  CLI::App* gaps = app.add_subcommand("gaps", "Gaps of the semigroup");
  gaps->add_option("--generators", generators_text)->required();

  CLI::App* denumerant =
      app.add_subcommand("denumerant", "Number of representations");
  denumerant->add_option("--generators", generators_text)->required();
  denumerant->add_option("--target", target_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    const OracleOptions options = OptionsFromEnvironment();
    Report report;
    if (frobenius->parsed()) {
      FrobeniusArgs args;
      if (!m_text.empty()) args.m = ParseInt(m_text);
      if (!n_text.empty()) args.n = ParseInt(n_text);
      if (!generators_text.empty()) {
        args.generators = ParseGeneratorList(generators_text);
      }
      args.check = check;
      report = RunFrobenius(args, options);
    } else if (represent->parsed()) {
      report = RunRepresent({ParseInt(m_text), ParseInt(n_text),
                             ParseInt(target_text), trace},
                            options);
    } else if (verify->parsed()) {
      report = RunVerify(verify_args, options);
    } else if (apery->parsed()) {
      std::optional<Int> modulus;
      if (modulus_text) modulus = ParseInt(*modulus_text);
      report = RunApery(ParseGeneratorList(generators_text), modulus, options);
    } else if (gaps->parsed()) {
      report = RunGaps(ParseGeneratorList(generators_text), options);
    } else {
      report = RunDenumerant(ParseGeneratorList(generators_text),
                             ParseInt(target_text), options);
    }
    out << (format == "json" ? RenderJson(report) : RenderText(report));
    return report.all_passed() ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kBudgetExceeded:
        return kExitBudget;
      case ErrorCode::kInternal:
        return kExitCheckFailed;
      default:
        return kExitInvalidInput;
    }
  }
}

}  // namespace frobkit::cli
