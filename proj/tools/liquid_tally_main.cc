// Copyright 2026 The liquid-tally Authors.
//
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

// liquid-tally: tally, audit, compare and fuzz delegation mechanisms.

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "liquid_tally.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
  void operator()(lqt_graph* g) const { lqt_graph_free(g); }
};
struct OptionsDeleter {
  void operator()(lqt_options* o) const { lqt_options_free(o); }
};
struct ReportDeleter {
  void operator()(lqt_report* r) const { lqt_report_free(r); }
};
using GraphPtr = std::unique_ptr<lqt_graph, GraphDeleter>;
using OptionsPtr = std::unique_ptr<lqt_options, OptionsDeleter>;
using ReportPtr = std::unique_ptr<lqt_report, ReportDeleter>;

// Thrown once a library call fails; main() turns it into exit code 2.
struct Failure {
  lqt_status status;
};

void Check(lqt_status status) {
  if (status != LQT_OK) throw Failure{status};
}

struct Flags {
  std::string mechanism = "bfd";
  std::string input;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> cap;
  std::optional<std::int64_t> enum_limit;
  std::optional<std::int64_t> path_guard;
  std::optional<std::int64_t> mc_samples;
  std::string properties;
  std::string mechanisms;
  std::string round1;
  std::string round2;
  std::string changed;
  std::string outcome;
  std::string manifest;
  std::string kind;
  std::int64_t agents = 8;
  std::int64_t trials = 100;
  bool proxy = false;
  std::string emit;
  std::string dir = ".";
  std::optional<std::int64_t> lp_trials;
};

void AddCommon(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--seed", f.seed,
                  "Random seed (falls back to LIQUID_TALLY_SEED, then 0)");
}

void AddMechanismKnobs(CLI::App* cmd, Flags& f) {
  cmd->add_option("--cap", f.cap, "GreedyCap power cap C")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--enum-limit", f.enum_limit,
                  "Cap on enumerated delegations or random branches")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--path-guard", f.path_guard,
                  "Cap on simple paths explored by dfd1")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mc-samples", f.mc_samples,
                  "Monte Carlo samples when GreedyCap branching overflows")
      ->check(CLI::PositiveNumber);
}

std::optional<std::uint64_t> EnvSeed() {
  const char* value = std::getenv("LIQUID_TALLY_SEED");
  if (value == nullptr || *value == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (errno != 0 || *end != '\0' || value[0] == '-') {
    std::cerr << "error: LIQUID_TALLY_SEED is not an unsigned integer: "
              << value << "\n";
    std::exit(kExitUsage);
  }
  return parsed;
}

OptionsPtr BuildOptions(const Flags& f, bool with_mechanism) {
  OptionsPtr o(lqt_options_new());
  if (!o) throw Failure{LQT_ERR_INTERNAL};
  Check(lqt_options_set_format(o.get(), f.format.c_str()));
  if (with_mechanism) Check(lqt_options_set_mechanism(o.get(), f.mechanism.c_str()));
  if (f.cap) Check(lqt_options_set_cap(o.get(), *f.cap));
  if (f.enum_limit) Check(lqt_options_set_enum_limit(o.get(), *f.enum_limit));
  if (f.path_guard) Check(lqt_options_set_path_guard(o.get(), *f.path_guard));
  if (f.mc_samples) Check(lqt_options_set_mc_samples(o.get(), *f.mc_samples));
  const std::optional<std::uint64_t> seed = f.seed ? f.seed : EnvSeed();
  if (seed) Check(lqt_options_set_seed(o.get(), *seed));
  return o;
}

GraphPtr Load(const std::string& path) {
  lqt_graph* g = nullptr;
  Check(lqt_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

int Print(lqt_report* raw, bool violations_fail) {
  ReportPtr report(raw);
  std::fputs(lqt_report_text(report.get()), stdout);
  std::fflush(stdout);
  if (violations_fail && lqt_report_violations(report.get()) > 0) {
    return kExitViolation;
  }
  return kExitOk;
}

int RunTally(const Flags& f) {
  const GraphPtr g = Load(f.input);
  const OptionsPtr o = BuildOptions(f, true);
  lqt_report* r = nullptr;
  Check(lqt_tally(g.get(), o.get(), &r));
  return Print(r, false);
}

int RunAudit(const Flags& f) {
  const OptionsPtr o = BuildOptions(f, true);
  Check(lqt_options_set_properties(o.get(), f.properties.c_str()));
  const GraphPtr g = Load(f.input);
  lqt_report* r = nullptr;
  Check(lqt_audit(g.get(), o.get(), &r));
  return Print(r, true);
}

int RunScenario(const Flags& f) {
  const OptionsPtr o = BuildOptions(f, true);
  lqt_report* r = nullptr;
  if (!f.manifest.empty()) {
    Check(lqt_scenario_manifest(f.manifest.c_str(), o.get(), &r));
  } else {
    const GraphPtr g1 = Load(f.round1);
    const GraphPtr g2 = Load(f.round2);
    Check(lqt_scenario(g1.get(), g2.get(), f.changed.c_str(), f.outcome.c_str(),
                       o.get(), &r));
  }
  return Print(r, true);
}

int RunCompare(const Flags& f) {
  const OptionsPtr o = BuildOptions(f, false);
  Check(lqt_options_set_mechanisms(o.get(), f.mechanisms.c_str()));
  if (!f.properties.empty()) {
    Check(lqt_options_set_properties(o.get(), f.properties.c_str()));
  }
  const GraphPtr g = Load(f.input);
  lqt_report* r = nullptr;
  Check(lqt_compare(g.get(), o.get(), &r));
  return Print(r, false);
}

int RunFuzz(const Flags& f) {
  const OptionsPtr o = BuildOptions(f, true);
  Check(lqt_options_set_properties(o.get(), f.properties.c_str()));
  if (!f.kind.empty()) Check(lqt_options_set_kind(o.get(), f.kind.c_str()));
  Check(lqt_options_set_agents(o.get(), f.agents));
  Check(lqt_options_set_trials(o.get(), f.trials));
  Check(lqt_options_set_proxy(o.get(), f.proxy ? 1 : 0));
  lqt_report* r = nullptr;
  Check(lqt_fuzz(o.get(), &r));
  return Print(r, true);
}

int RunFixtures(const Flags& f) {
  const OptionsPtr o = BuildOptions(f, false);
  lqt_report* r = nullptr;
  Check(lqt_fixtures_emit(f.emit.c_str(), f.dir.c_str(), o.get(), &r));
  return Print(r, false);
}

int RunTable1(const Flags& f) {
  const OptionsPtr o = BuildOptions(f, false);
  if (f.lp_trials) Check(lqt_options_set_lp_trials(o.get(), *f.lp_trials));
  lqt_report* r = nullptr;
  Check(lqt_table1(f.manifest.empty() ? nullptr : f.manifest.c_str(), o.get(), &r));
  return Print(r, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tally and audit liquid-democracy delegation mechanisms"};
  app.name("liquid-tally");
  app.require_subcommand(1);
  Flags f;
  const std::string mech_help =
      "Mechanism: lf, bfd, dfd1, dfd2, greedycap, fluid";

  CLI::App* tally = app.add_subcommand("tally", "Route votes and print totals");
  tally->add_option("--mechanism", f.mechanism, mech_help)->required();
  tally->add_option("--input", f.input, "Preference graph (.ldg)")->required();
  AddCommon(tally, f);
  AddMechanismKnobs(tally, f);

  CLI::App* audit = app.add_subcommand("audit", "Check properties of a mechanism");
  audit->add_option("--mechanism", f.mechanism, mech_help)->required();
  audit->add_option("--input", f.input, "Preference graph (.ldg)")->required();
  audit->add_option("--properties", f.properties,
                    "Comma list: rtd rttr pe<k> gre lfe sd sdod nad cp det")
      ->required();
  AddCommon(audit, f);
  AddMechanismKnobs(audit, f);

  CLI::App* scenario =
      app.add_subcommand("scenario", "Replay a two-round local predictability test");
  scenario->add_option("--mechanism", f.mechanism, mech_help)->required();
  auto* manifest = scenario->add_option("--manifest", f.manifest,
                                        "Scenario manifest file");
  auto* r1 = scenario->add_option("--round1", f.round1, "First round graph");
  auto* r2 = scenario->add_option("--round2", f.round2, "Second round graph");
  auto* changed = scenario->add_option("--changed", f.changed, "Changed agent id");
  auto* outcome = scenario->add_option("--outcome", f.outcome, "Favored outcome")
                      ->check(CLI::IsMember({"yes", "no"}));
  for (auto* opt : {r1, r2, changed, outcome}) {
    opt->excludes(manifest);
  }
  AddCommon(scenario, f);
  AddMechanismKnobs(scenario, f);

  CLI::App* compare = app.add_subcommand("compare", "Run mechanisms side by side");
  compare->add_option("--input", f.input, "Preference graph (.ldg)")->required();
  compare->add_option("--mechanisms", f.mechanisms,
                      "Comma list of mechanisms; greedycap(C=<cap>) sets a cap")
      ->required();
  compare->add_option("--properties", f.properties,
                      "Properties summarized per mechanism (default rtd,pe1,gre,nad)");
  AddCommon(compare, f);
  AddMechanismKnobs(compare, f);

  CLI::App* fuzz = app.add_subcommand("fuzz", "Check properties on random graphs");
  fuzz->add_option("--mechanism", f.mechanism, mech_help)->required();
  fuzz->add_option("--check", f.properties,
                   "Comma list of properties, lp included")
      ->required();
  fuzz->add_option("--kind", f.kind, "Preference kind: onp, mrp, mup")
      ->check(CLI::IsMember({"onp", "mrp", "mup"}));
  fuzz->add_option("--agents", f.agents, "Agents per graph")
      ->check(CLI::Range(1, 100000));
  fuzz->add_option("--trials", f.trials, "Number of graphs")
      ->check(CLI::PositiveNumber);
  fuzz->add_flag("--proxy", f.proxy, "Delegate only to direct voters");
  AddCommon(fuzz, f);
  AddMechanismKnobs(fuzz, f);

  CLI::App* fixtures = app.add_subcommand("fixtures", "Write the built-in graphs");
  fixtures->add_option("--emit", f.emit, "Fixture name, fig4 or all")->required();
  fixtures->add_option("--dir", f.dir, "Output directory");
  fixtures->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));

  CLI::App* table1 = app.add_subcommand("table1", "Rebuild the property table");
  table1->add_option("--manifest", f.manifest,
                     "Table manifest (default: built-in fixtures)");
  table1->add_option("--lp-trials", f.lp_trials,
                     "Random scenarios per mechanism for the predictability column")
      ->check(CLI::NonNegativeNumber);
  AddCommon(table1, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (scenario->parsed() && f.manifest.empty() &&
      (f.round1.empty() || f.round2.empty() || f.changed.empty() ||
       f.outcome.empty())) {
    std::cerr << "error: scenario needs --manifest or all of --round1 "
                 "--round2 --changed --outcome\n";
    return kExitUsage;
  }

  try {
    if (tally->parsed()) return RunTally(f);
    if (audit->parsed()) return RunAudit(f);
    if (scenario->parsed()) return RunScenario(f);
    if (compare->parsed()) return RunCompare(f);
    if (fuzz->parsed()) return RunFuzz(f);
    if (fixtures->parsed()) return RunFixtures(f);
    if (table1->parsed()) return RunTable1(f);
  } catch (const Failure& failure) {
    const char* message = lqt_last_error();
    std::cerr << "error: "
              << (*message ? message : lqt_status_name(failure.status)) << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
