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

#include "liquid_tally.h"

#include <charconv>
#include <cstring>
#include <exception>
#include <filesystem>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liquid/audit.h"
#include "liquid/error.h"
#include "liquid/fixtures.h"
#include "liquid/fuzz.h"
#include "liquid/gen.h"
#include "liquid/ldg_format.h"
#include "liquid/mechanisms.h"
#include "liquid/report.h"
#include "liquid/table1.h"

struct lqt_graph {
  liquid::PreferenceGraph graph;
};

struct lqt_options {
  liquid::MechanismConfig mechanism;
  std::optional<std::int64_t> explicit_cap;
  bool seed_set = false;
  liquid::OutputFormat format = liquid::OutputFormat::kText;
  std::vector<liquid::PropertyRequest> properties;
  // Compare columns; a cap in the token overrides the shared one.
  std::vector<std::pair<liquid::MechanismId, std::optional<std::int64_t>>>
      mechanisms;
  std::vector<std::string> mechanism_labels;
  std::int64_t trials = 100;
  int agents = 8;
  std::optional<liquid::PreferenceKind> kind;
  bool proxy = false;
  std::int64_t lp_trials = 300;
};

struct lqt_report {
  std::string text;
  std::int64_t violations = 0;
  std::optional<liquid::TallyResult> totals;
};

namespace {

using liquid::Error;
using liquid::ErrorCode;

thread_local std::string last_error;
thread_local int last_error_line = 0;

lqt_status Fail(lqt_status status, const std::string& message, int line = 0) {
  last_error = message;
  last_error_line = line;
  return status;
}

lqt_status StatusOf(ErrorCode code) {
  return static_cast<lqt_status>(static_cast<int>(code) + 1);
}

template <typename F>
lqt_status Guard(F&& body) {
  last_error.clear();
  last_error_line = 0;
  try {
    body();
    return LQT_OK;
  } catch (const Error& e) {
    return Fail(StatusOf(e.code()), e.what(), e.line());
  } catch (const std::bad_alloc&) {
    return Fail(LQT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(LQT_ERR_INTERNAL, e.what());
  }
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

std::vector<std::string_view> SplitList(std::string_view list) {
  std::vector<std::string_view> out;
  while (!list.empty()) {
    const size_t comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

// "greedycap(C=3)" or a bare token.
std::pair<liquid::MechanismId, std::optional<std::int64_t>> ParseMechanism(
    std::string_view token) {
  std::optional<std::int64_t> cap;
  const size_t open = token.find('(');
  std::string_view name = token.substr(0, open);
  if (open != std::string_view::npos) {
    std::string_view arg = token.substr(open + 1);
    Require(!arg.empty() && arg.back() == ')',
            "malformed mechanism token '" + std::string(token) + "'");
    arg.remove_suffix(1);
    Require(arg.substr(0, 2) == "C=" || arg.substr(0, 2) == "c=",
            "expected C=<cap> in '" + std::string(token) + "'");
    arg.remove_prefix(2);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(arg.data(), arg.data() + arg.size(), value);
    Require(ec == std::errc() && ptr == arg.data() + arg.size() && value >= 1,
            "bad cap in '" + std::string(token) + "'");
    cap = value;
  }
  const auto id = liquid::ParseMechanismId(name);
  Require(id.has_value(), "unknown mechanism '" + std::string(token) + "'");
  Require(!cap || *id == liquid::MechanismId::kGreedyCap,
          "only greedycap takes a cap: '" + std::string(token) + "'");
  return {*id, cap};
}

std::vector<liquid::PropertyRequest> ParseProperties(std::string_view list) {
  std::vector<liquid::PropertyRequest> out;
  for (std::string_view token : SplitList(list)) {
    const auto req = liquid::ParsePropertyToken(token);
    Require(req.has_value(), "unknown property '" + std::string(token) + "'");
    out.push_back(*req);
  }
  return out;
}

lqt_status Emit(lqt_report** out, lqt_report&& report) {
  *out = new lqt_report(std::move(report));
  return LQT_OK;
}

#define LQT_CHECK_ARG(cond)                                      \
  do {                                                           \
    if (!(cond)) {                                               \
      return Fail(LQT_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
    }                                                            \
  } while (0)

std::int64_t CountViolations(const std::vector<liquid::PropertyVerdict>& vs) {
  std::int64_t n = 0;
  for (const auto& v : vs) n += v.verdict == liquid::Verdict::kViolated;
  return n;
}

lqt_status RunScenarioReport(const liquid::Scenario& s, const lqt_options* o,
                             lqt_report** out) {
  return Guard([&] {
    const liquid::ScenarioReport r = liquid::RunScenario(o->mechanism, s);
    lqt_report report;
    report.text = liquid::RenderScenario(s, o->mechanism, r, o->format);
    report.violations = r.verdict.verdict == liquid::Verdict::kViolated;
    Emit(out, std::move(report));
  });
}

liquid::Scenario LoadScenario(const std::filesystem::path& path) {
  const liquid::ScenarioManifest m = liquid::ParseScenarioManifest(
      liquid::ReadTextFile(path), path.parent_path());
  return liquid::Scenario{liquid::LoadLdgFile(m.round1),
                          liquid::LoadLdgFile(m.round2), m.changed, m.outcome};
}

}  // namespace

extern "C" {

const char* lqt_status_name(lqt_status status) {
  switch (status) {
    case LQT_OK: return "OK";
    case LQT_ERR_INTERNAL: return "INTERNAL";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ErrorCode::kIo)) return "UNKNOWN";
  return liquid::ErrorCodeName(static_cast<ErrorCode>(code)).data();
}

const char* lqt_last_error(void) { return last_error.c_str(); }
int lqt_last_error_line(void) { return last_error_line; }

lqt_status lqt_graph_parse(const char* text, lqt_graph** out) {
  LQT_CHECK_ARG(text && out);
  return Guard([&] { *out = new lqt_graph{liquid::ParseLdg(text)}; });
}

lqt_status lqt_graph_load(const char* path, lqt_graph** out) {
  LQT_CHECK_ARG(path && out);
  return Guard([&] { *out = new lqt_graph{liquid::LoadLdgFile(path)}; });
}

lqt_status lqt_graph_fixture(const char* name, lqt_graph** out) {
  LQT_CHECK_ARG(name && out);
  return Guard([&] { *out = new lqt_graph{liquid::GetFixture(name).graph}; });
}

lqt_status lqt_graph_serialize(const lqt_graph* graph, char** out) {
  LQT_CHECK_ARG(graph && out);
  return Guard([&] {
    const std::string text = liquid::SerializeLdg(graph->graph);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

size_t lqt_graph_agent_count(const lqt_graph* graph) {
  return graph ? static_cast<size_t>(graph->graph.num_agents()) : 0;
}

void lqt_graph_free(lqt_graph* graph) { delete graph; }
void lqt_string_free(char* s) { delete[] s; }

lqt_options* lqt_options_new(void) {
  return new (std::nothrow) lqt_options();
}

void lqt_options_free(lqt_options* options) { delete options; }

lqt_status lqt_options_set_mechanism(lqt_options* o, const char* token) {
  LQT_CHECK_ARG(o && token);
  return Guard([&] {
    const auto [id, cap] = ParseMechanism(token);
    o->mechanism.id = id;
    if (cap) o->mechanism.cap = *cap;
  });
}

lqt_status lqt_options_set_mechanisms(lqt_options* o, const char* list) {
  LQT_CHECK_ARG(o && list);
  return Guard([&] {
    std::vector<std::pair<liquid::MechanismId, std::optional<std::int64_t>>> ids;
    std::vector<std::string> labels;
    for (std::string_view token : SplitList(list)) {
      ids.push_back(ParseMechanism(token));
      labels.emplace_back(token);
    }
    Require(!ids.empty(), "empty mechanism list");
    o->mechanisms = std::move(ids);
    o->mechanism_labels = std::move(labels);
  });
}

lqt_status lqt_options_set_cap(lqt_options* o, int64_t cap) {
  LQT_CHECK_ARG(o && cap >= 1);
  o->mechanism.cap = cap;
  o->explicit_cap = cap;
  return LQT_OK;
}

lqt_status lqt_options_set_seed(lqt_options* o, uint64_t seed) {
  LQT_CHECK_ARG(o);
  o->mechanism.seed = seed;
  o->seed_set = true;
  return LQT_OK;
}

lqt_status lqt_options_set_enum_limit(lqt_options* o, int64_t limit) {
  LQT_CHECK_ARG(o && limit >= 1);
  o->mechanism.enum_limit = limit;
  return LQT_OK;
}

lqt_status lqt_options_set_path_guard(lqt_options* o, int64_t guard) {
  LQT_CHECK_ARG(o && guard >= 1);
  o->mechanism.path_guard = guard;
  return LQT_OK;
}

lqt_status lqt_options_set_mc_samples(lqt_options* o, int64_t samples) {
  LQT_CHECK_ARG(o && samples >= 1);
  o->mechanism.mc_samples = samples;
  return LQT_OK;
}

lqt_status lqt_options_set_format(lqt_options* o, const char* format) {
  LQT_CHECK_ARG(o && format);
  const auto f = liquid::ParseOutputFormat(format);
  if (!f) {
    return Fail(LQT_ERR_INVALID_ARGUMENT,
                "unknown format '" + std::string(format) + "'");
  }
  o->format = *f;
  return LQT_OK;
}

lqt_status lqt_options_set_properties(lqt_options* o, const char* list) {
  LQT_CHECK_ARG(o && list);
  return Guard([&] { o->properties = ParseProperties(list); });
}

lqt_status lqt_options_set_trials(lqt_options* o, int64_t trials) {
  LQT_CHECK_ARG(o && trials >= 1);
  o->trials = trials;
  return LQT_OK;
}

lqt_status lqt_options_set_agents(lqt_options* o, int64_t agents) {
  LQT_CHECK_ARG(o && agents >= 1 && agents <= 100000);
  o->agents = static_cast<int>(agents);
  return LQT_OK;
}

lqt_status lqt_options_set_kind(lqt_options* o, const char* kind) {
  LQT_CHECK_ARG(o && kind);
  const auto k = liquid::ParsePreferenceKind(kind);
  if (!k) {
    return Fail(LQT_ERR_INVALID_ARGUMENT,
                "unknown preference kind '" + std::string(kind) + "'");
  }
  o->kind = *k;
  return LQT_OK;
}

lqt_status lqt_options_set_proxy(lqt_options* o, int proxy) {
  LQT_CHECK_ARG(o);
  o->proxy = proxy != 0;
  return LQT_OK;
}

lqt_status lqt_options_set_lp_trials(lqt_options* o, int64_t trials) {
  LQT_CHECK_ARG(o && trials >= 0);
  o->lp_trials = trials;
  return LQT_OK;
}

lqt_status lqt_tally(const lqt_graph* graph, const lqt_options* o,
                     lqt_report** out) {
  LQT_CHECK_ARG(graph && o && out);
  return Guard([&] {
    const liquid::MechanismOutput r = liquid::RunMechanism(o->mechanism, graph->graph);
    lqt_report report;
    report.text = liquid::RenderTally(graph->graph, o->mechanism, r, o->format);
    report.totals = liquid::TallyFromRouting(graph->graph, r.routing);
    Emit(out, std::move(report));
  });
}

lqt_status lqt_audit(const lqt_graph* graph, const lqt_options* o,
                     lqt_report** out) {
  LQT_CHECK_ARG(graph && o && out);
  if (o->properties.empty()) {
    return Fail(LQT_ERR_INVALID_ARGUMENT, "no properties requested");
  }
  return Guard([&] {
    const liquid::AuditReport r =
        liquid::RunAudit(o->mechanism, graph->graph, o->properties);
    lqt_report report;
    report.text = liquid::RenderAudit(graph->graph, o->mechanism, r, o->format);
    report.violations = CountViolations(r.verdicts);
    report.totals = liquid::TallyFromRouting(graph->graph, r.output.routing);
    Emit(out, std::move(report));
  });
}

lqt_status lqt_scenario(const lqt_graph* round1, const lqt_graph* round2,
                        const char* changed, const char* outcome,
                        const lqt_options* o, lqt_report** out) {
  LQT_CHECK_ARG(round1 && round2 && changed && outcome && o && out);
  const auto oc = liquid::ParseOutcome(outcome);
  if (!oc) {
    return Fail(LQT_ERR_INVALID_ARGUMENT,
                "outcome must be yes or no, got '" + std::string(outcome) + "'");
  }
  return RunScenarioReport(
      liquid::Scenario{round1->graph, round2->graph, changed, *oc}, o, out);
}

lqt_status lqt_scenario_manifest(const char* path, const lqt_options* o,
                                 lqt_report** out) {
  LQT_CHECK_ARG(path && o && out);
  std::optional<liquid::Scenario> s;
  const lqt_status st = Guard([&] { s = LoadScenario(path); });
  if (st != LQT_OK) return st;
  return RunScenarioReport(*s, o, out);
}

lqt_status lqt_compare(const lqt_graph* graph, const lqt_options* o,
                       lqt_report** out) {
  LQT_CHECK_ARG(graph && o && out);
  if (o->mechanisms.empty()) {
    return Fail(LQT_ERR_INVALID_ARGUMENT, "no mechanisms to compare");
  }
  return Guard([&] {
    std::vector<liquid::PropertyRequest> properties = o->properties;
    if (properties.empty()) properties = ParseProperties("rtd,pe1,gre,nad");
    std::vector<liquid::CompareEntry> entries;
    std::int64_t violations = 0;
    for (size_t i = 0; i < o->mechanisms.size(); ++i) {
      const auto& [id, cap] = o->mechanisms[i];
      liquid::CompareEntry e;
      e.config = o->mechanism;
      e.config.id = id;
      if (cap) e.config.cap = *cap;
      e.label = o->mechanism_labels[i];
      if (!liquid::AcceptsGraph(id, graph->graph)) {
        e.skipped_reason =
            "needs " +
            std::string(liquid::PreferenceKindName(liquid::GetMechanismInfo(id).kind)) +
            " input, got " +
            std::string(liquid::PreferenceKindName(liquid::ClassifyKind(graph->graph)));
      } else {
        e.report = liquid::RunAudit(e.config, graph->graph, properties);
        violations += CountViolations(e.report->verdicts);
      }
      entries.push_back(std::move(e));
    }
    lqt_report report;
    report.text = liquid::RenderCompare(graph->graph, entries, o->format);
    report.violations = violations;
    Emit(out, std::move(report));
  });
}

lqt_status lqt_fuzz(const lqt_options* o, lqt_report** out) {
  LQT_CHECK_ARG(o && out);
  if (o->properties.empty()) {
    return Fail(LQT_ERR_INVALID_ARGUMENT, "no checks requested");
  }
  return Guard([&] {
    liquid::FuzzConfig cfg;
    cfg.mechanism = o->mechanism;
    cfg.gen.kind = o->kind.value_or(liquid::GetMechanismInfo(o->mechanism.id).kind);
    cfg.gen.n_agents = o->agents;
    cfg.gen.seed = o->mechanism.seed;
    cfg.gen.proxy_only = o->proxy;
    cfg.trials = o->trials;
    cfg.checks = o->properties;
    const liquid::FuzzReport r = liquid::RunFuzz(cfg);
    lqt_report report;
    report.text = liquid::RenderFuzz(cfg, r, o->format);
    report.violations = r.total_violations();
    Emit(out, std::move(report));
  });
}

lqt_status lqt_table1(const char* manifest, const lqt_options* o,
                      lqt_report** out) {
  LQT_CHECK_ARG(o && out);
  return Guard([&] {
    liquid::Table1Inputs inputs;
    if (manifest == nullptr) {
      inputs = liquid::DefaultTable1Inputs();
    } else {
      const std::filesystem::path path(manifest);
      const liquid::Table1Manifest m = liquid::ParseTable1Manifest(
          liquid::ReadTextFile(path), path.parent_path());
      for (const auto& [name, file] : m.fixtures) {
        inputs.fixtures.emplace_back(name, liquid::LoadLdgFile(file));
      }
      inputs.scenario = LoadScenario(m.scenario);
      liquid::AddDerivedProbes(inputs);
    }
    inputs.lp_trials = o->lp_trials;
    if (o->seed_set) inputs.seed = o->mechanism.seed;
    lqt_report report;
    report.text = liquid::RenderTable1(liquid::BuildTable1(inputs), o->format);
    Emit(out, std::move(report));
  });
}

lqt_status lqt_fixtures_emit(const char* name, const char* dir,
                             const lqt_options* o, lqt_report** out) {
  LQT_CHECK_ARG(name && dir && o && out);
  return Guard([&] {
    const auto files = liquid::EmitFixtures(name, dir);
    lqt_report report;
    report.text = liquid::RenderFixtures(files, o->format);
    Emit(out, std::move(report));
  });
}

const char* lqt_report_text(const lqt_report* report) {
  return report ? report->text.c_str() : "";
}

int64_t lqt_report_violations(const lqt_report* report) {
  return report ? report->violations : 0;
}

lqt_status lqt_report_totals(const lqt_report* report, int64_t* yes,
                             int64_t* no, int64_t* unresolved) {
  LQT_CHECK_ARG(report && report->totals);
  if (yes) *yes = report->totals->total(liquid::Outcome::kYes);
  if (no) *no = report->totals->total(liquid::Outcome::kNo);
  if (unresolved) *unresolved = report->totals->unresolved_count;
  return LQT_OK;
}

void lqt_report_free(lqt_report* report) { delete report; }

}  // extern "C"
