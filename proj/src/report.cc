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

#include "liquid/report.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "liquid/ldg_format.h"

namespace liquid {
namespace {

using Json = nlohmann::json;

// Support entries listed in full; larger distributions are summarized.
constexpr size_t kMaxListedSupport = 16;

std::string Document(const Json& j) { return j.dump(2) + "\n"; }

std::string StateName(RouteState s) {
  switch (s) {
    case RouteState::kUnresolved: return "unresolved";
    case RouteState::kResolved: return "resolved";
    case RouteState::kPending: return "pending";
  }
  return "?";
}

std::string PathText(const PreferenceGraph& g, const VotePath& p) {
  std::string out = g.name(p.origin);
  for (AgentIndex h : p.hops) out += " -> " + g.name(h);
  out += " => ";
  out += p.terminal ? std::string(OutcomeName(*p.terminal)) : "pending";
  return out;
}

Json PathJson(const PreferenceGraph& g, const VotePath& p) {
  Json path = Json::array({g.name(p.origin)});
  for (AgentIndex h : p.hops) path.push_back(g.name(h));
  return {{"path", path},
          {"terminal", p.terminal ? Json(std::string(OutcomeName(*p.terminal)))
                                  : Json(nullptr)}};
}

Json RouteJson(const PreferenceGraph& g, const VoteRouting& r, AgentIndex a) {
  Json j = {{"state", StateName(r.state(a))}};
  if (r.state(a) != RouteState::kUnresolved) {
    Json p = PathJson(g, r.Path(a));
    j["path"] = p["path"];
    j["terminal"] = p["terminal"];
  }
  return j;
}

Json RoutingJson(const PreferenceGraph& g, const VoteRouting& r) {
  Json j = Json::object();
  for (AgentIndex a = 0; a < r.num_agents(); ++a) {
    j[g.name(a)] = RouteJson(g, r, a);
  }
  return j;
}

Json TotalsJson(const TallyResult& t) {
  return {{"yes", t.total(Outcome::kYes)},
          {"no", t.total(Outcome::kNo)},
          {"unresolved", t.unresolved_count},
          {"winner", std::string(WinnerName(WinnerOf(t)))}};
}

std::string TotalsText(const TallyResult& t) {
  return "yes=" + std::to_string(t.total(Outcome::kYes)) +
         " no=" + std::to_string(t.total(Outcome::kNo)) +
         " unresolved=" + std::to_string(t.unresolved_count) +
         " winner=" + std::string(WinnerName(WinnerOf(t)));
}

Json ConfigJson(const MechanismConfig& cfg) {
  Json j = {{"mechanism", std::string(GetMechanismInfo(cfg.id).token)}};
  switch (cfg.id) {
    case MechanismId::kGreedyCap:
      j["cap"] = cfg.cap;
      j["seed"] = cfg.seed;
      j["enum_limit"] = cfg.enum_limit;
      j["mc_samples"] = cfg.mc_samples;
      break;
    case MechanismId::kFluid:
      j["enum_limit"] = cfg.enum_limit;
      break;
    case MechanismId::kDfd1:
    case MechanismId::kDfd2:
      j["path_guard"] = cfg.path_guard;
      break;
    default:
      break;
  }
  return j;
}

std::string ConfigText(const MechanismConfig& cfg) {
  const MechanismInfo& info = GetMechanismInfo(cfg.id);
  std::string out = std::string(info.token) + " (" + std::string(info.display) + ")";
  if (cfg.id == MechanismId::kGreedyCap) {
    out += " cap=" + std::to_string(cfg.cap) + " seed=" + std::to_string(cfg.seed);
  }
  return out;
}

std::string VerdictLabel(const PropertyVerdict& v) {
  std::string label(PropertyName(v.property));
  if (v.property == Property::kPsiPe || v.property == Property::kCp) {
    label += "(" + std::to_string(v.parameter) + ")";
  }
  return label;
}

// Routing i of a witness lives on later[i - 1] when given (scenario rounds).
const PreferenceGraph& RoutingGraph(const PreferenceGraph& g,
                                    const PreferenceGraph* later, size_t i) {
  return i > 0 && later != nullptr ? *later : g;
}

Json VerdictJson(const PreferenceGraph& g, const PropertyVerdict& v,
                 const PreferenceGraph* later = nullptr) {
  Json j = {{"property", std::string(PropertyName(v.property))},
            {"verdict", std::string(VerdictName(v.verdict))},
            {"detail", v.detail}};
  if (v.property == Property::kPsiPe || v.property == Property::kCp) {
    j["parameter"] = v.parameter;
  }
  if (v.verdict == Verdict::kInconclusive) j["bound"] = v.bound;
  if (v.witness) {
    Json w = {{"detail", v.witness->detail}};
    Json agents = Json::array();
    for (AgentIndex a : v.witness->agents) agents.push_back(g.name(a));
    w["agents"] = agents;
    Json paths = Json::array();
    for (const auto& p : v.witness->paths) paths.push_back(PathJson(g, p));
    w["paths"] = paths;
    Json routings = Json::array();
    for (size_t i = 0; i < v.witness->routings.size(); ++i) {
      const VoteRouting& r = v.witness->routings[i];
      const PreferenceGraph& rg = RoutingGraph(g, later, i);
      routings.push_back({{"routes", RoutingJson(rg, r)},
                          {"totals", TotalsJson(TallyFromRouting(rg, r))}});
    }
    w["routings"] = routings;
    j["witness"] = w;
  }
  return j;
}

void VerdictText(std::ostream& os, const PreferenceGraph& g,
                 const PropertyVerdict& v,
                 const PreferenceGraph* later = nullptr) {
  os << VerdictLabel(v) << ": " << VerdictName(v.verdict);
  if (v.verdict == Verdict::kInconclusive) os << " (bound " << v.bound << ")";
  if (!v.detail.empty()) os << " - " << v.detail;
  os << "\n";
  if (!v.witness) return;
  const Witness& w = *v.witness;
  if (!w.agents.empty()) {
    os << "  witness agents:";
    for (AgentIndex a : w.agents) os << " " << g.name(a);
    os << "\n";
  }
  for (const auto& p : w.paths) os << "  path: " << PathText(g, p) << "\n";
  for (size_t i = 0; i < w.routings.size(); ++i) {
    const VoteRouting& r = w.routings[i];
    const PreferenceGraph& rg = RoutingGraph(g, later, i);
    os << "  routing " << i + 1 << ": "
       << TotalsText(TallyFromRouting(rg, r)) << "\n";
    for (AgentIndex a = 0; a < r.num_agents(); ++a) {
      if (r.hop_count(a) > 0) os << "    " << FormatRoute(rg, r, a) << "\n";
    }
  }
}

Json DistributionJson(const PreferenceGraph& g, const RoutingDistribution& d) {
  Json support = Json::array();
  for (size_t i = 0; i < d.support.size() && i < kMaxListedSupport; ++i) {
    const auto& [r, p] = d.support[i];
    support.push_back({{"probability", RationalToString(p)},
                       {"totals", TotalsJson(TallyFromRouting(g, r))}});
  }
  return {{"exact", d.exact},
          {"samples", d.samples},
          {"support_size", d.support.size()},
          {"support", support}};
}

Json PowerJson(const PreferenceGraph& g, const TallyResult& t) {
  Json voters = Json::object();
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    if (t.power[a] + t.held[a] > 0) voters[g.name(a)] = t.power[a] + t.held[a];
  }
  return {{"max", t.max_power()}, {"agents", voters}};
}

std::string PowerText(const PreferenceGraph& g, const TallyResult& t) {
  std::string out = "max " + std::to_string(t.max_power()) + ";";
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    const std::int64_t votes = t.power[a] + t.held[a];
    if (votes > 0) out += " " + g.name(a) + "=" + std::to_string(votes);
  }
  return out;
}

bool FluidArbitrary(const PreferenceGraph& g, const FluidResult& f) {
  for (size_t i = 1; i < f.optima.size(); ++i) {
    if (WinnerOf(TallyFromRouting(g, f.optima[i])) !=
        WinnerOf(TallyFromRouting(g, f.optima[0]))) {
      return true;
    }
  }
  return false;
}

Json ExpectedJson(const std::array<Rational, 2>& totals) {
  return {{"yes", RationalToString(totals[0])},
          {"no", RationalToString(totals[1])}};
}

// "arbitrary" when optimal delegations disagree, else the winner (of the
// expected totals for randomized mechanisms).
std::string DecidedOutcome(const PreferenceGraph& g, const MechanismOutput& out) {
  if (out.fluid && FluidArbitrary(g, *out.fluid)) return "arbitrary";
  if (out.distribution.support.size() > 1) {
    const auto e = ExpectedTotals(g, out.distribution);
    if (e[0] == e[1]) return "tie";
    return e[0] > e[1] ? "yes" : "no";
  }
  return std::string(WinnerName(WinnerOf(TallyFromRouting(g, out.routing))));
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view token) {
  if (token == "text") return OutputFormat::kText;
  if (token == "machine") return OutputFormat::kMachine;
  return std::nullopt;
}

std::string FormatRoute(const PreferenceGraph& g, const VoteRouting& r,
                        AgentIndex a) {
  if (r.state(a) == RouteState::kUnresolved) return g.name(a) + ": unresolved";
  return g.name(a) + ": " + PathText(g, r.Path(a));
}

std::string RenderTally(const PreferenceGraph& g, const MechanismConfig& cfg,
                        const MechanismOutput& out, OutputFormat format) {
  const TallyResult t = TallyFromRouting(g, out.routing);
  const bool randomized = out.id == MechanismId::kGreedyCap;
  if (format == OutputFormat::kMachine) {
    Json j = {{"command", "tally"},
              {"config", ConfigJson(cfg)},
              {"agents", g.num_agents()},
              {"edges", g.num_edges()},
              {"routes", RoutingJson(g, out.routing)},
              {"totals", TotalsJson(t)},
              {"power", PowerJson(g, t)}};
    if (randomized) {
      j["distribution"] = DistributionJson(g, out.distribution);
      j["expected_totals"] = ExpectedJson(ExpectedTotals(g, out.distribution));
      j["branches"] = out.branches;
    }
    if (out.fluid) {
      j["fluid"] = {{"optimum", out.fluid->optimum},
                    {"optima", out.fluid->optima.size()},
                    {"truncated", out.fluid->truncated},
                    {"arbitrary", FluidArbitrary(g, *out.fluid)}};
    }
    return Document(j);
  }
  std::ostringstream os;
  os << "mechanism: " << ConfigText(cfg) << "\n";
  os << "agents: " << g.num_agents() << "  edges: " << g.num_edges() << "\n";
  os << (randomized ? "sampled routes:\n" : "routes:\n");
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    os << "  " << FormatRoute(g, out.routing, a) << "\n";
  }
  os << "totals: " << TotalsText(t) << "\n";
  os << "power: " << PowerText(g, t) << "\n";
  if (randomized) {
    const auto& d = out.distribution;
    const auto e = ExpectedTotals(g, d);
    os << "distribution: " << d.support.size() << " routings ("
       << (d.exact ? "exact" : "Monte Carlo, " + std::to_string(d.samples) +
                                   " samples")
       << ")\n";
    os << "expected totals: yes=" << RationalToString(e[0])
       << " no=" << RationalToString(e[1]) << "\n";
  }
  if (out.fluid) {
    os << "optimum: " << out.fluid->optimum << "\n";
    os << "optima: " << out.fluid->optima.size()
       << (out.fluid->truncated ? " (truncated at enum limit)" : "") << "\n";
    if (FluidArbitrary(g, *out.fluid)) {
      os << "warning: optimal delegations disagree on the outcome; the "
            "canonical choice is arbitrary\n";
    }
  }
  return os.str();
}

std::string RenderAudit(const PreferenceGraph& g, const MechanismConfig& cfg,
                        const AuditReport& report, OutputFormat format) {
  const TallyResult t = TallyFromRouting(g, report.output.routing);
  if (format == OutputFormat::kMachine) {
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(VerdictJson(g, v));
    Json j = {{"command", "audit"},
              {"config", ConfigJson(cfg)},
              {"totals", TotalsJson(t)},
              {"expected_totals", ExpectedJson(report.expected_totals)},
              {"max_power", report.power.max_power},
              {"verdicts", verdicts},
              {"violations", std::count_if(report.verdicts.begin(),
                                           report.verdicts.end(),
                                           [](const PropertyVerdict& v) {
                                             return v.verdict == Verdict::kViolated;
                                           })}};
    if (report.lfe) {
      Json feedback = Json::object();
      for (const auto& f : report.lfe->feedback) {
        Json neighbors = Json::object();
        for (const auto& n : f.neighbors) {
          neighbors[g.name(n.neighbor)] = {
              {"fraction", RationalToString(n.fraction)},
              {"yes", RationalToString(n.yes_share)},
              {"no", RationalToString(n.no_share)}};
        }
        feedback[g.name(f.agent)] = {{"held", RationalToString(f.held)},
                                     {"cast", RationalToString(f.cast)},
                                     {"neighbors", neighbors}};
      }
      j["feedback"] = feedback;
    }
    return Document(j);
  }
  std::ostringstream os;
  os << "mechanism: " << ConfigText(cfg) << "\n";
  os << "totals: " << TotalsText(t) << "\n";
  os << "max power: " << report.power.max_power << "\n";
  for (const auto& v : report.verdicts) VerdictText(os, g, v);
  if (report.lfe) {
    os << "feedback:\n";
    for (const auto& f : report.lfe->feedback) {
      os << "  " << g.name(f.agent) << ": holds " << RationalToString(f.held)
         << ", casts " << RationalToString(f.cast) << "\n";
      for (const auto& n : f.neighbors) {
        os << "    -> " << g.name(n.neighbor) << ": "
           << RationalToString(n.fraction) << " of held votes (yes "
           << RationalToString(n.yes_share) << ", no "
           << RationalToString(n.no_share) << ")\n";
      }
    }
  }
  return os.str();
}

std::string RenderScenario(const Scenario& s, const MechanismConfig& cfg,
                           const ScenarioReport& report, OutputFormat format) {
  const auto ratings = [](const std::vector<PreferenceRating>& set) {
    Json j = Json::object();
    for (const auto& m : set) {
      j[m.member] = m.rating ? Json(RationalToString(*m.rating)) : Json(nullptr);
    }
    return j;
  };
  if (format == OutputFormat::kMachine) {
    Json j = {{"command", "scenario"},
              {"config", ConfigJson(cfg)},
              {"changed", s.changed},
              {"outcome", std::string(OutcomeName(s.outcome))},
              {"share_round1", RationalToString(report.share1)},
              {"share_round2", RationalToString(report.share2)},
              {"exact", report.exact},
              {"p1", ratings(report.p1)},
              {"p2", ratings(report.p2)},
              {"verdict", VerdictJson(s.round1, report.verdict, &s.round2)}};
    if (!report.exact) j["half_width"] = report.half_width;
    return Document(j);
  }
  std::ostringstream os;
  os << "mechanism: " << ConfigText(cfg) << "\n";
  os << "changed: " << s.changed << "  outcome: " << OutcomeName(s.outcome)
     << "\n";
  const auto list = [&](std::string_view label,
                        const std::vector<PreferenceRating>& set) {
    os << label << ":";
    if (set.empty()) os << " (none)";
    for (const auto& m : set) {
      os << " " << m.member << "="
         << (m.rating ? RationalToString(*m.rating) : std::string("undefined"));
    }
    os << "\n";
  };
  list("round 1 preferences", report.p1);
  list("round 2 preferences", report.p2);
  os << "round 1 share: " << RationalToString(report.share1) << "\n";
  os << "round 2 share: " << RationalToString(report.share2) << "\n";
  if (!report.exact) os << "interval half-width: " << report.half_width << "\n";
  VerdictText(os, s.round1, report.verdict, &s.round2);
  return os.str();
}

std::string RenderCompare(const PreferenceGraph& g,
                          const std::vector<CompareEntry>& entries,
                          OutputFormat format) {
  // Agents whose routes differ between the compatible mechanisms.
  std::vector<std::string> diverging;
  std::vector<const CompareEntry*> run;
  for (const auto& e : entries) {
    if (e.report) run.push_back(&e);
  }
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    for (size_t i = 1; i < run.size(); ++i) {
      if (run[i]->report->output.routing.Path(a) !=
              run[0]->report->output.routing.Path(a) ||
          run[i]->report->output.routing.state(a) !=
              run[0]->report->output.routing.state(a)) {
        diverging.push_back(g.name(a));
        break;
      }
    }
  }
  std::vector<std::string> outcomes;
  for (const auto* e : run) outcomes.push_back(DecidedOutcome(g, e->report->output));
  bool outcome_divergence = false;
  for (size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i] != outcomes[0]) outcome_divergence = true;
  }

  if (format == OutputFormat::kMachine) {
    Json rows = Json::array();
    for (const auto& e : entries) {
      Json row = {{"label", e.label}, {"config", ConfigJson(e.config)}};
      if (!e.report) {
        row["status"] = "N/A";
        row["reason"] = e.skipped_reason;
      } else {
        const TallyResult t = TallyFromRouting(g, e.report->output.routing);
        Json verdicts = Json::object();
        for (const auto& v : e.report->verdicts) {
          verdicts[VerdictLabel(v)] = std::string(VerdictName(v.verdict));
        }
        row["status"] = "ok";
        row["totals"] = TotalsJson(t);
        row["expected_totals"] = ExpectedJson(e.report->expected_totals);
        row["max_power"] = e.report->power.max_power;
        row["verdicts"] = verdicts;
        row["routes"] = RoutingJson(g, e.report->output.routing);
        row["outcome"] = DecidedOutcome(g, e.report->output);
      }
      rows.push_back(row);
    }
    return Document({{"command", "compare"},
                     {"mechanisms", rows},
                     {"diverging_agents", diverging},
                     {"outcome_divergence", outcome_divergence}});
  }
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.label << ": ";
    if (!e.report) {
      os << "N/A (" << e.skipped_reason << ")\n";
      continue;
    }
    const TallyResult t = TallyFromRouting(g, e.report->output.routing);
    os << TotalsText(t) << " max_power=" << e.report->power.max_power;
    if (e.config.id == MechanismId::kGreedyCap) {
      os << " expected yes=" << RationalToString(e.report->expected_totals[0])
         << " no=" << RationalToString(e.report->expected_totals[1]);
    }
    os << "\n  verdicts:";
    for (const auto& v : e.report->verdicts) {
      os << " " << VerdictLabel(v) << "=" << VerdictName(v.verdict);
    }
    os << "\n";
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      if (e.report->output.routing.hop_count(a) > 0) {
        os << "  " << FormatRoute(g, e.report->output.routing, a) << "\n";
      }
    }
  }
  os << "diverging paths:";
  if (diverging.empty()) os << " none";
  for (const auto& name : diverging) os << " " << name;
  os << "\n";
  os << "outcome:";
  for (size_t i = 0; i < run.size(); ++i) {
    os << " " << run[i]->label << "=" << outcomes[i];
  }
  os << (outcome_divergence ? "  <- outcome divergence" : "") << "\n";
  return os.str();
}

std::string RenderFuzz(const FuzzConfig& cfg, const FuzzReport& report,
                       OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json counts = Json::object();
    for (const auto& [token, c] : report.counts) {
      counts[token] = {{"checked", c.checked},
                       {"violated", c.violated},
                       {"inconclusive", c.inconclusive},
                       {"skipped", c.skipped}};
    }
    Json findings = Json::array();
    for (const auto& f : report.findings) {
      Json j = {{"trial", f.trial}, {"seed", f.seed}, {"check", f.check}};
      j["verdict"] = f.graph ? VerdictJson(*f.graph, f.verdict)
                             : VerdictJson(f.scenario->round1, f.verdict,
                                           &f.scenario->round2);
      if (f.graph) j["graph"] = SerializeLdg(*f.graph);
      if (f.scenario) {
        j["round1"] = SerializeLdg(f.scenario->round1);
        j["round2"] = SerializeLdg(f.scenario->round2);
        j["changed"] = f.scenario->changed;
        j["outcome"] = std::string(OutcomeName(f.scenario->outcome));
      }
      findings.push_back(j);
    }
    return Document({{"command", "fuzz"},
                     {"config", ConfigJson(cfg.mechanism)},
                     {"kind", std::string(PreferenceKindName(cfg.gen.kind))},
                     {"agents", cfg.gen.n_agents},
                     {"seed", cfg.gen.seed},
                     {"trials", report.trials},
                     {"counts", counts},
                     {"findings", findings},
                     {"violations", report.total_violations()}});
  }
  std::ostringstream os;
  os << "fuzz: " << ConfigText(cfg.mechanism) << " kind="
     << PreferenceKindName(cfg.gen.kind) << " agents=" << cfg.gen.n_agents
     << " trials=" << report.trials << "\n";
  for (const auto& [token, c] : report.counts) {
    os << "  " << token << ": checked " << c.checked << ", violated "
       << c.violated;
    if (c.inconclusive) os << ", inconclusive " << c.inconclusive;
    if (c.skipped) os << ", skipped " << c.skipped;
    os << "\n";
  }
  for (const auto& f : report.findings) {
    os << "violation of " << f.check << " at trial " << f.trial << " (seed "
       << f.seed << "), minimized:\n";
    if (f.graph) {
      VerdictText(os, *f.graph, f.verdict);
      os << SerializeLdg(*f.graph);
    } else {
      VerdictText(os, f.scenario->round1, f.verdict, &f.scenario->round2);
      os << "# round 1\n" << SerializeLdg(f.scenario->round1);
      os << "# round 2\n" << SerializeLdg(f.scenario->round2);
      os << "# changed " << f.scenario->changed << ", outcome "
         << OutcomeName(f.scenario->outcome) << "\n";
    }
  }
  os << "violations: " << report.total_violations() << "\n";
  return os.str();
}

std::string RenderTable1(const std::vector<Table1Row>& rows,
                         OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json cells = Json::object();
      for (size_t i = 0; i < kTable1Columns.size(); ++i) {
        cells[std::string(kTable1Columns[i])] = row.cells[i];
      }
      out.push_back(
          {{"mechanism", row.mechanism}, {"cells", cells}, {"notes", row.notes}});
    }
    return Document({{"command", "table1"}, {"rows", out}});
  }
  std::vector<size_t> width(kTable1Columns.size() + 1, 0);
  width[0] = std::string_view("Mechanism").size();
  for (size_t i = 0; i < kTable1Columns.size(); ++i) {
    width[i + 1] = kTable1Columns[i].size();
  }
  for (const auto& row : rows) {
    width[0] = std::max(width[0], row.mechanism.size());
    for (size_t i = 0; i < row.cells.size(); ++i) {
      width[i + 1] = std::max(width[i + 1], row.cells[i].size());
    }
  }
  std::ostringstream os;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      os << (i ? " | " : "") << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << "\n";
  };
  std::vector<std::string> header{"Mechanism"};
  for (auto c : kTable1Columns) header.emplace_back(c);
  line(header);
  for (const auto& row : rows) {
    std::vector<std::string> cells{row.mechanism};
    cells.insert(cells.end(), row.cells.begin(), row.cells.end());
    line(cells);
  }
  os << "\nnotes:\n";
  for (const auto& row : rows) {
    for (const auto& n : row.notes) os << "  " << row.mechanism << ": " << n << "\n";
  }
  return os.str();
}

std::string RenderFixtures(const std::vector<std::filesystem::path>& files,
                           OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json list = Json::array();
    for (const auto& f : files) list.push_back(f.string());
    return Document({{"command", "fixtures"}, {"files", list}});
  }
  std::string out;
  for (const auto& f : files) out += "wrote " + f.string() + "\n";
  return out;
}

}  // namespace liquid
