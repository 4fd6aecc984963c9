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

#include <algorithm>
#include <map>
#include <set>

#include "liquid/audit.h"
#include "liquid/error.h"

namespace liquid {
namespace {

PropertyVerdict Make(Property p, Verdict v, std::string detail = {}) {
  PropertyVerdict out;
  out.property = p;
  out.verdict = v;
  out.detail = std::move(detail);
  return out;
}

// origin followed by the hops of a's route.
std::vector<AgentIndex> RouteAgents(const VoteRouting& r, AgentIndex a) {
  std::vector<AgentIndex> seq{a};
  r.ForEachHop(a, [&](AgentIndex h) { seq.push_back(h); });
  return seq;
}

bool Routed(const VoteRouting& r, AgentIndex a) {
  return r.state(a) != RouteState::kUnresolved;
}

}  // namespace

std::string_view PropertyName(Property p) {
  switch (p) {
    case Property::kRtd: return "RTD";
    case Property::kRttr: return "RTTR";
    case Property::kPsiPe: return "PSI_PE";
    case Property::kGre: return "GRE";
    case Property::kLfe: return "LFE";
    case Property::kSd: return "SD";
    case Property::kSdod: return "SDOD";
    case Property::kNad: return "NAD";
    case Property::kArbitrary: return "ARBITRARY";
    case Property::kCp: return "CP";
    case Property::kLocalPred: return "LOCAL_PRED";
    case Property::kDeterminism: return "DETERMINISM";
  }
  return "?";
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kSatisfied: return "SATISFIED";
    case Verdict::kViolated: return "VIOLATED";
    case Verdict::kVacuous: return "VACUOUS";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
    case Verdict::kPreconditionFailed: return "PRECONDITION_FAILED";
  }
  return "?";
}

PropertyVerdict CheckRtd(const PreferenceGraph& g,
                         const RoutingDistribution& d) {
  const std::vector<AgentIndex> delegable = DelegableAgents(g);
  if (delegable.empty()) {
    return Make(Property::kRtd, Verdict::kVacuous, "no delegable agents");
  }
  for (const auto& [r, p] : d.support) {
    for (AgentIndex a : delegable) {
      if (Routed(r, a) && r.hop_count(a) >= 1 && g.HasEdge(a, r.next_hop(a))) {
        continue;
      }
      PropertyVerdict v = Make(Property::kRtd, Verdict::kViolated,
                               g.name(a) + " is delegable but not delegated");
      v.witness = Witness{{a}, {r.Path(a)}, {r}, v.detail};
      return v;
    }
  }
  return Make(Property::kRtd, Verdict::kSatisfied);
}

PropertyVerdict CheckRttr(const PreferenceGraph& g,
                          const RoutingDistribution& d) {
  if (g.num_edges() > 0 && ClassifyKind(g) != PreferenceKind::kMrp) {
    throw Error(ErrorCode::kWrongKind, "right to top rank needs MRP input");
  }
  std::vector<std::pair<AgentIndex, VotePath>> top;
  for (AgentIndex a : DelegableAgents(g)) {
    if (auto path = TopRankPath(g, a)) top.emplace_back(a, std::move(*path));
  }
  if (top.empty()) {
    return Make(Property::kRttr, Verdict::kVacuous,
                "no agent has a top-rank delegation path");
  }
  for (const auto& [r, p] : d.support) {
    for (const auto& [a, path] : top) {
      if (r.resolved(a) && r.Path(a) == path) continue;
      PropertyVerdict v =
          Make(Property::kRttr, Verdict::kViolated,
               g.name(a) + " is not routed along its top-rank path");
      v.witness = Witness{{a}, {path, r.Path(a)}, {r}, v.detail};
      return v;
    }
  }
  return Make(Property::kRttr, Verdict::kSatisfied);
}

PropertyVerdict CheckPsiPe(const PreferenceGraph& g,
                           const RoutingDistribution& d, std::int64_t psi) {
  if (psi < 1) throw Error(ErrorCode::kInvalidArgument, "psi must be >= 1");
  const int n = g.num_agents();
  for (const auto& [r, p] : d.support) {
    // Distinct onward paths per agent, keyed to one origin that uses each.
    // For psi = 1 the distinct next hops are enough.
    std::vector<std::map<std::vector<AgentIndex>, AgentIndex>> onward(n);
    std::vector<std::map<AgentIndex, AgentIndex>> next(n);
    for (AgentIndex a = 0; a < n; ++a) {
      if (!Routed(r, a)) continue;
      const auto seq = RouteAgents(r, a);
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        next[seq[i]].emplace(seq[i + 1], a);
        if (psi > 1) {
          onward[seq[i]].emplace(
              std::vector<AgentIndex>(seq.begin() + i, seq.end()), a);
        }
      }
    }
    std::vector<AgentIndex> violators;
    for (AgentIndex x = 0; x < n; ++x) {
      const std::int64_t count =
          psi == 1 ? (next[x].size() >= 2 ? 2 : 1)
                   : static_cast<std::int64_t>(onward[x].size());
      if (count > psi) violators.push_back(x);
    }
    if (violators.empty()) continue;
    const AgentIndex x = violators.front();
    Witness w;
    w.agents = violators;
    if (psi == 1) {
      for (const auto& [hop, origin] : next[x]) w.paths.push_back(r.Path(origin));
    } else {
      for (const auto& [suffix, origin] : onward[x]) {
        w.paths.push_back(r.Path(origin));
      }
    }
    PropertyVerdict v =
        Make(Property::kPsiPe, Verdict::kViolated,
             g.name(x) + " sends votes along " + std::to_string(w.paths.size()) +
                 (psi == 1 ? " out-edges" : " distinct paths"));
    v.parameter = psi;
    w.routings = {r};
    w.detail = v.detail;
    v.witness = std::move(w);
    return v;
  }
  PropertyVerdict v = Make(Property::kPsiPe, Verdict::kSatisfied);
  v.parameter = psi;
  return v;
}

PropertyVerdict CheckGre(const PreferenceGraph& g,
                         const RoutingDistribution& d) {
  for (const auto& [r, p] : d.support) {
    const auto violations = VerifyRouting(g, r);
    if (violations.empty()) continue;
    const auto& first = violations.front();
    PropertyVerdict v =
        Make(Property::kGre, Verdict::kViolated,
             std::string(RoutingViolationName(first.kind)) + ": " + first.detail);
    Witness w;
    if (first.agent != kNoAgent) {
      w.agents = {first.agent};
      w.paths = {r.Path(first.agent)};
    }
    w.routings = {r};
    w.detail = v.detail;
    v.witness = std::move(w);
    return v;
  }
  return Make(Property::kGre, Verdict::kSatisfied);
}

LfeReport CheckLfe(const PreferenceGraph& g, const RoutingDistribution& d) {
  struct Sent {
    Rational total, yes, no;
  };
  const int n = g.num_agents();
  std::vector<Rational> held(n), cast(n);
  std::vector<std::map<AgentIndex, Sent>> sent(n);
  for (const auto& [r, p] : d.support) {
    for (AgentIndex a = 0; a < n; ++a) {
      if (!Routed(r, a)) continue;
      const auto seq = RouteAgents(r, a);
      const auto terminal = r.terminal(a);
      for (size_t i = 0; i < seq.size(); ++i) {
        held[seq[i]] += p;
        if (i + 1 == seq.size()) {
          cast[seq[i]] += p;
          continue;
        }
        Sent& s = sent[seq[i]][seq[i + 1]];
        s.total += p;
        if (terminal == Outcome::kYes) s.yes += p;
        if (terminal == Outcome::kNo) s.no += p;
      }
    }
  }
  LfeReport report;
  for (AgentIndex x = 0; x < n; ++x) {
    if (held[x] == 0) continue;
    AgentFeedback f{x, held[x], cast[x], {}};
    for (const auto& [y, s] : sent[x]) {
      f.neighbors.push_back({y, s.total / held[x], s.yes / s.total,
                             s.no / s.total});
    }
    report.feedback.push_back(std::move(f));
  }
  report.verdict = report.feedback.empty()
                       ? Make(Property::kLfe, Verdict::kVacuous,
                              "no routed votes")
                       : Make(Property::kLfe, Verdict::kSatisfied);
  return report;
}

std::array<Rational, 2> ExpectedTotals(const PreferenceGraph& g,
                                       const RoutingDistribution& d) {
  std::array<Rational, 2> totals{Rational(0), Rational(0)};
  for (const auto& [r, p] : d.support) {
    const TallyResult t = TallyFromRouting(g, r);
    totals[0] += p * t.totals[0];
    totals[1] += p * t.totals[1];
  }
  return totals;
}

PowerReport ReportPower(const PreferenceGraph& g,
                        const RoutingDistribution& d,
                        std::optional<std::int64_t> cap) {
  PowerReport report;
  report.expected_power.assign(g.num_agents(), Rational(0));
  std::optional<std::pair<AgentIndex, const VoteRouting*>> over;
  for (const auto& [r, p] : d.support) {
    const TallyResult t = TallyFromRouting(g, r);
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      const std::int64_t votes = t.power[a] + t.held[a];
      report.expected_power[a] += p * votes;
      report.max_power = std::max(report.max_power, votes);
      if (cap && votes > *cap && !over) over.emplace(a, &r);
    }
  }
  if (cap) {
    PropertyVerdict v = Make(Property::kCp, Verdict::kSatisfied);
    v.parameter = *cap;
    if (over) {
      v.verdict = Verdict::kViolated;
      v.detail = g.name(over->first) + " exceeds the cap of " +
                 std::to_string(*cap);
      v.witness = Witness{{over->first}, {}, {*over->second}, v.detail};
    }
    report.cap = std::move(v);
  }
  return report;
}

std::vector<std::optional<Rational>> Ratings(const PreferenceGraph& g,
                                             const RoutingDistribution& d,
                                             Outcome o) {
  const int n = g.num_agents();
  std::vector<std::optional<Rational>> out(n, Rational(0));
  std::vector<std::int64_t> through(n), ending(n);
  for (const auto& [r, p] : d.support) {
    std::fill(through.begin(), through.end(), 0);
    std::fill(ending.begin(), ending.end(), 0);
    for (AgentIndex a = 0; a < n; ++a) {
      if (!Routed(r, a)) continue;
      const bool hit = r.terminal(a) == o;
      ++through[a];
      if (hit) ++ending[a];
      r.ForEachHop(a, [&](AgentIndex h) {
        ++through[h];
        if (hit) ++ending[h];
      });
    }
    for (AgentIndex a = 0; a < n; ++a) {
      if (!out[a]) continue;
      if (!r.resolved(a)) {
        out[a].reset();
        continue;
      }
      *out[a] += p * Rational(ending[a], through[a]);
    }
  }
  return out;
}

}  // namespace liquid
