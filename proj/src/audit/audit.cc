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
#include <charconv>

#include "liquid/audit.h"
#include "liquid/error.h"

namespace liquid {
namespace {

bool SameDistribution(const RoutingDistribution& a,
                      const RoutingDistribution& b) {
  if (a.support.size() != b.support.size() || a.exact != b.exact) return false;
  for (size_t i = 0; i < a.support.size(); ++i) {
    if (!(a.support[i].first == b.support[i].first) ||
        a.support[i].second != b.support[i].second) {
      return false;
    }
  }
  return true;
}

bool Fails(const std::function<bool(const PreferenceGraph&)>& still_fails,
           const GraphSpec& spec) {
  try {
    return still_fails(PreferenceGraph::FromSpec(spec));
  } catch (const Error&) {
    return false;
  }
}

GraphSpec WithoutAgent(const GraphSpec& spec, const std::string& id) {
  GraphSpec out;
  for (const auto& a : spec.agents) {
    if (a != id) out.agents.push_back(a);
  }
  for (const auto& e : spec.edges) {
    if (e.src != id && e.dst != id) out.edges.push_back(e);
  }
  for (const auto& v : spec.votes) {
    if (v.agent != id) out.votes.push_back(v);
  }
  return out;
}

GraphSpec WithoutEdge(const GraphSpec& spec, size_t index) {
  GraphSpec out = spec;
  out.edges.erase(out.edges.begin() + index);
  return out;
}

}  // namespace

std::optional<PropertyRequest> ParsePropertyToken(std::string_view token) {
  struct Entry {
    std::string_view token;
    Property property;
  };
  static constexpr Entry kFixed[] = {
      {"rtd", Property::kRtd},   {"rttr", Property::kRttr},
      {"gre", Property::kGre},   {"lfe", Property::kLfe},
      {"sd", Property::kSd},     {"sdod", Property::kSdod},
      {"nad", Property::kNad},   {"cp", Property::kCp},
      {"lp", Property::kLocalPred}, {"det", Property::kDeterminism},
  };
  for (const auto& e : kFixed) {
    if (e.token == token) return PropertyRequest{e.property, 0, std::string(token)};
  }
  if (token.size() > 2 && token.substr(0, 2) == "pe") {
    std::int64_t psi = 0;
    const auto digits = token.substr(2);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), psi);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && psi >= 1) {
      return PropertyRequest{Property::kPsiPe, psi, std::string(token)};
    }
  }
  return std::nullopt;
}

bool AuditReport::any_violation() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const PropertyVerdict& v) {
                       return v.verdict == Verdict::kViolated;
                     });
}

PropertyVerdict CheckProperty(const MechanismConfig& cfg,
                              const PreferenceGraph& g,
                              const MechanismOutput& out,
                              const PropertyRequest& request) {
  const RoutingDistribution& d = out.distribution;
  switch (request.property) {
    case Property::kRtd:
      return CheckRtd(g, d);
    case Property::kRttr:
      return CheckRttr(g, d);
    case Property::kPsiPe:
      return CheckPsiPe(g, d, request.parameter);
    case Property::kGre:
      return CheckGre(g, d);
    case Property::kLfe:
      return CheckLfe(g, d).verdict;
    case Property::kSd:
    case Property::kSdod:
    case Property::kNad:
      return ArbitrarinessAs(request.property, ClassifyArbitrariness(cfg, g));
    case Property::kCp:
      return *ReportPower(g, d, cfg.cap).cap;
    case Property::kDeterminism: {
      const MechanismOutput again = RunMechanism(cfg, g);
      PropertyVerdict v;
      v.property = Property::kDeterminism;
      if (again.routing == out.routing &&
          SameDistribution(again.distribution, d)) {
        v.verdict = Verdict::kSatisfied;
      } else {
        v.verdict = Verdict::kViolated;
        v.detail = "a second run with the same inputs differs";
        v.witness = Witness{{}, {}, {out.routing, again.routing}, v.detail};
      }
      return v;
    }
    case Property::kArbitrary:
      return ClassifyArbitrariness(cfg, g);
    case Property::kLocalPred:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "property '" + request.token + "' needs a scenario");
}

AuditReport RunAudit(const MechanismConfig& cfg, const PreferenceGraph& g,
                     const std::vector<PropertyRequest>& properties) {
  for (const auto& req : properties) {
    if (req.property == Property::kLocalPred) {
      throw Error(ErrorCode::kInvalidArgument,
                  "property 'lp' needs a scenario (use the scenario command)");
    }
  }
  AuditReport report;
  report.output = RunMechanism(cfg, g);
  const RoutingDistribution& d = report.output.distribution;
  report.expected_totals = ExpectedTotals(g, d);
  std::optional<std::int64_t> cap;
  if (cfg.id == MechanismId::kGreedyCap) cap = cfg.cap;
  report.power = ReportPower(g, d, cap);
  for (const auto& req : properties) {
    if (req.property == Property::kLfe) {
      report.lfe = CheckLfe(g, d);
      report.verdicts.push_back(report.lfe->verdict);
    } else {
      report.verdicts.push_back(CheckProperty(cfg, g, report.output, req));
    }
  }
  return report;
}

PreferenceGraph MinimizeGraph(
    const PreferenceGraph& g,
    const std::function<bool(const PreferenceGraph&)>& still_fails) {
  GraphSpec spec = g.ToSpec();
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (size_t i = 0; i < spec.agents.size() && !shrunk; ++i) {
      GraphSpec candidate = WithoutAgent(spec, spec.agents[i]);
      if (Fails(still_fails, candidate)) {
        spec = std::move(candidate);
        shrunk = true;
      }
    }
    for (size_t i = 0; i < spec.edges.size() && !shrunk; ++i) {
      GraphSpec candidate = WithoutEdge(spec, i);
      if (Fails(still_fails, candidate)) {
        spec = std::move(candidate);
        shrunk = true;
      }
    }
  }
  return PreferenceGraph::FromSpec(spec);
}

Scenario MinimizeScenario(
    const Scenario& s, const std::function<bool(const Scenario&)>& still_fails) {
  GraphSpec r1 = s.round1.ToSpec();
  GraphSpec r2 = s.round2.ToSpec();
  const auto fails = [&](const GraphSpec& a, const GraphSpec& b) {
    try {
      return still_fails(Scenario{PreferenceGraph::FromSpec(a),
                                  PreferenceGraph::FromSpec(b), s.changed,
                                  s.outcome});
    } catch (const Error&) {
      return false;
    }
  };
  const auto index_in = [](const GraphSpec& spec,
                           const GraphSpec::EdgeLine& e) -> std::optional<size_t> {
    for (size_t i = 0; i < spec.edges.size(); ++i) {
      if (spec.edges[i].src == e.src && spec.edges[i].dst == e.dst) return i;
    }
    return std::nullopt;
  };
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (size_t i = 0; i < r1.agents.size() && !shrunk; ++i) {
      const std::string id = r1.agents[i];
      if (id == s.changed) continue;
      GraphSpec a = WithoutAgent(r1, id);
      GraphSpec b = WithoutAgent(r2, id);
      if (fails(a, b)) {
        r1 = std::move(a);
        r2 = std::move(b);
        shrunk = true;
      }
    }
    for (size_t i = 0; i < r1.edges.size() && !shrunk; ++i) {
      if (r1.edges[i].src == s.changed) continue;
      const auto j = index_in(r2, r1.edges[i]);
      if (!j) continue;
      GraphSpec a = WithoutEdge(r1, i);
      GraphSpec b = WithoutEdge(r2, *j);
      if (fails(a, b)) {
        r1 = std::move(a);
        r2 = std::move(b);
        shrunk = true;
      }
    }
  }
  return Scenario{PreferenceGraph::FromSpec(r1), PreferenceGraph::FromSpec(r2),
                  s.changed, s.outcome};
}

}  // namespace liquid
