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
#include <cmath>

#include "liquid/audit.h"
#include "liquid/error.h"

namespace liquid {
namespace {

// Two-sided 99.9% normal quantile for Monte Carlo intervals.
constexpr double kZ = 3.29;

std::vector<PreferenceRating> PreferenceSet(
    const PreferenceGraph& g, AgentIndex c,
    const std::vector<std::optional<Rational>>& ratings, Outcome o) {
  std::vector<PreferenceRating> out;
  if (auto vote = g.vote(c)) {
    out.push_back({"vote:" + std::string(OutcomeName(*vote)),
                   Rational(*vote == o ? 1 : 0)});
  }
  for (const Edge& e : g.out_edges(c)) {
    out.push_back({g.name(e.dst), ratings[e.dst]});
  }
  return out;
}

// Mean and variance of the outcome's total across the support.
std::pair<double, double> Moments(const PreferenceGraph& g,
                                  const RoutingDistribution& d, Outcome o) {
  double mean = 0, square = 0;
  for (const auto& [r, p] : d.support) {
    const double w = RationalToDouble(p);
    const double x = static_cast<double>(TallyFromRouting(g, r).total(o));
    mean += w * x;
    square += w * x * x;
  }
  return {mean, std::max(0.0, square - mean * mean)};
}

}  // namespace

void ValidateScenario(const Scenario& s) {
  const auto mismatch = [](const std::string& what) {
    throw Error(ErrorCode::kChangedAgentMismatch, what);
  };
  const auto names1 = s.round1.names();
  const auto names2 = s.round2.names();
  if (!std::equal(names1.begin(), names1.end(), names2.begin(),
                  names2.end())) {
    mismatch("rounds declare different agents");
  }
  const auto changed = s.round1.Find(s.changed);
  if (!changed) mismatch("changed agent '" + s.changed + "' is not declared");
  for (AgentIndex a = 0; a < s.round1.num_agents(); ++a) {
    if (a == *changed) continue;
    const auto e1 = s.round1.out_edges(a);
    const auto e2 = s.round2.out_edges(a);
    if (!std::equal(e1.begin(), e1.end(), e2.begin(), e2.end()) ||
        s.round1.vote(a) != s.round2.vote(a)) {
      mismatch(s.round1.name(a) + " changes preferences but is not '" +
               s.changed + "'");
    }
  }
}

ScenarioReport RunScenario(const MechanismConfig& cfg, const Scenario& s) {
  ValidateScenario(s);
  CheckKind(cfg.id, s.round1);
  CheckKind(cfg.id, s.round2);
  const AgentIndex c = s.round1.Index(s.changed);
  const Outcome o = s.outcome;
  const MechanismOutput out1 = RunMechanism(cfg, s.round1);
  const MechanismOutput out2 = RunMechanism(cfg, s.round2);
  const auto ratings = Ratings(s.round1, out1.distribution, o);

  ScenarioReport report;
  report.p1 = PreferenceSet(s.round1, c, ratings, o);
  report.p2 = PreferenceSet(s.round2, c, ratings, o);
  const int n = s.round1.num_agents();
  report.share1 = ExpectedTotals(s.round1, out1.distribution)[static_cast<int>(o)] / n;
  report.share2 = ExpectedTotals(s.round2, out2.distribution)[static_cast<int>(o)] / n;
  report.exact = out1.distribution.exact && out2.distribution.exact;

  PropertyVerdict& v = report.verdict;
  v.property = Property::kLocalPred;

  // P2 must strictly favor the outcome: every member of P2 rates above every
  // member of P1 (an empty P1 rates 0).
  std::string failure;
  if (report.p2.empty()) failure = "the changed agent has no preferences in round 2";
  Rational max1(0);
  std::optional<Rational> min2;
  for (const auto& m : report.p1) {
    if (!m.rating) {
      failure = "round-1 rating of " + m.member + " is undefined";
    } else {
      max1 = std::max(max1, *m.rating);
    }
  }
  for (const auto& m : report.p2) {
    if (!m.rating) {
      failure = "round-1 rating of " + m.member + " is undefined";
    } else {
      min2 = min2 ? std::min(*min2, *m.rating) : *m.rating;
    }
  }
  if (failure.empty() && min2 && !(*min2 > max1)) {
    failure = "round-2 preferences do not strictly favor " +
              std::string(OutcomeName(o));
  }
  if (!failure.empty()) {
    v.verdict = Verdict::kPreconditionFailed;
    v.detail = failure;
    return report;
  }

  const std::string shares = "share of " + std::string(OutcomeName(o)) + " " +
                             RationalToString(report.share1) + " -> " +
                             RationalToString(report.share2);
  bool violated = report.share2 < report.share1;
  bool decided = true;
  if (!report.exact) {
    const auto [m1, v1] = Moments(s.round1, out1.distribution, o);
    const auto [m2, v2] = Moments(s.round2, out2.distribution, o);
    const double s1 = std::max<double>(1, out1.distribution.samples);
    const double s2 = std::max<double>(1, out2.distribution.samples);
    report.half_width = kZ * std::sqrt(v1 / s1 + v2 / s2) / n;
    const double diff = (m2 - m1) / n;
    violated = diff + report.half_width < 0;
    decided = violated || diff - report.half_width > 0 ||
              (report.half_width == 0 && diff == 0);
  }
  if (!decided) {
    v.verdict = Verdict::kInconclusive;
    v.detail = shares + " (Monte Carlo interval straddles equality)";
    return report;
  }
  v.verdict = violated ? Verdict::kViolated : Verdict::kSatisfied;
  v.detail = shares;
  if (violated) {
    v.witness = Witness{{c}, {}, {out1.routing, out2.routing}, shares};
  }
  return report;
}

}  // namespace liquid
