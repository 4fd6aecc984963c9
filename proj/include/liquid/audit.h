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

// Property checkers over mechanism output: delegation rights, explainability,
// arbitrariness, power concentration and two-round local predictability.

#ifndef LIQUID_AUDIT_H_
#define LIQUID_AUDIT_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liquid/gen.h"
#include "liquid/mechanisms.h"
#include "liquid/model.h"
#include "liquid/rational.h"
#include "liquid/routing.h"

namespace liquid {

enum class Property {
  kRtd,
  kRttr,
  kPsiPe,
  kGre,
  kLfe,
  kSd,
  kSdod,
  kNad,
  kArbitrary,
  kCp,
  kLocalPred,
  kDeterminism,
};
std::string_view PropertyName(Property p);  // "RTD", "PSI_PE", ...

enum class Verdict {
  kSatisfied,
  kViolated,
  kVacuous,
  kInconclusive,
  kPreconditionFailed,
};
std::string_view VerdictName(Verdict v);  // "SATISFIED", ...

struct Witness {
  std::vector<AgentIndex> agents;
  std::vector<VotePath> paths;
  std::vector<VoteRouting> routings;
  std::string detail;
};

struct PropertyVerdict {
  Property property = Property::kRtd;
  std::int64_t parameter = 0;  // psi for PSI_PE, C for CP
  Verdict verdict = Verdict::kSatisfied;
  std::int64_t bound = 0;      // enumeration bound behind INCONCLUSIVE
  std::optional<Witness> witness;
  std::string detail;
};

// Checkers take a distribution; a deterministic routing is a point mass.
// A property holds for a distribution iff it holds for every routing in its
// support.
PropertyVerdict CheckRtd(const PreferenceGraph& g,
                         const RoutingDistribution& d);
// Throws kWrongKind unless g is ranked (or edge-free).
PropertyVerdict CheckRttr(const PreferenceGraph& g,
                          const RoutingDistribution& d);
// psi = 1 is confluence of the used-edge graph; larger psi counts distinct
// onward paths per agent.
PropertyVerdict CheckPsiPe(const PreferenceGraph& g,
                           const RoutingDistribution& d, std::int64_t psi);
PropertyVerdict CheckGre(const PreferenceGraph& g,
                         const RoutingDistribution& d);

struct NeighborFeedback {
  AgentIndex neighbor = kNoAgent;
  Rational fraction;   // expected share of held votes sent to neighbor
  Rational yes_share;  // of the votes sent there
  Rational no_share;
};
struct AgentFeedback {
  AgentIndex agent = kNoAgent;
  Rational held;  // expected votes passing through or ending at agent
  Rational cast;  // expected votes ending at agent
  std::vector<NeighborFeedback> neighbors;
};
struct LfeReport {
  PropertyVerdict verdict;
  std::vector<AgentFeedback> feedback;  // agents holding votes, id order
};
LfeReport CheckLfe(const PreferenceGraph& g, const RoutingDistribution& d);

// Result property is kSd, kSdod, kNad or kArbitrary with verdict SATISFIED,
// or kNad with INCONCLUSIVE when enumeration hit cfg.enum_limit.
PropertyVerdict ClassifyArbitrariness(const MechanismConfig& cfg,
                                      const PreferenceGraph& g);
// Answers one of kSd / kSdod / kNad from a classification.
PropertyVerdict ArbitrarinessAs(Property requested,
                                const PropertyVerdict& classification);

struct PowerReport {
  std::int64_t max_power = 0;  // over every routing in the support
  // Expected votes cast (or held, for pending holders) per agent.
  std::vector<Rational> expected_power;
  std::optional<PropertyVerdict> cap;  // CP(C) when a cap is given
};
PowerReport ReportPower(const PreferenceGraph& g,
                        const RoutingDistribution& d,
                        std::optional<std::int64_t> cap);

// Expected totals per outcome.
std::array<Rational, 2> ExpectedTotals(const PreferenceGraph& g,
                                       const RoutingDistribution& d);

// Rating of each agent for outcome o: expected share of the votes routed
// through it (own vote included) that end at o. Undefined when the agent's
// own route is not resolved in every routing of the support.
std::vector<std::optional<Rational>> Ratings(const PreferenceGraph& g,
                                             const RoutingDistribution& d,
                                             Outcome o);

struct PreferenceRating {
  std::string member;  // agent id, or "vote:yes" / "vote:no"
  std::optional<Rational> rating;
};
struct ScenarioReport {
  PropertyVerdict verdict;  // kLocalPred
  Rational share1;          // expected share of the outcome, round 1
  Rational share2;
  bool exact = true;
  double half_width = 0;    // Monte Carlo interval half-width on share2-share1
  std::vector<PreferenceRating> p1;
  std::vector<PreferenceRating> p2;
};
// Throws kChangedAgentMismatch if the rounds differ in anything but the
// changed agent's edges or vote.
void ValidateScenario(const Scenario& s);
ScenarioReport RunScenario(const MechanismConfig& cfg, const Scenario& s);

// Property tokens used by the CLI: rtd rttr pe<k> gre lfe sd sdod nad cp lp
// det. `parameter` is psi for pe<k>.
struct PropertyRequest {
  Property property = Property::kRtd;
  std::int64_t parameter = 0;
  std::string token;
};
std::optional<PropertyRequest> ParsePropertyToken(std::string_view token);

struct AuditReport {
  MechanismOutput output;
  std::array<Rational, 2> expected_totals;
  PowerReport power;
  std::vector<PropertyVerdict> verdicts;
  std::optional<LfeReport> lfe;
  bool any_violation() const;
};
// lp is not accepted here (it needs a scenario); throws kInvalidArgument.
AuditReport RunAudit(const MechanismConfig& cfg, const PreferenceGraph& g,
                     const std::vector<PropertyRequest>& properties);
// One requested property against an already computed mechanism output.
PropertyVerdict CheckProperty(const MechanismConfig& cfg,
                              const PreferenceGraph& g,
                              const MechanismOutput& out,
                              const PropertyRequest& request);

// Greedy deletion of agents, then edges, while `still_fails` holds.
PreferenceGraph MinimizeGraph(
    const PreferenceGraph& g,
    const std::function<bool(const PreferenceGraph&)>& still_fails);
// Same for scenarios; the changed agent and its preferences are kept.
Scenario MinimizeScenario(
    const Scenario& s, const std::function<bool(const Scenario&)>& still_fails);

}  // namespace liquid

#endif  // LIQUID_AUDIT_H_
