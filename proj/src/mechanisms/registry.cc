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

#include <array>

#include "liquid/error.h"
#include "liquid/mechanisms.h"

namespace liquid {
namespace {

constexpr std::array<MechanismInfo, 6> kMechanisms = {{
    {MechanismId::kLf, "lf", "LiquidFeedback", PreferenceKind::kOnp,
     CyclePolicy::kDiscard, PowerPolicy::kNone, "O(n)", false},
    {MechanismId::kBfd, "bfd", "Breadth-first", PreferenceKind::kMrp,
     CyclePolicy::kBreak, PowerPolicy::kNone, "O(n + m)", false},
    {MechanismId::kDfd1, "dfd1", "Google Votes (approach 1)",
     PreferenceKind::kMrp, CyclePolicy::kBreak, PowerPolicy::kNone,
     "Omega(2^n)", false},
    {MechanismId::kDfd2, "dfd2", "Google Votes (approach 2)",
     PreferenceKind::kMrp, CyclePolicy::kBreak, PowerPolicy::kNone,
     "O(n (n + m))", false},
    {MechanismId::kGreedyCap, "greedycap", "GreedyCap", PreferenceKind::kMup,
     CyclePolicy::kAssumeAway, PowerPolicy::kCapped, "O(n^2 + m)", true},
    {MechanismId::kFluid, "fluid", "Fluid mechanics", PreferenceKind::kMup,
     CyclePolicy::kBreak, PowerPolicy::kMinimized, "varies (exact: exp.)",
     false},
}};

}  // namespace

std::string_view CyclePolicyName(CyclePolicy p) {
  switch (p) {
    case CyclePolicy::kAssumeAway: return "AAC";
    case CyclePolicy::kDiscard: return "DC";
    case CyclePolicy::kBreak: return "BC";
  }
  return "?";
}

std::string_view PowerPolicyName(PowerPolicy p) {
  switch (p) {
    case PowerPolicy::kNone: return "No";
    case PowerPolicy::kCapped: return "CP";
    case PowerPolicy::kMinimized: return "MP";
  }
  return "?";
}

const MechanismInfo& GetMechanismInfo(MechanismId id) {
  return kMechanisms[static_cast<int>(id)];
}

std::span<const MechanismInfo> AllMechanisms() { return kMechanisms; }

std::optional<MechanismId> ParseMechanismId(std::string_view token) {
  for (const auto& info : kMechanisms) {
    if (info.token == token) return info.id;
  }
  return std::nullopt;
}

bool AcceptsGraph(MechanismId id, const PreferenceGraph& g) {
  if (g.num_edges() == 0) return true;
  PreferenceKind kind;
  try {
    kind = ClassifyKind(g);
  } catch (const Error&) {
    return false;
  }
  switch (GetMechanismInfo(id).kind) {
    case PreferenceKind::kOnp: return kind == PreferenceKind::kOnp;
    case PreferenceKind::kMrp: return kind == PreferenceKind::kMrp;
    case PreferenceKind::kMup: return kind != PreferenceKind::kMrp;
  }
  return false;
}

void CheckKind(MechanismId id, const PreferenceGraph& g) {
  if (AcceptsGraph(id, g)) return;
  const auto& info = GetMechanismInfo(id);
  const PreferenceKind kind = ClassifyKind(g);  // throws kMixedRanking
  throw Error(ErrorCode::kWrongKind,
              std::string(info.display) + " needs " +
                  std::string(PreferenceKindName(info.kind)) +
                  " preferences, input is " +
                  std::string(PreferenceKindName(kind)));
}

MechanismOutput RunMechanism(const MechanismConfig& cfg,
                             const PreferenceGraph& g) {
  CheckKind(cfg.id, g);
  MechanismOutput out;
  out.id = cfg.id;
  switch (cfg.id) {
    case MechanismId::kLf:
      out.routing = TallyLiquidFeedback(g);
      break;
    case MechanismId::kBfd:
      out.routing = TallyBreadthFirst(g);
      break;
    case MechanismId::kDfd1:
      out.routing = TallyDepthFirst(
          g, GoogleVotesApproach::kHighestRankedPrefix, cfg.path_guard);
      break;
    case MechanismId::kDfd2:
      out.routing = TallyDepthFirst(
          g, GoogleVotesApproach::kShortestFromTopNeighbor, cfg.path_guard);
      break;
    case MechanismId::kGreedyCap: {
      auto result =
          TallyGreedyCap(g, cfg.cap, cfg.seed, cfg.enum_limit, cfg.mc_samples);
      out.routing = std::move(result.sample);
      out.distribution = std::move(result.distribution);
      out.branches = result.branches;
      return out;
    }
    case MechanismId::kFluid: {
      auto result = TallyFluid(g, cfg.enum_limit);
      out.routing = result.canonical;
      out.fluid = std::move(result);
      break;
    }
  }
  out.distribution = RoutingDistribution::Point(out.routing);
  return out;
}

}  // namespace liquid
