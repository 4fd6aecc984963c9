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

// The delegation mechanisms: each maps a preference graph to a VoteRouting
// (or a distribution over routings for randomized mechanisms).

#ifndef LIQUID_MECHANISMS_H_
#define LIQUID_MECHANISMS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liquid/flow_opt.h"
#include "liquid/model.h"
#include "liquid/routing.h"

namespace liquid {

enum class MechanismId { kLf, kBfd, kDfd1, kDfd2, kGreedyCap, kFluid };

enum class CyclePolicy { kAssumeAway, kDiscard, kBreak };
enum class PowerPolicy { kNone, kCapped, kMinimized };
std::string_view CyclePolicyName(CyclePolicy p);  // AAC / DC / BC
std::string_view PowerPolicyName(PowerPolicy p);  // No / CP / MP

struct MechanismInfo {
  MechanismId id;
  std::string_view token;    // CLI name
  std::string_view display;  // human name
  PreferenceKind kind;
  CyclePolicy cycles;
  PowerPolicy power;
  std::string_view running_time;
  bool randomized;
};

const MechanismInfo& GetMechanismInfo(MechanismId id);
std::span<const MechanismInfo> AllMechanisms();
std::optional<MechanismId> ParseMechanismId(std::string_view token);

inline constexpr std::int64_t kDefaultEnumLimit = 100000;
inline constexpr std::int64_t kDefaultPathGuard = 1000000;
inline constexpr std::int64_t kDefaultCap = 3;
inline constexpr std::int64_t kDefaultMonteCarloSamples = 4096;

struct MechanismConfig {
  MechanismId id = MechanismId::kBfd;
  std::int64_t cap = kDefaultCap;              // GreedyCap
  std::uint64_t seed = 0;                      // GreedyCap
  std::int64_t enum_limit = kDefaultEnumLimit; // GreedyCap branches, Fluid optima
  std::int64_t path_guard = kDefaultPathGuard; // DFD1 path enumeration
  std::int64_t mc_samples = kDefaultMonteCarloSamples;
};

// Ranked mechanisms take MRP input, unranked ones take ONP or MUP, and
// LiquidFeedback takes ONP only. Edge-free graphs are accepted everywhere.
bool AcceptsGraph(MechanismId id, const PreferenceGraph& g);
// Throws kWrongKind (or kMixedRanking) when AcceptsGraph would be false.
void CheckKind(MechanismId id, const PreferenceGraph& g);

// LiquidFeedback: follow each agent's single delegate; chains that end in a
// cycle or at an abstainer stay unresolved. O(n).
VoteRouting TallyLiquidFeedback(const PreferenceGraph& g);

// Breadth-first delegation: shortest path to any voter, ties broken by the
// rank sequence from the first hop. O(n + m).
VoteRouting TallyBreadthFirst(const PreferenceGraph& g);

enum class GoogleVotesApproach {
  // Lexicographically best rank sequence over all simple paths.
  kHighestRankedPrefix = 1,
  // Shortest path through the top-ranked neighbor that has a path avoiding
  // the agent itself.
  kShortestFromTopNeighbor = 2,
};
// Throws kPathExplosion once more than `path_guard` partial paths have been
// enumerated.
VoteRouting TallyDepthFirst(const PreferenceGraph& g,
                            GoogleVotesApproach approach,
                            std::int64_t path_guard = kDefaultPathGuard);

struct GreedyCapResult {
  RoutingDistribution distribution;
  VoteRouting sample;    // drawn with the given seed
  std::int64_t branches = 0;  // leaves enumerated (0 in Monte Carlo mode)
};
GreedyCapResult TallyGreedyCap(
    const PreferenceGraph& g, std::int64_t cap, std::uint64_t seed,
    std::int64_t enum_limit = kDefaultEnumLimit,
    std::int64_t mc_samples = kDefaultMonteCarloSamples);

struct FluidResult {
  std::int64_t optimum = 0;
  VoteRouting canonical;
  std::vector<VoteRouting> optima;
  bool truncated = false;  // EnumLimitExceeded
  ExactSolution solution;
};
FluidResult TallyFluid(const PreferenceGraph& g,
                       std::int64_t enum_limit = kDefaultEnumLimit);

struct MechanismOutput {
  MechanismId id = MechanismId::kBfd;
  // Deterministic result, Fluid's canonical optimum, or GreedyCap's sample.
  VoteRouting routing;
  // Point mass except for GreedyCap.
  RoutingDistribution distribution;
  std::optional<FluidResult> fluid;
  std::int64_t branches = 0;
};

// Checks the input kind and dispatches on cfg.id.
MechanismOutput RunMechanism(const MechanismConfig& cfg,
                             const PreferenceGraph& g);

}  // namespace liquid

#endif  // LIQUID_MECHANISMS_H_
