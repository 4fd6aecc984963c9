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

#ifndef LIQUID_ROUTING_H_
#define LIQUID_ROUTING_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liquid/model.h"
#include "liquid/rational.h"

namespace liquid {

// The path a single originated vote travels. `terminal` is empty only for
// pending routes (vote parked with a non-voter who was told to vote).
struct VotePath {
  AgentIndex origin = kNoAgent;
  std::vector<AgentIndex> hops;
  std::optional<Outcome> terminal;

  AgentIndex last() const { return hops.empty() ? origin : hops.back(); }
  friend bool operator==(const VotePath&, const VotePath&) = default;
};

enum class RouteState : std::uint8_t {
  kUnresolved,
  kResolved,
  // Held by an agent that must vote itself; only GreedyCap produces these.
  kPending,
};

struct TallyResult;

// Per-origin vote paths for every agent of one graph.
//
// Paths are stored as a forest of nodes so that a route may share its
// suffix with another agent's route (SetViaSuccessor). Confluent mechanisms
// build the whole routing in O(n) this way; per-origin mechanisms store
// independent chains with SetPath.
class VoteRouting {
 public:
  VoteRouting() = default;
  explicit VoteRouting(int num_agents);

  int num_agents() const { return static_cast<int>(route_.size()); }

  // Zero-hop route of a voter casting its own vote.
  void SetCast(AgentIndex voter, Outcome outcome);
  // Zero-hop pending route of an agent that holds votes but has no vote.
  void SetHolder(AgentIndex holder);
  // origin's route = origin followed by succ's (already set) route.
  void SetViaSuccessor(AgentIndex origin, AgentIndex succ);
  // Arbitrary path; no validation (see VerifyRouting).
  void SetPath(AgentIndex origin, std::span<const AgentIndex> hops,
               std::optional<Outcome> terminal, RouteState state);
  void SetPath(const VotePath& path, RouteState state) {
    SetPath(path.origin, path.hops, path.terminal, state);
  }
  void SetUnresolved(AgentIndex origin);

  // Per-agent entry for routings where every path continues along one
  // successor per agent, as in LF. Node ids then equal agent indices.
  struct ForestEntry {
    AgentIndex next = kNoAgent;  // kNoAgent where the path ends
    AgentIndex end = kNoAgent;
    std::int32_t hops = 0;
    std::int8_t terminal = -1;  // at end agents: -1 none, else Outcome
    RouteState state = RouteState::kUnresolved;
    std::uint8_t scratch = 0;  // caller bookkeeping, ignored here
  };
  // Entries must be consistent: next's end/hops chain to an end entry.
  static VoteRouting FromForest(std::span<const ForestEntry> entries);

  RouteState state(AgentIndex a) const { return state_[a]; }
  bool resolved(AgentIndex a) const {
    return state_[a] == RouteState::kResolved;
  }
  // Number of hops, 0 for unresolved routes.
  int hop_count(AgentIndex a) const;
  // First hop or kNoAgent.
  AgentIndex next_hop(AgentIndex a) const;
  // Last agent on the path (the casting voter or the pending holder).
  AgentIndex end_agent(AgentIndex a) const;
  std::optional<Outcome> terminal(AgentIndex a) const;
  VotePath Path(AgentIndex a) const;

  // Calls fn(agent) for every agent on a's path after the origin.
  template <typename Fn>
  void ForEachHop(AgentIndex a, Fn&& fn) const {
    if (route_[a] < 0) return;
    for (int node = nodes_[route_[a]].next; node >= 0;
         node = nodes_[node].next) {
      fn(nodes_[node].agent);
    }
  }

  // Stable text key; equal keys iff equal routings.
  std::string CanonicalKey() const;

  friend bool operator==(const VoteRouting& a, const VoteRouting& b);
  friend TallyResult TallyFromRouting(const PreferenceGraph& g,
                                      const VoteRouting& r);

 private:
  struct Node {
    AgentIndex agent;
    std::int32_t next;    // -1 at the end of the path
    std::int32_t end;     // index of the last node of this path
    std::int32_t hops;    // hops from this node to the end
    std::int8_t terminal; // on end nodes: -1 none, else Outcome
  };

  int NewNode(AgentIndex agent, int next, std::optional<Outcome> terminal);

  std::vector<Node> nodes_;
  std::vector<std::int32_t> route_;  // node id or -1
  std::vector<RouteState> state_;
};

struct TallyResult {
  std::array<std::int64_t, 2> totals{0, 0};
  // Votes cast by each voter, own vote included; zero for non-voters.
  std::vector<std::int64_t> power;
  std::int64_t unresolved_count = 0;
  // Votes parked with each pending holder (GreedyCap "instructed to vote").
  std::vector<std::int64_t> held;

  std::int64_t total(Outcome o) const {
    return totals[static_cast<int>(o)];
  }
  std::int64_t max_power() const;
  friend bool operator==(const TallyResult&, const TallyResult&) = default;
};

enum class Winner { kYes, kNo, kTie };
std::string_view WinnerName(Winner w);
Winner WinnerOf(const TallyResult& t);

// Throws kRouteMismatch if any stored path uses an edge missing from g.
TallyResult TallyFromRouting(const PreferenceGraph& g, const VoteRouting& r);

struct RoutingViolation {
  enum class Kind {
    kSize,
    kSimplePath,
    kMissingEdge,
    kIntermediateVoter,
    kTerminal,
    kVoterRoute,
    kAbstainerRoute,
    kPendingHolder,
  };
  Kind kind;
  AgentIndex agent = kNoAgent;
  std::string detail;
};
std::string_view RoutingViolationName(RoutingViolation::Kind kind);

// Empty result means the routing satisfies every VoteRouting invariant.
std::vector<RoutingViolation> VerifyRouting(const PreferenceGraph& g,
                                            const VoteRouting& r);

// Exact distribution over routings. Support entries are distinct and sorted
// by CanonicalKey. `exact` is false when probabilities are Monte Carlo
// frequencies.
struct RoutingDistribution {
  std::vector<std::pair<VoteRouting, Rational>> support;
  bool exact = true;
  std::int64_t samples = 0;  // Monte Carlo sample count when !exact

  static RoutingDistribution Point(VoteRouting r);
  // Merges duplicate routings and sorts canonically.
  static RoutingDistribution FromWeighted(
      std::vector<std::pair<VoteRouting, Rational>> weighted, bool exact,
      std::int64_t samples);
};

}  // namespace liquid

#endif  // LIQUID_ROUTING_H_
