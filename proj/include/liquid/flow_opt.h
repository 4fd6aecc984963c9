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

// Min-max confluent delegation: every delegable agent picks exactly one
// approved successor so that all chains reach voters, minimizing the largest
// number of votes any voter casts.

#ifndef LIQUID_FLOW_OPT_H_
#define LIQUID_FLOW_OPT_H_

#include <compare>
#include <cstdint>
#include <vector>

#include "liquid/model.h"
#include "liquid/routing.h"

namespace liquid {

// successor[a] is a's chosen delegate, or kNoAgent for voters and agents
// that cannot reach any voter. Ordering is lexicographic over
// (agent, successor), i.e. the canonical order.
struct Selection {
  std::vector<AgentIndex> successor;

  friend bool operator==(const Selection&, const Selection&) = default;
  friend auto operator<=>(const Selection&, const Selection&) = default;
};

struct ExactSolution {
  std::int64_t optimum = 0;
  // Optimal selections in canonical order; at most enum_limit of them.
  std::vector<Selection> optima;
  bool truncated = false;
  // Lexicographically smallest optimal selection, exact even if truncated.
  Selection canonical;
  std::int64_t nodes_explored = 0;
};

// Branch-and-bound over per-agent successor choices. Agents branch in order
// of descending number of usable out-edges; a node is cut when its partial
// voter loads plus votes from agents that can reach only one voter exceed
// the incumbent.
ExactSolution SolveExact(const PreferenceGraph& g, std::int64_t enum_limit);

// Canonical-order heuristic: each delegable agent picks the successor with
// the smallest current downstream voter load among choices that keep the
// remaining agents routable. Always feasible; not always optimal.
Selection SolveGreedy(const PreferenceGraph& g);

// True iff every delegable agent has an approved successor and every chain
// reaches a voter, and nobody else has a successor.
bool IsFeasible(const PreferenceGraph& g, const Selection& s);

// Votes cast per agent (own vote included for voters); throws
// kInvalidArgument for infeasible selections.
std::vector<std::int64_t> VoterLoads(const PreferenceGraph& g,
                                     const Selection& s);
std::int64_t MaxPower(const PreferenceGraph& g, const Selection& s);

VoteRouting RoutingFromSelection(const PreferenceGraph& g,
                                 const Selection& s);

}  // namespace liquid

#endif  // LIQUID_FLOW_OPT_H_
