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

// Preference graphs: agents, (optionally ranked) delegation edges and direct
// votes on a single binary issue, plus the structural constructions used by
// the property checkers (delegable agents, delegable subgraph, top-rank
// delegation paths).

#ifndef LIQUID_MODEL_H_
#define LIQUID_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liquid {

// Dense index of an agent inside one PreferenceGraph. Indices follow the
// lexicographic order of agent ids, so index order is the canonical order.
using AgentIndex = std::int32_t;
inline constexpr AgentIndex kNoAgent = -1;

enum class Outcome : std::uint8_t { kYes = 0, kNo = 1 };
inline constexpr Outcome kOutcomes[] = {Outcome::kYes, Outcome::kNo};

std::string_view OutcomeName(Outcome outcome);  // "yes" / "no"
std::optional<Outcome> ParseOutcome(std::string_view token);
inline Outcome Opposite(Outcome o) {
  return o == Outcome::kYes ? Outcome::kNo : Outcome::kYes;
}

// Letters, digits and underscore; nonempty.
bool IsValidAgentId(std::string_view id);

// Rank 0 means unranked; ranked edges carry a positive rank where 1 is most
// preferred. Only relative order matters.
struct Edge {
  AgentIndex dst = kNoAgent;
  int rank = 0;

  bool ranked() const { return rank > 0; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Name-based description of a graph, as produced by the parser and consumed
// by PreferenceGraph::FromSpec. Line numbers are carried only for diagnostics.
struct GraphSpec {
  struct EdgeLine {
    std::string src;
    std::string dst;
    int rank = 0;
    int line = 0;
  };
  struct VoteLine {
    std::string agent;
    Outcome outcome = Outcome::kYes;
    int line = 0;
  };
  std::vector<std::string> agents;
  std::vector<EdgeLine> edges;
  std::vector<VoteLine> votes;
};

class PreferenceGraph {
 public:
  PreferenceGraph() = default;

  // Validates every model invariant and throws liquid::Error on the first
  // violation. Agents referenced by edges or votes are declared implicitly.
  static PreferenceGraph FromSpec(const GraphSpec& spec);
  GraphSpec ToSpec() const;

  int num_agents() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& name(AgentIndex a) const { return names_[a]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<AgentIndex> Find(std::string_view id) const;
  // Like Find but throws kUnknownAgent.
  AgentIndex Index(std::string_view id) const;

  // Out-edges in preference order: by rank for ranked agents, by
  // destination id otherwise.
  std::span<const Edge> out_edges(AgentIndex a) const {
    return {edges_.data() + out_begin_[a],
            edges_.data() + out_begin_[a + 1]};
  }
  std::span<const AgentIndex> in_neighbors(AgentIndex a) const {
    return {in_.data() + in_begin_[a], in_.data() + in_begin_[a + 1]};
  }
  int out_degree(AgentIndex a) const {
    return out_begin_[a + 1] - out_begin_[a];
  }

  std::optional<Outcome> vote(AgentIndex a) const;
  bool is_voter(AgentIndex a) const { return votes_[a] >= 0; }
  bool is_delegator(AgentIndex a) const { return out_degree(a) > 0; }
  bool is_abstainer(AgentIndex a) const {
    return !is_voter(a) && !is_delegator(a);
  }

  // Rank of the edge src->dst (0 if unranked) or nullopt if absent.
  std::optional<int> EdgeRank(AgentIndex src, AgentIndex dst) const;
  bool HasEdge(AgentIndex src, AgentIndex dst) const {
    return EdgeRank(src, dst).has_value();
  }
  int num_voters() const;

  friend bool operator==(const PreferenceGraph& a, const PreferenceGraph& b);

 private:
  std::vector<std::string> names_;
  std::vector<int> out_begin_{0};
  std::vector<Edge> edges_;
  std::vector<int> in_begin_{0};
  std::vector<AgentIndex> in_;
  std::vector<std::int8_t> votes_;  // -1 none, else Outcome value
};

enum class PreferenceKind { kOnp, kMrp, kMup };
std::string_view PreferenceKindName(PreferenceKind kind);
std::optional<PreferenceKind> ParsePreferenceKind(std::string_view token);

// ONP: unranked with out-degree <= 1 everywhere (also any edge-free graph);
// MRP: every delegating agent ranks its edges; MUP: unranked otherwise.
// Throws kMixedRanking when some agents rank and others do not.
PreferenceKind ClassifyKind(const PreferenceGraph& g);

// Non-voters with a directed path to some voter, in canonical order.
std::vector<AgentIndex> DelegableAgents(const PreferenceGraph& g);
// Per-agent flag: voter or delegable.
std::vector<char> DelegableOrVoterMask(const PreferenceGraph& g);

// g restricted to voters and delegable agents; surviving ranks are kept.
PreferenceGraph DelegableSubgraph(const PreferenceGraph& g);

struct VotePath;

// Follows minimal-rank surviving out-edges in the delegable subgraph.
// Returns nullopt if the chase enters a cycle. Throws kWrongKind unless the
// graph is ranked and kNotDelegable if `a` is not a delegable agent.
std::optional<VotePath> TopRankPath(const PreferenceGraph& g, AgentIndex a);

}  // namespace liquid

#endif  // LIQUID_MODEL_H_
