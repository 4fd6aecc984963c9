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

#include "liquid/model.h"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "liquid/error.h"
#include "liquid/routing.h"

namespace liquid {

std::string_view OutcomeName(Outcome outcome) {
  return outcome == Outcome::kYes ? "yes" : "no";
}

std::optional<Outcome> ParseOutcome(std::string_view token) {
  if (token == "yes" || token == "YES") return Outcome::kYes;
  if (token == "no" || token == "NO") return Outcome::kNo;
  return std::nullopt;
}

bool IsValidAgentId(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

namespace {

// Replays edge and vote directives in source order so that the first
// offending line is the one reported.
struct AgentState {
  int vote = -1;
  int vote_line = 0;
  int edges = 0;
  int ranked_edges = 0;
  std::unordered_set<std::string> dsts;
  std::unordered_set<int> ranks;
};

void CheckId(const std::string& id, int line) {
  if (!IsValidAgentId(id)) {
    throw Error(ErrorCode::kInvalidId, "invalid agent id '" + id + "'", line);
  }
}

void ValidateDirectives(const GraphSpec& spec) {
  for (const auto& id : spec.agents) CheckId(id, 0);

  struct Directive {
    int line;
    int order;
    bool is_edge;
    int index;
  };
  std::vector<Directive> directives;
  directives.reserve(spec.edges.size() + spec.votes.size());
  int order = 0;
  for (int i = 0; i < static_cast<int>(spec.edges.size()); ++i) {
    directives.push_back({spec.edges[i].line, order++, true, i});
  }
  for (int i = 0; i < static_cast<int>(spec.votes.size()); ++i) {
    directives.push_back({spec.votes[i].line, order++, false, i});
  }
  std::stable_sort(directives.begin(), directives.end(),
                   [](const Directive& a, const Directive& b) {
                     return a.line < b.line;
                   });

  std::unordered_map<std::string, AgentState> state;
  for (const Directive& d : directives) {
    if (d.is_edge) {
      const auto& e = spec.edges[d.index];
      CheckId(e.src, e.line);
      CheckId(e.dst, e.line);
      if (e.src == e.dst) {
        throw Error(ErrorCode::kSelfLoop, "self-loop on '" + e.src + "'",
                    e.line);
      }
      if (e.rank < 0) {
        throw Error(ErrorCode::kSyntax, "rank must be positive", e.line);
      }
      AgentState& s = state[e.src];
      if (s.vote >= 0) {
        throw Error(ErrorCode::kVoteAndDelegate,
                    "'" + e.src + "' both votes and delegates", e.line);
      }
      if (!s.dsts.insert(e.dst).second) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "duplicate edge " + e.src + " -> " + e.dst, e.line);
      }
      const bool ranked = e.rank > 0;
      if (s.edges > 0 && (s.ranked_edges > 0) != ranked) {
        throw Error(ErrorCode::kRankMixing,
                    "'" + e.src + "' mixes ranked and unranked edges",
                    e.line);
      }
      if (ranked && !s.ranks.insert(e.rank).second) {
        throw Error(ErrorCode::kDuplicateRank,
                    "'" + e.src + "' uses rank " + std::to_string(e.rank) +
                        " twice",
                    e.line);
      }
      ++s.edges;
      if (ranked) ++s.ranked_edges;
    } else {
      const auto& v = spec.votes[d.index];
      CheckId(v.agent, v.line);
      AgentState& s = state[v.agent];
      if (s.edges > 0) {
        throw Error(ErrorCode::kVoteAndDelegate,
                    "'" + v.agent + "' both votes and delegates", v.line);
      }
      const int value = static_cast<int>(v.outcome);
      if (s.vote >= 0 && s.vote != value) {
        throw Error(ErrorCode::kConflictingVote,
                    "'" + v.agent + "' votes both yes and no", v.line);
      }
      s.vote = value;
    }
  }
}

}  // namespace

PreferenceGraph PreferenceGraph::FromSpec(const GraphSpec& spec) {
  ValidateDirectives(spec);

  PreferenceGraph g;
  g.names_.reserve(spec.agents.size() + spec.edges.size() +
                   spec.votes.size());
  g.names_ = spec.agents;
  for (const auto& e : spec.edges) {
    g.names_.push_back(e.src);
    g.names_.push_back(e.dst);
  }
  for (const auto& v : spec.votes) g.names_.push_back(v.agent);
  std::sort(g.names_.begin(), g.names_.end());
  g.names_.erase(std::unique(g.names_.begin(), g.names_.end()),
                 g.names_.end());
  const int n = g.num_agents();

  struct Arc {
    AgentIndex src;
    Edge edge;
  };
  std::vector<Arc> arcs;
  arcs.reserve(spec.edges.size());
  for (const auto& e : spec.edges) {
    arcs.push_back({*g.Find(e.src), Edge{*g.Find(e.dst), e.rank}});
  }
  // Preference order: rank for ranked agents (rank 0 ties fall back to dst).
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.edge.rank != b.edge.rank) return a.edge.rank < b.edge.rank;
    return a.edge.dst < b.edge.dst;
  });

  g.out_begin_.assign(n + 1, 0);
  g.edges_.reserve(arcs.size());
  for (const Arc& arc : arcs) {
    ++g.out_begin_[arc.src + 1];
    g.edges_.push_back(arc.edge);
  }
  for (int a = 0; a < n; ++a) g.out_begin_[a + 1] += g.out_begin_[a];

  g.in_begin_.assign(n + 1, 0);
  for (const Arc& arc : arcs) ++g.in_begin_[arc.edge.dst + 1];
  for (int a = 0; a < n; ++a) g.in_begin_[a + 1] += g.in_begin_[a];
  g.in_.assign(arcs.size(), kNoAgent);
  std::vector<int> fill(g.in_begin_.begin(), g.in_begin_.end() - 1);
  // arcs are sorted by src, so each in-list comes out in canonical order.
  for (const Arc& arc : arcs) g.in_[fill[arc.edge.dst]++] = arc.src;

  g.votes_.assign(n, -1);
  for (const auto& v : spec.votes) {
    g.votes_[*g.Find(v.agent)] = static_cast<std::int8_t>(v.outcome);
  }
  return g;
}

GraphSpec PreferenceGraph::ToSpec() const {
  GraphSpec spec;
  spec.agents = names_;
  for (AgentIndex a = 0; a < num_agents(); ++a) {
    std::vector<Edge> out(out_edges(a).begin(), out_edges(a).end());
    std::sort(out.begin(), out.end(),
              [](const Edge& x, const Edge& y) { return x.dst < y.dst; });
    for (const Edge& e : out) {
      spec.edges.push_back({names_[a], names_[e.dst], e.rank, 0});
    }
  }
  for (AgentIndex a = 0; a < num_agents(); ++a) {
    if (auto v = vote(a)) spec.votes.push_back({names_[a], *v, 0});
  }
  return spec;
}

std::optional<AgentIndex> PreferenceGraph::Find(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<AgentIndex>(it - names_.begin());
}

AgentIndex PreferenceGraph::Index(std::string_view id) const {
  if (auto a = Find(id)) return *a;
  throw Error(ErrorCode::kUnknownAgent,
              "unknown agent '" + std::string(id) + "'");
}

std::optional<Outcome> PreferenceGraph::vote(AgentIndex a) const {
  if (votes_[a] < 0) return std::nullopt;
  return static_cast<Outcome>(votes_[a]);
}

std::optional<int> PreferenceGraph::EdgeRank(AgentIndex src,
                                             AgentIndex dst) const {
  for (const Edge& e : out_edges(src)) {
    if (e.dst == dst) return e.rank;
  }
  return std::nullopt;
}

int PreferenceGraph::num_voters() const {
  return static_cast<int>(
      std::count_if(votes_.begin(), votes_.end(), [](auto v) { return v >= 0; }));
}

bool operator==(const PreferenceGraph& a, const PreferenceGraph& b) {
  return a.names_ == b.names_ && a.out_begin_ == b.out_begin_ &&
         a.edges_ == b.edges_ && a.votes_ == b.votes_;
}

std::string_view PreferenceKindName(PreferenceKind kind) {
  switch (kind) {
    case PreferenceKind::kOnp: return "ONP";
    case PreferenceKind::kMrp: return "MRP";
    case PreferenceKind::kMup: return "MUP";
  }
  return "?";
}

std::optional<PreferenceKind> ParsePreferenceKind(std::string_view token) {
  if (token == "onp" || token == "ONP") return PreferenceKind::kOnp;
  if (token == "mrp" || token == "MRP") return PreferenceKind::kMrp;
  if (token == "mup" || token == "MUP") return PreferenceKind::kMup;
  return std::nullopt;
}

PreferenceKind ClassifyKind(const PreferenceGraph& g) {
  int ranked = 0;
  int unranked = 0;
  bool multi = false;
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    auto out = g.out_edges(a);
    if (out.empty()) continue;
    (out.front().ranked() ? ranked : unranked) += 1;
    multi |= out.size() > 1;
  }
  if (ranked > 0 && unranked > 0) {
    throw Error(ErrorCode::kMixedRanking,
                std::to_string(ranked) + " agents rank their delegates and " +
                    std::to_string(unranked) + " do not");
  }
  if (ranked > 0) return PreferenceKind::kMrp;
  return multi ? PreferenceKind::kMup : PreferenceKind::kOnp;
}

std::vector<char> DelegableOrVoterMask(const PreferenceGraph& g) {
  std::vector<char> mask(g.num_agents(), 0);
  std::deque<AgentIndex> queue;
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    if (g.is_voter(a)) {
      mask[a] = 1;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    AgentIndex v = queue.front();
    queue.pop_front();
    for (AgentIndex u : g.in_neighbors(v)) {
      if (!mask[u]) {
        mask[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return mask;
}

std::vector<AgentIndex> DelegableAgents(const PreferenceGraph& g) {
  const auto mask = DelegableOrVoterMask(g);
  std::vector<AgentIndex> out;
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    if (mask[a] && !g.is_voter(a)) out.push_back(a);
  }
  return out;
}

PreferenceGraph DelegableSubgraph(const PreferenceGraph& g) {
  const auto mask = DelegableOrVoterMask(g);
  GraphSpec spec;
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    if (!mask[a]) continue;
    spec.agents.push_back(g.name(a));
    for (const Edge& e : g.out_edges(a)) {
      if (mask[e.dst]) spec.edges.push_back({g.name(a), g.name(e.dst), e.rank, 0});
    }
    if (auto v = g.vote(a)) spec.votes.push_back({g.name(a), *v, 0});
  }
  return PreferenceGraph::FromSpec(spec);
}

std::optional<VotePath> TopRankPath(const PreferenceGraph& g, AgentIndex a) {
  if (ClassifyKind(g) != PreferenceKind::kMrp && g.num_edges() > 0) {
    throw Error(ErrorCode::kWrongKind, "top-rank paths need ranked edges");
  }
  const auto mask = DelegableOrVoterMask(g);
  if (a < 0 || a >= g.num_agents() || !mask[a] || g.is_voter(a)) {
    throw Error(ErrorCode::kNotDelegable,
                "agent is not delegable in this graph");
  }
  VotePath path{a, {}, std::nullopt};
  std::vector<char> seen(g.num_agents(), 0);
  seen[a] = 1;
  AgentIndex cur = a;
  while (!g.is_voter(cur)) {
    AgentIndex next = kNoAgent;
    for (const Edge& e : g.out_edges(cur)) {
      if (mask[e.dst]) {
        next = e.dst;
        break;
      }
    }
    if (seen[next]) return std::nullopt;
    seen[next] = 1;
    path.hops.push_back(next);
    cur = next;
  }
  path.terminal = g.vote(cur);
  return path;
}

}  // namespace liquid
