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

#include <string>
#include <utility>
#include <vector>

#include "liquid/error.h"
#include "liquid/mechanisms.h"

namespace liquid {
namespace {

// Rank-ordered depth-first search over simple paths; the first voter reached
// ends the lexicographically best path. Subtrees that cannot reach a voter
// are skipped via `usable`.
std::vector<AgentIndex> BestPrefixPath(const PreferenceGraph& g,
                                       const std::vector<char>& usable,
                                       AgentIndex origin,
                                       std::vector<char>& on_path,
                                       std::int64_t& enumerated,
                                       std::int64_t guard) {
  std::vector<std::pair<AgentIndex, int>> stack{{origin, 0}};
  on_path[origin] = 1;
  std::vector<AgentIndex> hops;
  while (!stack.empty()) {
    auto& [agent, next_edge] = stack.back();
    if (g.is_voter(agent)) {
      for (const auto& [a, unused] : stack) {
        if (a != origin) hops.push_back(a);
      }
      break;
    }
    const auto out = g.out_edges(agent);
    while (next_edge < static_cast<int>(out.size()) &&
           (!usable[out[next_edge].dst] || on_path[out[next_edge].dst])) {
      ++next_edge;
    }
    if (next_edge == static_cast<int>(out.size())) {
      on_path[agent] = 0;
      stack.pop_back();
      continue;
    }
    const AgentIndex child = out[next_edge++].dst;
    if (++enumerated > guard) {
      for (const auto& entry : stack) on_path[entry.first] = 0;
      throw Error(ErrorCode::kPathExplosion,
                  "more than " + std::to_string(guard) +
                      " partial delegation paths enumerated");
    }
    on_path[child] = 1;
    stack.emplace_back(child, 0);
  }
  for (const auto& entry : stack) on_path[entry.first] = 0;
  return hops;
}

// Shortest rank-lexicographic path that starts with the top-ranked neighbor
// from which a voter is reachable without passing through `origin`.
std::optional<std::vector<AgentIndex>> ShortestFromTopNeighbor(
    const PreferenceGraph& g, AgentIndex origin, std::vector<int>& dist,
    std::vector<AgentIndex>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  for (AgentIndex v = 0; v < g.num_agents(); ++v) {
    if (g.is_voter(v)) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (AgentIndex u : g.in_neighbors(queue[head])) {
      if (u != origin && dist[u] < 0) {
        dist[u] = dist[queue[head]] + 1;
        queue.push_back(u);
      }
    }
  }
  AgentIndex first = kNoAgent;
  for (const Edge& e : g.out_edges(origin)) {
    if (dist[e.dst] >= 0) {
      first = e.dst;
      break;
    }
  }
  if (first == kNoAgent) return std::nullopt;
  std::vector<AgentIndex> hops{first};
  AgentIndex cur = first;
  while (!g.is_voter(cur)) {
    for (const Edge& e : g.out_edges(cur)) {
      if (dist[e.dst] == dist[cur] - 1) {
        cur = e.dst;
        break;
      }
    }
    hops.push_back(cur);
  }
  return hops;
}

}  // namespace

VoteRouting TallyDepthFirst(const PreferenceGraph& g,
                            GoogleVotesApproach approach,
                            std::int64_t path_guard) {
  CheckKind(approach == GoogleVotesApproach::kHighestRankedPrefix
                ? MechanismId::kDfd1
                : MechanismId::kDfd2,
            g);
  const int n = g.num_agents();
  VoteRouting routing(n);
  const auto usable = DelegableOrVoterMask(g);
  std::vector<char> on_path(n, 0);
  std::vector<int> dist(n, -1);
  std::vector<AgentIndex> queue;
  std::int64_t enumerated = 0;
  for (AgentIndex a = 0; a < n; ++a) {
    if (g.is_voter(a)) {
      routing.SetCast(a, *g.vote(a));
      continue;
    }
    if (!usable[a]) continue;
    std::vector<AgentIndex> hops;
    if (approach == GoogleVotesApproach::kHighestRankedPrefix) {
      hops = BestPrefixPath(g, usable, a, on_path, enumerated, path_guard);
    } else {
      auto found = ShortestFromTopNeighbor(g, a, dist, queue);
      if (!found) continue;
      hops = std::move(*found);
    }
    if (hops.empty()) continue;
    routing.SetPath(a, hops, g.vote(hops.back()), RouteState::kResolved);
  }
  return routing;
}

}  // namespace liquid
