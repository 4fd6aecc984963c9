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

#include <cstdint>
#include <vector>

#include "liquid/mechanisms.h"

namespace liquid {

VoteRouting TallyLiquidFeedback(const PreferenceGraph& g) {
  CheckKind(MechanismId::kLf, g);
  const int n = g.num_agents();
  // The walk keeps all per-agent state in the entry itself, so each step
  // touches one cache line; the routing is then copied out in index order.
  enum : std::uint8_t { kUnvisited, kOnChain, kSettled };
  std::vector<VoteRouting::ForestEntry> entry(n);
  for (AgentIndex a = 0; a < n; ++a) {
    if (g.is_voter(a)) {
      entry[a].end = a;
      entry[a].terminal = static_cast<std::int8_t>(*g.vote(a));
      entry[a].state = RouteState::kResolved;
      entry[a].scratch = kSettled;
    } else if (g.is_delegator(a)) {
      entry[a].next = g.out_edges(a).front().dst;
    } else {
      entry[a].scratch = kSettled;  // abstainer: unresolved dead end
    }
  }
  std::vector<AgentIndex> chain;
  for (AgentIndex start = 0; start < n; ++start) {
    if (entry[start].scratch == kSettled) continue;
    chain.clear();
    AgentIndex cur = start;
    while (entry[cur].scratch == kUnvisited) {
      entry[cur].scratch = kOnChain;
      chain.push_back(cur);
      cur = entry[cur].next;
    }
    // cur is settled, or on the chain when the walk closed a cycle.
    const VoteRouting::ForestEntry tail = entry[cur];
    const bool resolved = tail.scratch == kSettled &&
                          tail.state == RouteState::kResolved;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      VoteRouting::ForestEntry& e = entry[*it];
      e.scratch = kSettled;
      if (!resolved) continue;
      const VoteRouting::ForestEntry& succ = entry[e.next];
      e.end = succ.end;
      e.hops = succ.hops + 1;
      e.state = RouteState::kResolved;
    }
  }
  return VoteRouting::FromForest(entry);
}

VoteRouting TallyBreadthFirst(const PreferenceGraph& g) {
  CheckKind(MechanismId::kBfd, g);
  const int n = g.num_agents();
  VoteRouting routing(n);
  std::vector<int> dist(n, -1);
  std::vector<AgentIndex> order;
  order.reserve(n);
  for (AgentIndex a = 0; a < n; ++a) {
    if (g.is_voter(a)) {
      dist[a] = 0;
      order.push_back(a);
    }
  }
  for (size_t head = 0; head < order.size(); ++head) {
    for (AgentIndex u : g.in_neighbors(order[head])) {
      if (dist[u] < 0) {
        dist[u] = dist[order[head]] + 1;
        order.push_back(u);
      }
    }
  }
  // Breadth-first order settles every successor before its predecessors.
  for (AgentIndex a : order) {
    if (dist[a] == 0) {
      routing.SetCast(a, *g.vote(a));
      continue;
    }
    for (const Edge& e : g.out_edges(a)) {  // rank order
      if (dist[e.dst] == dist[a] - 1) {
        routing.SetViaSuccessor(a, e.dst);
        break;
      }
    }
  }
  return routing;
}

}  // namespace liquid
