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

#include "liquid/flow_opt.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "liquid/error.h"

namespace liquid {
namespace {

// Delegable agents and the approved successors they may use (voters and
// other delegable agents; dead ends are discarded up front).
struct Problem {
  explicit Problem(const PreferenceGraph& graph)
      : g(graph), usable(DelegableOrVoterMask(graph)), options(graph.num_agents()) {
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      if (!usable[a] || g.is_voter(a)) continue;
      agents.push_back(a);
      for (const Edge& e : g.out_edges(a)) {
        if (usable[e.dst]) options[a].push_back(e.dst);
      }
      std::sort(options[a].begin(), options[a].end());
    }
  }

  bool delegable(AgentIndex a) const { return usable[a] && !g.is_voter(a); }

  const PreferenceGraph& g;
  std::vector<char> usable;
  std::vector<AgentIndex> agents;
  std::vector<std::vector<AgentIndex>> options;
};

// Last agent reached from `a` by following decided successors: a voter, or
// an undecided delegable agent.
AgentIndex ChainEnd(const Problem& p, const std::vector<AgentIndex>& succ,
                    AgentIndex a) {
  while (!p.g.is_voter(a) && succ[a] != kNoAgent) a = succ[a];
  return a;
}

bool ClosesCycle(const Problem& p, const std::vector<AgentIndex>& succ,
                 AgentIndex a, AgentIndex s) {
  while (true) {
    if (s == a) return true;
    if (p.g.is_voter(s) || succ[s] == kNoAgent) return false;
    s = succ[s];
  }
}

// Agents whose every onward path ends at the same voter.
std::vector<AgentIndex> SingleReachableVoter(const Problem& p) {
  const int n = p.g.num_agents();
  std::vector<AgentIndex> only(n, kNoAgent);
  std::vector<int> count(n, 0);
  std::vector<int> stamp(n, -1);
  std::vector<AgentIndex> queue;
  for (AgentIndex v = 0; v < n; ++v) {
    if (!p.g.is_voter(v)) continue;
    queue.assign(1, v);
    stamp[v] = v;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (AgentIndex u : p.g.in_neighbors(queue[head])) {
        if (stamp[u] == v || !p.usable[u]) continue;
        stamp[u] = v;
        if (++count[u] == 1) only[u] = v;
        queue.push_back(u);
      }
    }
  }
  for (AgentIndex a = 0; a < n; ++a) {
    if (count[a] != 1) only[a] = kNoAgent;
  }
  return only;
}

class BranchAndBound {
 public:
  BranchAndBound(const Problem& p, std::int64_t enum_limit)
      : p_(p),
        limit_(enum_limit),
        only_voter_(SingleReachableVoter(p)),
        succ_(p.g.num_agents(), kNoAgent),
        load_(p.g.num_agents(), 0) {
    order_ = p.agents;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](AgentIndex a, AgentIndex b) {
                       return p.options[a].size() > p.options[b].size();
                     });
  }

  ExactSolution Solve(std::int64_t upper_bound) {
    best_ = upper_bound;
    Search(0);
    ExactSolution out;
    out.optimum = best_;
    out.truncated = truncated_;
    out.nodes_explored = nodes_;
    std::sort(optima_.begin(), optima_.end());
    out.optima = optima_;
    if (!truncated_ && !optima_.empty()) {
      out.canonical = optima_.front();
    } else {
      out.canonical = CanonicalSearch();
    }
    return out;
  }

 private:
  // Partial loads plus votes of agents that can only end at one voter.
  std::int64_t LowerBound() {
    std::int64_t bound = 0;
    for (AgentIndex v = 0; v < p_.g.num_agents(); ++v) {
      load_[v] = p_.g.is_voter(v) ? 1 : 0;
      bound = std::max<std::int64_t>(bound, load_[v]);
    }
    for (AgentIndex a : p_.agents) {
      const AgentIndex end = ChainEnd(p_, succ_, a);
      const AgentIndex voter = p_.g.is_voter(end) ? end : only_voter_[end];
      if (voter != kNoAgent) bound = std::max(bound, ++load_[voter]);
    }
    return bound;
  }

  void Search(size_t depth) {
    ++nodes_;
    const std::int64_t bound = LowerBound();
    if (bound > best_ || (truncated_ && bound == best_)) return;
    if (depth == order_.size()) {
      if (bound < best_) {
        best_ = bound;
        optima_.clear();
        truncated_ = false;
      }
      if (static_cast<std::int64_t>(optima_.size()) < limit_) {
        optima_.push_back(Selection{succ_});
      } else {
        truncated_ = true;
      }
      return;
    }
    const AgentIndex a = order_[depth];
    for (AgentIndex s : p_.options[a]) {
      if (ClosesCycle(p_, succ_, a, s)) continue;
      succ_[a] = s;
      Search(depth + 1);
      succ_[a] = kNoAgent;
    }
  }

  // First feasible selection at the optimum in (agent, successor) order.
  Selection CanonicalSearch() {
    std::fill(succ_.begin(), succ_.end(), kNoAgent);
    Selection found;
    CanonicalStep(0, found);
    return found;
  }

  bool CanonicalStep(size_t depth, Selection& found) {
    if (LowerBound() > best_) return false;
    if (depth == p_.agents.size()) {
      found.successor = succ_;
      return true;
    }
    const AgentIndex a = p_.agents[depth];
    for (AgentIndex s : p_.options[a]) {
      if (ClosesCycle(p_, succ_, a, s)) continue;
      succ_[a] = s;
      if (CanonicalStep(depth + 1, found)) return true;
      succ_[a] = kNoAgent;
    }
    return false;
  }

  const Problem& p_;
  const std::int64_t limit_;
  const std::vector<AgentIndex> only_voter_;
  std::vector<AgentIndex> order_;
  std::vector<AgentIndex> succ_;
  std::vector<std::int64_t> load_;
  std::vector<Selection> optima_;
  std::int64_t best_ = 0;
  bool truncated_ = false;
  std::int64_t nodes_ = 0;
};

// Every delegable agent can still reach a voter when decided agents may only
// use their chosen edge.
bool CompletionFeasible(const Problem& p, const std::vector<AgentIndex>& succ) {
  const int n = p.g.num_agents();
  std::vector<char> reached(n, 0);
  std::vector<AgentIndex> queue;
  for (AgentIndex v = 0; v < n; ++v) {
    if (p.g.is_voter(v)) {
      reached[v] = 1;
      queue.push_back(v);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    const AgentIndex x = queue[head];
    for (AgentIndex u : p.g.in_neighbors(x)) {
      if (reached[u] || !p.delegable(u)) continue;
      if (succ[u] != kNoAgent && succ[u] != x) continue;
      reached[u] = 1;
      queue.push_back(u);
    }
  }
  return std::all_of(p.agents.begin(), p.agents.end(),
                     [&](AgentIndex a) { return reached[a] != 0; });
}

}  // namespace

bool IsFeasible(const PreferenceGraph& g, const Selection& s) {
  if (static_cast<int>(s.successor.size()) != g.num_agents()) return false;
  const Problem p(g);
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    const AgentIndex succ = s.successor[a];
    if (!p.delegable(a)) {
      if (succ != kNoAgent) return false;
      continue;
    }
    if (!std::binary_search(p.options[a].begin(), p.options[a].end(), succ)) {
      return false;
    }
  }
  for (AgentIndex a : p.agents) {
    AgentIndex cur = a;
    for (int steps = 0; !g.is_voter(cur); ++steps) {
      if (steps > g.num_agents()) return false;  // cycle
      cur = s.successor[cur];
    }
  }
  return true;
}

std::vector<std::int64_t> VoterLoads(const PreferenceGraph& g,
                                     const Selection& s) {
  if (!IsFeasible(g, s)) {
    throw Error(ErrorCode::kInvalidArgument, "infeasible selection");
  }
  std::vector<std::int64_t> load(g.num_agents(), 0);
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    if (g.is_voter(a)) {
      ++load[a];
    } else if (s.successor[a] != kNoAgent) {
      AgentIndex cur = a;
      while (!g.is_voter(cur)) cur = s.successor[cur];
      ++load[cur];
    }
  }
  return load;
}

std::int64_t MaxPower(const PreferenceGraph& g, const Selection& s) {
  const auto load = VoterLoads(g, s);
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

VoteRouting RoutingFromSelection(const PreferenceGraph& g,
                                 const Selection& s) {
  if (!IsFeasible(g, s)) {
    throw Error(ErrorCode::kInvalidArgument, "infeasible selection");
  }
  VoteRouting r(g.num_agents());
  std::vector<char> done(g.num_agents(), 0);
  for (AgentIndex v = 0; v < g.num_agents(); ++v) {
    if (g.is_voter(v)) {
      r.SetCast(v, *g.vote(v));
      done[v] = 1;
    }
  }
  std::vector<AgentIndex> chain;
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    if (done[a] || s.successor[a] == kNoAgent) continue;
    chain.clear();
    for (AgentIndex cur = a; !done[cur]; cur = s.successor[cur]) {
      chain.push_back(cur);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      r.SetViaSuccessor(*it, s.successor[*it]);
      done[*it] = 1;
    }
  }
  return r;
}

Selection SolveGreedy(const PreferenceGraph& g) {
  const Problem p(g);
  const int n = g.num_agents();
  std::vector<AgentIndex> succ(n, kNoAgent);

  auto downstream_load = [&](AgentIndex s) {
    std::vector<std::int64_t> load(n, 0);
    for (AgentIndex v = 0; v < n; ++v) load[v] = g.is_voter(v) ? 1 : 0;
    for (AgentIndex a : p.agents) {
      if (succ[a] == kNoAgent) continue;
      const AgentIndex end = ChainEnd(p, succ, a);
      if (g.is_voter(end)) ++load[end];
    }
    const AgentIndex end = ChainEnd(p, succ, s);
    if (g.is_voter(end)) return load[end];
    // Undecided chain end: lightest voter it can still reach.
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<char> seen(n, 0);
    std::vector<AgentIndex> queue{end};
    seen[end] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      const AgentIndex x = queue[head];
      if (g.is_voter(x)) {
        best = std::min(best, load[x]);
        continue;
      }
      auto visit = [&](AgentIndex y) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      };
      if (succ[x] != kNoAgent) {
        visit(succ[x]);
      } else {
        for (AgentIndex y : p.options[x]) visit(y);
      }
    }
    return best;
  };

  for (AgentIndex a : p.agents) {
    AgentIndex pick = kNoAgent;
    std::int64_t pick_load = 0;
    for (AgentIndex s : p.options[a]) {
      if (ClosesCycle(p, succ, a, s)) continue;
      succ[a] = s;
      const bool ok = CompletionFeasible(p, succ);
      const std::int64_t load = ok ? downstream_load(s) : 0;
      succ[a] = kNoAgent;
      if (!ok) continue;
      if (pick == kNoAgent || load < pick_load) {
        pick = s;
        pick_load = load;
      }
    }
    succ[a] = pick;
  }
  return Selection{succ};
}

ExactSolution SolveExact(const PreferenceGraph& g, std::int64_t enum_limit) {
  if (enum_limit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "enum limit must be positive");
  }
  const Problem p(g);
  const Selection greedy = SolveGreedy(g);
  BranchAndBound bnb(p, enum_limit);
  return bnb.Solve(MaxPower(g, greedy));
}

}  // namespace liquid
