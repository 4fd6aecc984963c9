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

#include "liquid/routing.h"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "liquid/error.h"

namespace liquid {

VoteRouting::VoteRouting(int num_agents)
    : route_(num_agents, -1), state_(num_agents, RouteState::kUnresolved) {}

int VoteRouting::NewNode(AgentIndex agent, int next,
                         std::optional<Outcome> terminal) {
  Node node{agent, next, 0, 0, -1};
  const int id = static_cast<int>(nodes_.size());
  if (next < 0) {
    node.end = id;
    node.terminal =
        terminal ? static_cast<std::int8_t>(*terminal) : std::int8_t{-1};
  } else {
    node.end = nodes_[next].end;
    node.hops = nodes_[next].hops + 1;
  }
  nodes_.push_back(node);
  return id;
}

VoteRouting VoteRouting::FromForest(std::span<const ForestEntry> entries) {
  const int n = static_cast<int>(entries.size());
  VoteRouting r(n);
  r.nodes_.resize(n);
  for (AgentIndex a = 0; a < n; ++a) {
    const ForestEntry& e = entries[a];
    r.nodes_[a] = {a, e.next, e.end, e.hops, e.terminal};
    if (e.state != RouteState::kUnresolved) r.route_[a] = a;
    r.state_[a] = e.state;
  }
  return r;
}

void VoteRouting::SetCast(AgentIndex voter, Outcome outcome) {
  route_[voter] = NewNode(voter, -1, outcome);
  state_[voter] = RouteState::kResolved;
}

void VoteRouting::SetHolder(AgentIndex holder) {
  route_[holder] = NewNode(holder, -1, std::nullopt);
  state_[holder] = RouteState::kPending;
}

void VoteRouting::SetViaSuccessor(AgentIndex origin, AgentIndex succ) {
  if (route_[succ] < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "successor has no route to extend");
  }
  route_[origin] = NewNode(origin, route_[succ], std::nullopt);
  state_[origin] = state_[succ];
}

void VoteRouting::SetPath(AgentIndex origin, std::span<const AgentIndex> hops,
                          std::optional<Outcome> terminal, RouteState state) {
  if (state == RouteState::kUnresolved) {
    SetUnresolved(origin);
    return;
  }
  int next = -1;
  for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
    next = NewNode(*it, next, next < 0 ? terminal : std::nullopt);
  }
  route_[origin] = NewNode(origin, next, next < 0 ? terminal : std::nullopt);
  state_[origin] = state;
}

void VoteRouting::SetUnresolved(AgentIndex origin) {
  route_[origin] = -1;
  state_[origin] = RouteState::kUnresolved;
}

int VoteRouting::hop_count(AgentIndex a) const {
  return route_[a] < 0 ? 0 : nodes_[route_[a]].hops;
}

AgentIndex VoteRouting::next_hop(AgentIndex a) const {
  if (route_[a] < 0) return kNoAgent;
  const int next = nodes_[route_[a]].next;
  return next < 0 ? kNoAgent : nodes_[next].agent;
}

AgentIndex VoteRouting::end_agent(AgentIndex a) const {
  if (route_[a] < 0) return kNoAgent;
  return nodes_[nodes_[route_[a]].end].agent;
}

std::optional<Outcome> VoteRouting::terminal(AgentIndex a) const {
  if (route_[a] < 0) return std::nullopt;
  const std::int8_t t = nodes_[nodes_[route_[a]].end].terminal;
  if (t < 0) return std::nullopt;
  return static_cast<Outcome>(t);
}

VotePath VoteRouting::Path(AgentIndex a) const {
  VotePath path{a, {}, terminal(a)};
  path.hops.reserve(hop_count(a));
  ForEachHop(a, [&](AgentIndex h) { path.hops.push_back(h); });
  return path;
}

std::string VoteRouting::CanonicalKey() const {
  std::string key;
  for (AgentIndex a = 0; a < num_agents(); ++a) {
    key += std::to_string(a);
    switch (state_[a]) {
      case RouteState::kUnresolved: key += 'U'; break;
      case RouteState::kResolved: key += 'R'; break;
      case RouteState::kPending: key += 'P'; break;
    }
    ForEachHop(a, [&](AgentIndex h) {
      key += std::to_string(h);
      key += ',';
    });
    if (auto t = terminal(a)) key += *t == Outcome::kYes ? 'y' : 'n';
    key += ';';
  }
  return key;
}

bool operator==(const VoteRouting& a, const VoteRouting& b) {
  if (a.num_agents() != b.num_agents() || a.state_ != b.state_) return false;
  for (AgentIndex x = 0; x < a.num_agents(); ++x) {
    if (a.hop_count(x) != b.hop_count(x) || a.terminal(x) != b.terminal(x)) {
      return false;
    }
    int na = a.route_[x] < 0 ? -1 : a.nodes_[a.route_[x]].next;
    int nb = b.route_[x] < 0 ? -1 : b.nodes_[b.route_[x]].next;
    while (na >= 0 && nb >= 0) {
      if (a.nodes_[na].agent != b.nodes_[nb].agent) return false;
      na = a.nodes_[na].next;
      nb = b.nodes_[nb].next;
    }
  }
  return true;
}

std::int64_t TallyResult::max_power() const {
  std::int64_t best = 0;
  for (auto p : power) best = std::max(best, p);
  return best;
}

std::string_view WinnerName(Winner w) {
  switch (w) {
    case Winner::kYes: return "yes";
    case Winner::kNo: return "no";
    case Winner::kTie: return "tie";
  }
  return "?";
}

Winner WinnerOf(const TallyResult& t) {
  const auto yes = t.total(Outcome::kYes);
  const auto no = t.total(Outcome::kNo);
  if (yes > no) return Winner::kYes;
  if (no > yes) return Winner::kNo;
  return Winner::kTie;
}

TallyResult TallyFromRouting(const PreferenceGraph& g, const VoteRouting& r) {
  if (r.num_agents() != g.num_agents()) {
    throw Error(ErrorCode::kRouteMismatch,
                "routing covers " + std::to_string(r.num_agents()) +
                    " agents, graph has " + std::to_string(g.num_agents()));
  }
  // Shared suffixes are checked once.
  for (const auto& node : r.nodes_) {
    if (node.next >= 0 && !g.HasEdge(node.agent, r.nodes_[node.next].agent)) {
      throw Error(ErrorCode::kRouteMismatch,
                  "path uses missing edge " + g.name(node.agent) + " -> " +
                      g.name(r.nodes_[node.next].agent));
    }
  }
  TallyResult t;
  t.power.assign(g.num_agents(), 0);
  t.held.assign(g.num_agents(), 0);
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    switch (r.state(a)) {
      case RouteState::kResolved: {
        auto term = r.terminal(a);
        if (!term) {
          throw Error(ErrorCode::kRouteMismatch,
                      "resolved route of " + g.name(a) + " has no outcome");
        }
        ++t.totals[static_cast<int>(*term)];
        ++t.power[r.end_agent(a)];
        break;
      }
      case RouteState::kPending:
        ++t.held[r.end_agent(a)];
        ++t.unresolved_count;
        break;
      case RouteState::kUnresolved:
        ++t.unresolved_count;
        break;
    }
  }
  return t;
}

std::string_view RoutingViolationName(RoutingViolation::Kind kind) {
  using K = RoutingViolation::Kind;
  switch (kind) {
    case K::kSize: return "SizeViolation";
    case K::kSimplePath: return "SimplePathViolation";
    case K::kMissingEdge: return "EdgeViolation";
    case K::kIntermediateVoter: return "IntermediateVoterViolation";
    case K::kTerminal: return "TerminalViolation";
    case K::kVoterRoute: return "VoterRouteViolation";
    case K::kAbstainerRoute: return "AbstainerRouteViolation";
    case K::kPendingHolder: return "PendingHolderViolation";
  }
  return "?";
}

std::vector<RoutingViolation> VerifyRouting(const PreferenceGraph& g,
                                            const VoteRouting& r) {
  using K = RoutingViolation::Kind;
  std::vector<RoutingViolation> out;
  if (r.num_agents() != g.num_agents()) {
    out.push_back({K::kSize, kNoAgent, "agent count mismatch"});
    return out;
  }
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    const RouteState state = r.state(a);
    const VotePath path = r.Path(a);
    if (g.is_voter(a)) {
      if (state != RouteState::kResolved || !path.hops.empty() ||
          path.terminal != g.vote(a)) {
        out.push_back({K::kVoterRoute, a, "voter must cast its own vote"});
      }
      continue;
    }
    if (state == RouteState::kUnresolved) continue;
    if (g.is_abstainer(a) &&
        !(state == RouteState::kPending && path.hops.empty())) {
      out.push_back({K::kAbstainerRoute, a, "abstainer has a route"});
      continue;
    }

    std::vector<AgentIndex> seq;
    seq.reserve(path.hops.size() + 1);
    seq.push_back(a);
    seq.insert(seq.end(), path.hops.begin(), path.hops.end());

    std::unordered_set<AgentIndex> seen;
    bool simple = true;
    for (AgentIndex x : seq) simple &= seen.insert(x).second;
    if (!simple) {
      out.push_back({K::kSimplePath, a, "path repeats an agent"});
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      if (!g.HasEdge(seq[i], seq[i + 1])) {
        out.push_back({K::kMissingEdge, a,
                       "no edge " + g.name(seq[i]) + " -> " +
                           g.name(seq[i + 1])});
        break;
      }
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      if (g.is_voter(seq[i])) {
        out.push_back({K::kIntermediateVoter, a,
                       "path passes through voter " + g.name(seq[i])});
        break;
      }
    }
    const AgentIndex last = seq.back();
    if (state == RouteState::kResolved) {
      if (!g.is_voter(last) || path.terminal != g.vote(last)) {
        out.push_back({K::kTerminal, a,
                       "path does not end at a voter casting its outcome"});
      }
    } else if (g.is_voter(last) || path.terminal.has_value()) {
      out.push_back({K::kPendingHolder, a,
                     "pending route must end at a non-voting holder"});
    }
  }
  return out;
}

RoutingDistribution RoutingDistribution::Point(VoteRouting r) {
  RoutingDistribution d;
  d.support.emplace_back(std::move(r), Rational(1));
  return d;
}

RoutingDistribution RoutingDistribution::FromWeighted(
    std::vector<std::pair<VoteRouting, Rational>> weighted, bool exact,
    std::int64_t samples) {
  std::map<std::string, std::pair<VoteRouting, Rational>> merged;
  for (auto& [routing, p] : weighted) {
    auto key = routing.CanonicalKey();
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::make_pair(std::move(routing), p));
    } else {
      it->second.second += p;
    }
  }
  RoutingDistribution d;
  d.exact = exact;
  d.samples = samples;
  for (auto& [key, entry] : merged) d.support.push_back(std::move(entry));
  return d;
}

}  // namespace liquid
