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

#include "liquid/gen.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "liquid/audit.h"
#include "liquid/error.h"
#include "liquid/random.h"

namespace liquid {
namespace {

std::string AgentName(int i, int n) {
  const int width = std::max<int>(2, std::to_string(n).size());
  std::string digits = std::to_string(i + 1);
  return "a" + std::string(width - digits.size(), '0') + digits;
}

// k distinct picks from pool, in draw order.
std::vector<AgentIndex> Sample(Rng& rng, std::vector<AgentIndex> pool,
                               size_t k) {
  k = std::min(k, pool.size());
  for (size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.UniformBelow(pool.size() - i)]);
  }
  pool.resize(k);
  return pool;
}

std::vector<int> RankPermutation(Rng& rng, size_t k) {
  std::vector<int> ranks(k);
  std::iota(ranks.begin(), ranks.end(), 1);
  rng.Shuffle(ranks);
  return ranks;
}

GraphSpec Assemble(int n, const std::vector<std::vector<AgentIndex>>& out,
                   const std::vector<std::vector<int>>& ranks,
                   const std::vector<int>& votes) {
  GraphSpec spec;
  for (int i = 0; i < n; ++i) spec.agents.push_back(AgentName(i, n));
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < out[i].size(); ++j) {
      spec.edges.push_back({AgentName(i, n), AgentName(out[i][j], n),
                            ranks[i].empty() ? 0 : ranks[i][j], 0});
    }
    if (votes[i] >= 0) {
      spec.votes.push_back(
          {AgentName(i, n), static_cast<Outcome>(votes[i]), 0});
    }
  }
  return spec;
}

}  // namespace

void ValidateGenConfig(const GenConfig& cfg) {
  const auto bad = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (cfg.n_agents < 1) bad("n_agents must be positive");
  if (!(cfg.voter_fraction > 0 && cfg.voter_fraction <= 1)) {
    bad("voter_fraction must be in (0, 1]");
  }
  if (!(cfg.edge_density >= 0 && cfg.edge_density <= 1)) {
    bad("edge_density must be in [0, 1]");
  }
  if (cfg.max_out_degree < 1) bad("max_out_degree must be positive");
  if (!(cfg.abstain_probability >= 0 && cfg.abstain_probability <= 1)) {
    bad("abstain_probability must be in [0, 1]");
  }
  if (!(cfg.cycle_bias >= 0 && cfg.cycle_bias <= 1)) {
    bad("cycle_bias must be in [0, 1]");
  }
}

PreferenceGraph RandomGraph(const GenConfig& cfg) {
  ValidateGenConfig(cfg);
  Rng rng(cfg.seed);
  const int n = cfg.n_agents;
  const bool ranked = cfg.kind == PreferenceKind::kMrp;
  const int max_degree =
      cfg.kind == PreferenceKind::kOnp ? 1 : cfg.max_out_degree;

  std::vector<AgentIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  const int num_voters = std::clamp<int>(
      static_cast<int>(std::lround(cfg.voter_fraction * n)), 1, n);
  std::vector<AgentIndex> voters = Sample(rng, order, num_voters);
  std::sort(voters.begin(), voters.end());

  std::vector<int> votes(n, -1);
  for (AgentIndex v : voters) votes[v] = static_cast<int>(rng.UniformBelow(2));

  std::vector<std::vector<AgentIndex>> out(n);
  std::vector<std::vector<int>> ranks(n);
  std::vector<AgentIndex> delegators;
  for (AgentIndex a = 0; a < n; ++a) {
    if (votes[a] >= 0 || rng.Bernoulli(cfg.abstain_probability)) continue;
    std::vector<AgentIndex> pool;
    for (AgentIndex b : cfg.proxy_only ? voters : order) {
      if (b != a) pool.push_back(b);
    }
    if (pool.empty()) continue;
    int degree = 1;
    for (int i = 1; i < max_degree; ++i) degree += rng.Bernoulli(cfg.edge_density);
    out[a] = Sample(rng, pool, degree);
    std::sort(out[a].begin(), out[a].end());
    if (ranked) ranks[a] = RankPermutation(rng, out[a].size());
    delegators.push_back(a);
  }

  // Close a short cycle through delegators.
  if (!cfg.proxy_only && delegators.size() >= 2 &&
      rng.Bernoulli(cfg.cycle_bias)) {
    const size_t len = std::min<size_t>(delegators.size(),
                                        2 + rng.UniformBelow(2));
    const auto cycle = Sample(rng, delegators, len);
    for (size_t i = 0; i < cycle.size(); ++i) {
      const AgentIndex a = cycle[i];
      const AgentIndex b = cycle[(i + 1) % cycle.size()];
      if (std::find(out[a].begin(), out[a].end(), b) != out[a].end()) continue;
      if (static_cast<int>(out[a].size()) < max_degree) {
        out[a].push_back(b);
        if (ranked) ranks[a].push_back(static_cast<int>(out[a].size()));
      } else {
        out[a][rng.UniformBelow(out[a].size())] = b;
      }
    }
  }
  return PreferenceGraph::FromSpec(Assemble(n, out, ranks, votes));
}

std::optional<Scenario> RandomScenario(const GenConfig& cfg, Outcome favor,
                                       const MechanismConfig& mechanism) {
  PreferenceGraph round1 = RandomGraph(cfg);
  if (!AcceptsGraph(mechanism.id, round1)) return std::nullopt;
  const MechanismOutput out = RunMechanism(mechanism, round1);
  const auto ratings = Ratings(round1, out.distribution, favor);
  Rng rng(MixSeed(cfg.seed, 0x5ce7a210));
  const int n = round1.num_agents();

  std::vector<AgentIndex> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);
  rng.Shuffle(candidates);
  for (AgentIndex c : candidates) {
    // Best rating among the current preferences; abstaining rates 0.
    Rational best1(0);
    bool defined = true;
    if (auto vote = round1.vote(c)) best1 = Rational(*vote == favor ? 1 : 0);
    for (const Edge& e : round1.out_edges(c)) {
      if (!ratings[e.dst]) {
        defined = false;
        break;
      }
      best1 = std::max(best1, *ratings[e.dst]);
    }
    if (!defined) continue;
    std::vector<AgentIndex> eligible;
    for (AgentIndex y = 0; y < n; ++y) {
      if (y == c || !ratings[y] || !(*ratings[y] > best1)) continue;
      if (cfg.proxy_only && !round1.is_voter(y)) continue;
      eligible.push_back(y);
    }
    if (eligible.empty()) continue;

    const int max_degree =
        cfg.kind == PreferenceKind::kOnp ? 1 : cfg.max_out_degree;
    const size_t k = 1 + rng.UniformBelow(std::min<size_t>(eligible.size(), max_degree));
    auto targets = Sample(rng, eligible, k);
    std::sort(targets.begin(), targets.end());
    std::vector<int> ranks;
    if (cfg.kind == PreferenceKind::kMrp) ranks = RankPermutation(rng, k);

    GraphSpec spec = round1.ToSpec();
    const std::string& id = round1.name(c);
    std::erase_if(spec.edges, [&](const auto& e) { return e.src == id; });
    std::erase_if(spec.votes, [&](const auto& v) { return v.agent == id; });
    for (size_t i = 0; i < targets.size(); ++i) {
      spec.edges.push_back(
          {id, round1.name(targets[i]), ranks.empty() ? 0 : ranks[i], 0});
    }
    PreferenceGraph round2 = PreferenceGraph::FromSpec(spec);
    if (!AcceptsGraph(mechanism.id, round2)) continue;
    return Scenario{std::move(round1), std::move(round2), id, favor};
  }
  return std::nullopt;
}

}  // namespace liquid
