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

#include <algorithm>
#include <limits>
#include <vector>

#include "liquid/error.h"
#include "liquid/mechanisms.h"
#include "liquid/random.h"

namespace liquid {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

// Index -> k-subset of {0..n-1} in lexicographic order.
std::vector<int> UnrankCombination(int n, int k, std::uint64_t index) {
  std::vector<int> out;
  int next = 0;
  for (int remaining = k; remaining > 0; --remaining) {
    for (;; ++next) {
      const std::uint64_t with = Binomial(n - next - 1, remaining - 1);
      if (index < with) break;
      index -= with;
    }
    out.push_back(next++);
  }
  return out;
}

// Source of the two random decisions GreedyCap makes per round.
class Chooser {
 public:
  virtual ~Chooser() = default;
  // Index in [0, options).
  virtual std::uint64_t Pick(std::uint64_t options) = 0;
};

class RandomChooser : public Chooser {
 public:
  explicit RandomChooser(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t Pick(std::uint64_t options) override {
    return rng_.UniformBelow(options);
  }

 private:
  Rng rng_;
};

// Replays a fixed prefix of decisions, then takes the first option, and
// records the option count of every decision so the caller can advance the
// sequence like an odometer.
class ScriptedChooser : public Chooser {
 public:
  explicit ScriptedChooser(std::vector<std::uint64_t> prefix)
      : choices_(std::move(prefix)) {}
  std::uint64_t Pick(std::uint64_t options) override {
    if (step_ == choices_.size()) choices_.push_back(0);
    options_.push_back(options);
    return choices_[step_++];
  }
  const std::vector<std::uint64_t>& choices() const { return choices_; }
  const std::vector<std::uint64_t>& options() const { return options_; }

 private:
  std::vector<std::uint64_t> choices_;
  std::vector<std::uint64_t> options_;
  size_t step_ = 0;
};

struct Run {
  VoteRouting routing;
  Rational probability{1};
};

Run Simulate(const PreferenceGraph& g, std::int64_t cap, Chooser& chooser,
             bool track_probability) {
  const int n = g.num_agents();
  std::vector<char> remaining(n, 1);
  std::vector<int> approvals(n, 0);
  for (AgentIndex v = 0; v < n; ++v) {
    approvals[v] = static_cast<int>(g.in_neighbors(v).size());
  }
  auto remove = [&](AgentIndex x) {
    remaining[x] = 0;
    for (const Edge& e : g.out_edges(x)) --approvals[e.dst];
  };

  std::vector<AgentIndex> target(n, kNoAgent);  // approver -> chosen v
  std::vector<char> chosen(n, 0);
  Run run;
  std::vector<AgentIndex> candidates;
  std::vector<AgentIndex> approvers;
  while (true) {
    int best = 0;
    candidates.clear();
    for (AgentIndex v = 0; v < n; ++v) {
      if (!remaining[v] || approvals[v] < best || approvals[v] == 0) continue;
      if (approvals[v] > best) {
        best = approvals[v];
        candidates.clear();
      }
      candidates.push_back(v);
    }
    if (candidates.empty()) break;

    const std::uint64_t pick = chooser.Pick(candidates.size());
    if (track_probability) run.probability /= candidates.size();
    const AgentIndex v = candidates[pick];

    approvers.clear();
    for (AgentIndex u : g.in_neighbors(v)) {
      if (remaining[u]) approvers.push_back(u);
    }
    const int k = static_cast<int>(
        std::min<std::int64_t>(cap - 1, static_cast<std::int64_t>(approvers.size())));
    const std::uint64_t subsets = Binomial(approvers.size(), k);
    const std::uint64_t subset = subsets == 1 ? 0 : chooser.Pick(subsets);
    if (track_probability && subsets > 1) run.probability /= subsets;
    for (int i : UnrankCombination(static_cast<int>(approvers.size()), k, subset)) {
      target[approvers[i]] = v;
      remove(approvers[i]);
    }
    chosen[v] = 1;
    remove(v);
  }

  run.routing = VoteRouting(n);
  for (AgentIndex a = 0; a < n; ++a) {
    if (g.is_voter(a)) {
      run.routing.SetCast(a, *g.vote(a));
    } else if (chosen[a]) {
      run.routing.SetHolder(a);
    }
  }
  for (AgentIndex a = 0; a < n; ++a) {
    if (target[a] != kNoAgent) run.routing.SetViaSuccessor(a, target[a]);
  }
  return run;
}

}  // namespace

GreedyCapResult TallyGreedyCap(const PreferenceGraph& g, std::int64_t cap,
                               std::uint64_t seed, std::int64_t enum_limit,
                               std::int64_t mc_samples) {
  CheckKind(MechanismId::kGreedyCap, g);
  if (cap < 1) {
    throw Error(ErrorCode::kInvalidArgument, "cap must be at least 1");
  }
  GreedyCapResult result;
  {
    RandomChooser chooser(seed);
    result.sample = Simulate(g, cap, chooser, false).routing;
  }

  // Exact mode: walk every decision sequence in odometer order.
  std::vector<std::pair<VoteRouting, Rational>> leaves;
  std::vector<std::uint64_t> prefix;
  bool exhausted = false;
  while (true) {
    ScriptedChooser chooser(prefix);
    Run run = Simulate(g, cap, chooser, true);
    leaves.emplace_back(std::move(run.routing), run.probability);
    if (static_cast<std::int64_t>(leaves.size()) > enum_limit) break;
    auto choices = chooser.choices();
    const auto& options = chooser.options();
    int pos = static_cast<int>(choices.size()) - 1;
    while (pos >= 0 && choices[pos] + 1 >= options[pos]) --pos;
    if (pos < 0) {
      exhausted = true;
      break;
    }
    ++choices[pos];
    choices.resize(pos + 1);
    prefix = std::move(choices);
  }
  if (exhausted) {
    result.branches = static_cast<std::int64_t>(leaves.size());
    result.distribution =
        RoutingDistribution::FromWeighted(std::move(leaves), true, 0);
    return result;
  }

  std::vector<std::pair<VoteRouting, Rational>> samples;
  samples.reserve(mc_samples);
  for (std::int64_t i = 0; i < mc_samples; ++i) {
    RandomChooser chooser(MixSeed(seed, static_cast<std::uint64_t>(i)));
    samples.emplace_back(Simulate(g, cap, chooser, false).routing,
                         Rational(1, mc_samples));
  }
  result.distribution =
      RoutingDistribution::FromWeighted(std::move(samples), false, mc_samples);
  return result;
}

}  // namespace liquid
