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

#include "liquid/audit.h"
#include "liquid/error.h"

namespace liquid {
namespace {

PropertyVerdict Classified(Property p, std::string detail) {
  PropertyVerdict v;
  v.property = p;
  v.verdict = Verdict::kSatisfied;
  v.detail = std::move(detail);
  return v;
}

PropertyVerdict Inconclusive(std::int64_t bound, std::string detail) {
  PropertyVerdict v;
  v.property = Property::kNad;
  v.verdict = Verdict::kInconclusive;
  v.bound = bound;
  v.detail = std::move(detail);
  return v;
}

// Objective of a ranked mechanism over one candidate path; smaller wins.
struct PathKey {
  int first_rank = 0;  // DFD2 only
  size_t length = 0;   // BFD and DFD2
  std::vector<int> ranks;

  friend auto operator<=>(const PathKey&, const PathKey&) = default;
};

// Counts, per delegable agent, the simple paths to a voter that attain the
// mechanism's optimum. Returns false once `budget` partial paths have been
// visited.
class OptimalPathCounter {
 public:
  OptimalPathCounter(const PreferenceGraph& g, MechanismId id,
                     std::int64_t budget)
      : g_(g), id_(id), budget_(budget), on_path_(g.num_agents(), 0) {}

  bool Count(AgentIndex a, std::int64_t& optimal) {
    best_.reset();
    optimal = 0;
    ranks_.clear();
    on_path_[a] = 1;
    const bool ok = Visit(a, 0, optimal);
    on_path_[a] = 0;
    return ok;
  }

 private:
  bool Visit(AgentIndex x, int first_rank, std::int64_t& optimal) {
    if (++visited_ > budget_) return false;
    for (const Edge& e : g_.out_edges(x)) {
      if (on_path_[e.dst]) continue;
      ranks_.push_back(e.rank);
      const int first = ranks_.size() == 1 ? e.rank : first_rank;
      if (g_.is_voter(e.dst)) {
        PathKey key{id_ == MechanismId::kDfd2 ? first : 0,
                    id_ == MechanismId::kDfd1 ? 0 : ranks_.size(), ranks_};
        if (!best_ || key < *best_) {
          best_ = std::move(key);
          optimal = 1;
        } else if (key == *best_) {
          ++optimal;
        }
      } else {
        on_path_[e.dst] = 1;
        const bool ok = Visit(e.dst, first, optimal);
        on_path_[e.dst] = 0;
        if (!ok) return false;
      }
      ranks_.pop_back();
    }
    return true;
  }

  const PreferenceGraph& g_;
  const MechanismId id_;
  const std::int64_t budget_;
  std::int64_t visited_ = 0;
  std::vector<char> on_path_;
  std::vector<int> ranks_;
  std::optional<PathKey> best_;
};

PropertyVerdict ClassifyRanked(const MechanismConfig& cfg,
                               const PreferenceGraph& g) {
  OptimalPathCounter counter(g, cfg.id, cfg.enum_limit);
  for (AgentIndex a : DelegableAgents(g)) {
    std::int64_t optimal = 0;
    if (!counter.Count(a, optimal)) {
      return Inconclusive(cfg.enum_limit,
                          "simple-path enumeration exceeded the bound");
    }
    if (optimal > 1) {
      // Distinct per-agent ranks make optimal paths unique; reaching this
      // means the objective has ties.
      PropertyVerdict v = Classified(
          Property::kNad, g.name(a) + " has " + std::to_string(optimal) +
                              " optimal paths");
      return v;
    }
  }
  return Classified(Property::kSd, "every agent has one optimal path");
}

PropertyVerdict ClassifyFluid(const MechanismConfig& cfg,
                              const PreferenceGraph& g) {
  const FluidResult fluid = TallyFluid(g, cfg.enum_limit);
  const auto& optima = fluid.optima;
  std::vector<Winner> winners;
  for (const VoteRouting& r : optima) {
    winners.push_back(WinnerOf(TallyFromRouting(g, r)));
  }
  for (size_t i = 1; i < optima.size(); ++i) {
    if (winners[i] == winners[0]) continue;
    PropertyVerdict v = Classified(
        Property::kArbitrary,
        "optimal delegations decide " + std::string(WinnerName(winners[0])) +
            " and " + std::string(WinnerName(winners[i])));
    v.witness = Witness{{}, {}, {optima[0], optima[i]}, v.detail};
    return v;
  }
  if (fluid.truncated) {
    return Inconclusive(cfg.enum_limit,
                        "more optimal delegations than the bound");
  }
  if (optima.size() == 1) {
    return Classified(Property::kSd, "unique optimal delegation");
  }
  PropertyVerdict v = Classified(
      Property::kNad, std::to_string(optima.size()) +
                          " optimal delegations, all with the same outcome");
  v.witness = Witness{{}, {}, {optima[0], optima[1]}, v.detail};
  return v;
}

PropertyVerdict ClassifyGreedyCap(const MechanismConfig& cfg,
                                  const PreferenceGraph& g) {
  const GreedyCapResult result =
      TallyGreedyCap(g, cfg.cap, cfg.seed, cfg.enum_limit, cfg.mc_samples);
  const auto& support = result.distribution.support;
  if (!result.distribution.exact) {
    return Inconclusive(cfg.enum_limit,
                        "random branches exceed the bound (Monte Carlo)");
  }
  if (support.size() == 1) {
    return Classified(Property::kSd, "no random choice is made");
  }
  PropertyVerdict v = Classified(
      Property::kSdod, "uniform tie-breaking over " +
                           std::to_string(support.size()) + " delegations");
  v.witness = Witness{{}, {}, {support[0].first, support[1].first}, v.detail};
  return v;
}

}  // namespace

PropertyVerdict ClassifyArbitrariness(const MechanismConfig& cfg,
                                      const PreferenceGraph& g) {
  CheckKind(cfg.id, g);
  switch (cfg.id) {
    case MechanismId::kLf:
      return Classified(Property::kSd, "one delegate per agent");
    case MechanismId::kBfd:
    case MechanismId::kDfd1:
    case MechanismId::kDfd2:
      return ClassifyRanked(cfg, g);
    case MechanismId::kGreedyCap:
      return ClassifyGreedyCap(cfg, g);
    case MechanismId::kFluid:
      return ClassifyFluid(cfg, g);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown mechanism");
}

PropertyVerdict ArbitrarinessAs(Property requested,
                                const PropertyVerdict& c) {
  PropertyVerdict v;
  v.property = requested;
  v.bound = c.bound;
  v.detail = "classified " + std::string(PropertyName(c.property)) +
             (c.detail.empty() ? "" : ": " + c.detail);
  if (c.verdict == Verdict::kInconclusive) {
    v.verdict = Verdict::kInconclusive;
    return v;
  }
  bool holds = false;
  switch (requested) {
    case Property::kSd:
      holds = c.property == Property::kSd;
      break;
    case Property::kSdod:
      holds = c.property == Property::kSd || c.property == Property::kSdod;
      break;
    case Property::kNad:
      holds = c.property != Property::kArbitrary;
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "not an arbitrariness property");
  }
  v.verdict = holds ? Verdict::kSatisfied : Verdict::kViolated;
  if (!holds) v.witness = c.witness;
  return v;
}

}  // namespace liquid
