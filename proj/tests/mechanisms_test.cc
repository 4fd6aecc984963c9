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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "liquid/error.h"
#include "liquid/fixtures.h"
#include "liquid/gen.h"
#include "liquid/ldg_format.h"
#include "liquid/mechanisms.h"
#include "liquid/random.h"
#include "oracles.h"

namespace liquid {
namespace {

PreferenceGraph G(std::string_view text) { return ParseLdg(text); }

std::vector<std::string> Route(const PreferenceGraph& g, const VoteRouting& r,
                               std::string_view agent) {
  const AgentIndex a = g.Index(agent);
  if (r.state(a) == RouteState::kUnresolved) return {};
  const VotePath p = r.Path(a);
  std::vector<std::string> out{g.name(p.origin)};
  for (AgentIndex h : p.hops) out.push_back(g.name(h));
  return out;
}

using Names = std::vector<std::string>;

TEST(LiquidFeedback, Fig1LeavesEveryoneUnresolved) {
  const PreferenceGraph g = GetFixture("fig1").graph;
  const VoteRouting r = TallyLiquidFeedback(g);
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    EXPECT_EQ(r.state(a), RouteState::kUnresolved);
  }
  const TallyResult t = TallyFromRouting(g, r);
  EXPECT_EQ(t.unresolved_count, 3);
  EXPECT_EQ(t.total(Outcome::kYes) + t.total(Outcome::kNo), 0);
}

TEST(LiquidFeedback, FollowsChains) {
  const PreferenceGraph g = G("edge a1 a2\nedge a2 v\nvote v yes\n");
  const VoteRouting r = TallyLiquidFeedback(g);
  EXPECT_EQ(Route(g, r, "a1"), (Names{"a1", "a2", "v"}));
  EXPECT_EQ(Route(g, r, "a2"), (Names{"a2", "v"}));
  EXPECT_EQ(TallyFromRouting(g, r).total(Outcome::kYes), 3);
}

TEST(LiquidFeedback, TailIntoVoterlessCycle) {
  const PreferenceGraph g = G("edge a1 a2\nedge a2 a1\nedge a3 a1\n");
  const VoteRouting r = TallyLiquidFeedback(g);
  EXPECT_EQ(TallyFromRouting(g, r).unresolved_count, 3);
}

TEST(LiquidFeedback, RejectsMultipleDelegates) {
  EXPECT_THROW(TallyLiquidFeedback(GetFixture("fig3").graph), Error);
}

TEST(BreadthFirst, Fig2) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  const VoteRouting r = TallyBreadthFirst(g);
  EXPECT_EQ(Route(g, r, "a1"), (Names{"a1", "a4"}));
  EXPECT_EQ(Route(g, r, "a2"), (Names{"a2", "a6"}));
  EXPECT_EQ(Route(g, r, "a3"), (Names{"a3", "a5"}));
  const TallyResult t = TallyFromRouting(g, r);
  EXPECT_EQ(t.total(Outcome::kYes), 4);
  EXPECT_EQ(t.total(Outcome::kNo), 2);
  EXPECT_EQ(t.power[g.Index("a4")], 2);
  EXPECT_EQ(t.power[g.Index("a5")], 2);
  EXPECT_EQ(t.power[g.Index("a6")], 2);
}

TEST(BreadthFirst, PrefersShortPathOverTopRank) {
  const PreferenceGraph g = GetFixture("bfd_rttr_witness").graph;
  const VoteRouting r = TallyBreadthFirst(g);
  EXPECT_EQ(Route(g, r, "a1"), (Names{"a1", "v1"}));
}

TEST(DepthFirst, Fig2ApproachOne) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  const VoteRouting r =
      TallyDepthFirst(g, GoogleVotesApproach::kHighestRankedPrefix);
  EXPECT_EQ(Route(g, r, "a1"), (Names{"a1", "a2", "a3", "a5"}));
  EXPECT_EQ(Route(g, r, "a2"), (Names{"a2", "a3", "a1", "a4"}));
  EXPECT_EQ(Route(g, r, "a3"), (Names{"a3", "a1", "a2", "a6"}));
  const TallyResult t = TallyFromRouting(g, r);
  EXPECT_EQ(t.total(Outcome::kYes), 4);
  EXPECT_EQ(t.total(Outcome::kNo), 2);
}

TEST(DepthFirst, Fig2ApproachTwo) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  const VoteRouting r =
      TallyDepthFirst(g, GoogleVotesApproach::kShortestFromTopNeighbor);
  EXPECT_EQ(Route(g, r, "a1"), (Names{"a1", "a2", "a6"}));
  EXPECT_EQ(Route(g, r, "a2"), (Names{"a2", "a3", "a5"}));
  EXPECT_EQ(Route(g, r, "a3"), (Names{"a3", "a1", "a4"}));
  const TallyResult t = TallyFromRouting(g, r);
  EXPECT_EQ(t.total(Outcome::kYes), 4);
  EXPECT_EQ(t.total(Outcome::kNo), 2);
}

TEST(DepthFirst, ApproachTwoShortcutsRanks) {
  const PreferenceGraph g = GetFixture("dfd2_rttr_witness").graph;
  const VoteRouting r =
      TallyDepthFirst(g, GoogleVotesApproach::kShortestFromTopNeighbor);
  EXPECT_EQ(Route(g, r, "a1"), (Names{"a1", "a2", "v2"}));
}

TEST(DepthFirst, PathGuardTrips) {
  // o prefers a layered maze whose only exit leads back through o, so its
  // search walks every simple path of the maze before trying v.
  GraphSpec spec;
  const int layers = 10;
  const auto node = [](int l, int i) {
    return "n" + std::to_string(l) + "_" + std::to_string(i);
  };
  spec.edges.push_back({"o", node(0, 0), 1, 0});
  spec.edges.push_back({"o", "v", 2, 0});
  for (int l = 0; l < layers; ++l) {
    for (int i = 0; i < 3; ++i) {
      int rank = 1;
      if (l + 1 < layers) {
        for (int j = 0; j < 3; ++j) spec.edges.push_back({node(l, i), node(l + 1, j), rank++, 0});
      }
      spec.edges.push_back({node(l, i), "o", rank, 0});
    }
  }
  spec.votes.push_back({"v", Outcome::kYes, 0});
  const PreferenceGraph g = PreferenceGraph::FromSpec(spec);
  const VoteRouting r =
      TallyDepthFirst(g, GoogleVotesApproach::kHighestRankedPrefix);
  EXPECT_EQ(Route(g, r, "o"), (Names{"o", "v"}));
  try {
    TallyDepthFirst(g, GoogleVotesApproach::kHighestRankedPrefix, 1000);
    FAIL() << "guard did not trip";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPathExplosion);
  }
}

TEST(GreedyCap, SlackCapRoutesEveryone) {
  const PreferenceGraph g = GetFixture("greedycap_star").graph;
  const GreedyCapResult r = TallyGreedyCap(g, 4, 7);
  ASSERT_EQ(r.distribution.support.size(), 1u);
  const TallyResult t = TallyFromRouting(g, r.sample);
  EXPECT_EQ(t.total(Outcome::kYes), 4);
  EXPECT_EQ(t.power[g.Index("v")], 4);
}

TEST(GreedyCap, TightCapSplitsUniformly) {
  const PreferenceGraph g = GetFixture("greedycap_star").graph;
  const GreedyCapResult r = TallyGreedyCap(g, 3, 7);
  ASSERT_EQ(r.distribution.support.size(), 3u);
  EXPECT_TRUE(r.distribution.exact);
  for (const auto& [routing, p] : r.distribution.support) {
    EXPECT_EQ(p, Rational(1, 3));
    const TallyResult t = TallyFromRouting(g, routing);
    EXPECT_EQ(t.power[g.Index("v")], 3);
    EXPECT_EQ(t.unresolved_count, 1);
    EXPECT_TRUE(VerifyRouting(g, routing).empty());
  }
}

TEST(GreedyCap, CapOfOneStrandsTheDelegator) {
  const PreferenceGraph g = GetFixture("thm31_pair").graph;
  const GreedyCapResult r = TallyGreedyCap(g, 1, 0);
  EXPECT_EQ(r.sample.state(g.Index("a1")), RouteState::kUnresolved);
  const GreedyCapResult two = TallyGreedyCap(g, 2, 0);
  EXPECT_EQ(Route(g, two.sample, "a1"), (Names{"a1", "a2"}));
}

TEST(GreedyCap, SameSeedSameSample) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kMup;
  cfg.n_agents = 12;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    cfg.seed = seed;
    const PreferenceGraph g = RandomGraph(cfg);
    const GreedyCapResult a = TallyGreedyCap(g, 2, seed);
    const GreedyCapResult b = TallyGreedyCap(g, 2, seed);
    EXPECT_EQ(a.sample, b.sample);
    EXPECT_EQ(a.distribution.support.size(), b.distribution.support.size());
  }
}

TEST(GreedyCap, MonteCarloWhenBranchingOverflows) {
  GraphSpec spec;
  for (int i = 0; i < 12; ++i) {
    spec.edges.push_back({"d" + std::to_string(10 + i), "v", 0, 0});
    spec.edges.push_back({"d" + std::to_string(10 + i), "w", 0, 0});
  }
  spec.votes = {{"v", Outcome::kYes, 0}, {"w", Outcome::kNo, 0}};
  const PreferenceGraph g = PreferenceGraph::FromSpec(spec);
  const GreedyCapResult r = TallyGreedyCap(g, 4, 3, 10, 256);
  EXPECT_FALSE(r.distribution.exact);
  EXPECT_EQ(r.distribution.samples, 256);
  for (const auto& [routing, p] : r.distribution.support) {
    EXPECT_LE(TallyFromRouting(g, routing).max_power(), 4);
  }
}

TEST(Fluid, Fig3HasTwoOptima) {
  const PreferenceGraph g = GetFixture("fig3").graph;
  const FluidResult r = TallyFluid(g, kDefaultEnumLimit);
  EXPECT_EQ(r.optimum, 2);
  ASSERT_EQ(r.optima.size(), 2u);
  EXPECT_NE(WinnerOf(TallyFromRouting(g, r.optima[0])),
            WinnerOf(TallyFromRouting(g, r.optima[1])));
}

TEST(Fluid, Fig4) {
  const PreferenceGraph a = GetFixture("fig4a").graph;
  const FluidResult ra = TallyFluid(a, kDefaultEnumLimit);
  EXPECT_EQ(ra.optimum, 3);
  ASSERT_EQ(ra.optima.size(), 1u);
  EXPECT_EQ(Route(a, ra.canonical, "a3"), (Names{"a3", "a7"}));
  const TallyResult ta = TallyFromRouting(a, ra.canonical);
  EXPECT_EQ(ta.total(Outcome::kYes), 3);
  EXPECT_EQ(ta.total(Outcome::kNo), 4);

  const PreferenceGraph b = GetFixture("fig4b").graph;
  const FluidResult rb = TallyFluid(b, kDefaultEnumLimit);
  ASSERT_EQ(rb.optima.size(), 1u);
  EXPECT_EQ(Route(b, rb.canonical, "a3"), (Names{"a3", "a2"}));
  const TallyResult tb = TallyFromRouting(b, rb.canonical);
  EXPECT_EQ(tb.total(Outcome::kYes), 4);
  EXPECT_EQ(tb.total(Outcome::kNo), 3);
}

TEST(Registry, KindCompatibility) {
  const PreferenceGraph onp = GetFixture("fig1").graph;
  const PreferenceGraph mrp = GetFixture("fig2").graph;
  const PreferenceGraph mup = GetFixture("fig3").graph;
  EXPECT_TRUE(AcceptsGraph(MechanismId::kLf, onp));
  EXPECT_FALSE(AcceptsGraph(MechanismId::kLf, mup));
  EXPECT_TRUE(AcceptsGraph(MechanismId::kBfd, mrp));
  EXPECT_FALSE(AcceptsGraph(MechanismId::kBfd, mup));
  EXPECT_TRUE(AcceptsGraph(MechanismId::kDfd1, mrp));
  EXPECT_TRUE(AcceptsGraph(MechanismId::kGreedyCap, onp));
  EXPECT_TRUE(AcceptsGraph(MechanismId::kFluid, mup));
  EXPECT_FALSE(AcceptsGraph(MechanismId::kFluid, mrp));
  const PreferenceGraph bare = G("vote a yes\n");
  for (const auto& info : AllMechanisms()) {
    EXPECT_TRUE(AcceptsGraph(info.id, bare)) << info.token;
  }
  try {
    CheckKind(MechanismId::kBfd, mup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongKind);
  }
}

TEST(Registry, TokensRoundTrip) {
  for (const auto& info : AllMechanisms()) {
    EXPECT_EQ(ParseMechanismId(info.token), info.id);
  }
  EXPECT_FALSE(ParseMechanismId("borda").has_value());
}

TEST(Registry, DeterministicMechanismsArePure) {
  for (const auto name : FixtureNames()) {
    const PreferenceGraph g = GetFixture(name).graph;
    for (const auto& info : AllMechanisms()) {
      if (!AcceptsGraph(info.id, g)) continue;
      MechanismConfig cfg;
      cfg.id = info.id;
      const MechanismOutput a = RunMechanism(cfg, g);
      const MechanismOutput b = RunMechanism(cfg, g);
      EXPECT_EQ(a.routing, b.routing) << name << " " << info.token;
      for (const auto& [r, p] : a.distribution.support) {
        EXPECT_TRUE(VerifyRouting(g, r).empty()) << name << " " << info.token;
      }
    }
  }
}

// Path-selection rules against exhaustive simple-path enumeration.
class PathOracle : public ::testing::TestWithParam<int> {};

TEST_P(PathOracle, RandomRankedGraphs) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kMrp;
  for (int trial = 0; trial < 100; ++trial) {
    cfg.seed = MixSeed(GetParam(), trial);
    cfg.n_agents = 2 + trial % 11;
    const PreferenceGraph g = RandomGraph(cfg);
    const VoteRouting bfd = TallyBreadthFirst(g);
    const VoteRouting dfd1 =
        TallyDepthFirst(g, GoogleVotesApproach::kHighestRankedPrefix);
    const VoteRouting dfd2 =
        TallyDepthFirst(g, GoogleVotesApproach::kShortestFromTopNeighbor);
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      const auto check = [&](const VoteRouting& r,
                             const std::optional<VotePath>& want,
                             const char* label) {
        if (!want) {
          EXPECT_EQ(r.state(a), RouteState::kUnresolved)
              << label << " " << g.name(a) << "\n" << SerializeLdg(g);
        } else {
          EXPECT_EQ(r.Path(a), *want)
              << label << " " << g.name(a) << "\n" << SerializeLdg(g);
        }
      };
      check(bfd, oracle::BfdPath(g, a), "bfd");
      check(dfd1, oracle::Dfd1Path(g, a), "dfd1");
      check(dfd2, oracle::Dfd2Path(g, a), "dfd2");
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PathOracle, ::testing::Values(1, 2, 3));

// LF follows the single edge; the oracle path is the unique simple path.
TEST(LiquidFeedback, MatchesChainOracle) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kOnp;
  for (int trial = 0; trial < 200; ++trial) {
    cfg.seed = MixSeed(11, trial);
    cfg.n_agents = 2 + trial % 15;
    const PreferenceGraph g = RandomGraph(cfg);
    const VoteRouting r = TallyLiquidFeedback(g);
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      const auto paths = oracle::AllVoterPaths(g, a);
      ASSERT_LE(paths.size(), 1u);
      if (paths.empty()) {
        EXPECT_EQ(r.state(a), RouteState::kUnresolved);
      } else {
        EXPECT_EQ(r.Path(a), paths.front());
      }
    }
  }
}

}  // namespace
}  // namespace liquid
