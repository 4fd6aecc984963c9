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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "liquid/audit.h"
#include "liquid/error.h"
#include "liquid/gen.h"
#include "liquid/ldg_format.h"
#include "liquid/mechanisms.h"
#include "liquid/random.h"

namespace liquid {
namespace {

TEST(RandomGraph, SingleVoter) {
  GenConfig cfg;
  cfg.n_agents = 1;
  cfg.voter_fraction = 1.0;
  const PreferenceGraph g = RandomGraph(cfg);
  EXPECT_EQ(g.num_agents(), 1);
  EXPECT_EQ(g.num_voters(), 1);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(RandomGraph, SameSeedSameGraph) {
  for (PreferenceKind kind :
       {PreferenceKind::kOnp, PreferenceKind::kMrp, PreferenceKind::kMup}) {
    GenConfig cfg;
    cfg.kind = kind;
    cfg.n_agents = 20;
    cfg.seed = 1234;
    EXPECT_EQ(SerializeLdg(RandomGraph(cfg)), SerializeLdg(RandomGraph(cfg)));
    GenConfig other = cfg;
    other.seed = 1235;
    EXPECT_NE(SerializeLdg(RandomGraph(cfg)), SerializeLdg(RandomGraph(other)));
  }
}

TEST(RandomGraph, OnpHasOutDegreeOne) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kOnp;
  cfg.n_agents = 50;
  for (int t = 0; t < 1000; ++t) {
    cfg.seed = MixSeed(77, t);
    const PreferenceGraph g = RandomGraph(cfg);
    ASSERT_EQ(g.num_agents(), 50);
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      ASSERT_LE(g.out_degree(a), 1);
    }
  }
}

TEST(RandomGraph, ShapesMatchConfig) {
  for (PreferenceKind kind : {PreferenceKind::kMrp, PreferenceKind::kMup}) {
    GenConfig cfg;
    cfg.kind = kind;
    cfg.n_agents = 15;
    cfg.max_out_degree = 4;
    cfg.edge_density = 0.6;
    bool saw_multi = false;
    for (int t = 0; t < 300; ++t) {
      cfg.seed = MixSeed(3, t);
      const PreferenceGraph g = RandomGraph(cfg);
      ASSERT_EQ(g.num_agents(), 15);
      EXPECT_GE(g.num_voters(), 1);
      if (g.num_edges() > 0) {
        const PreferenceKind got = ClassifyKind(g);
        EXPECT_TRUE(got == kind || got == PreferenceKind::kOnp);
      }
      for (AgentIndex a = 0; a < g.num_agents(); ++a) {
        const auto out = g.out_edges(a);
        ASSERT_LE(out.size(), 4u);
        saw_multi |= out.size() > 1;
        if (kind == PreferenceKind::kMrp) {
          std::vector<int> ranks;
          for (const Edge& e : out) ranks.push_back(e.rank);
          std::sort(ranks.begin(), ranks.end());
          for (size_t i = 0; i < ranks.size(); ++i) {
            EXPECT_EQ(ranks[i], static_cast<int>(i) + 1);
          }
        }
      }
    }
    EXPECT_TRUE(saw_multi);
  }
}

TEST(RandomGraph, ProxyModelTargetsVoters) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kMup;
  cfg.proxy_only = true;
  cfg.n_agents = 12;
  for (int t = 0; t < 200; ++t) {
    cfg.seed = MixSeed(9, t);
    const PreferenceGraph g = RandomGraph(cfg);
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      for (const Edge& e : g.out_edges(a)) EXPECT_TRUE(g.is_voter(e.dst));
    }
  }
}

TEST(RandomGraph, SomeSamplesHaveCycles) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kOnp;
  cfg.n_agents = 10;
  int cyclic = 0;
  for (int t = 0; t < 200; ++t) {
    cfg.seed = MixSeed(4, t);
    const PreferenceGraph g = RandomGraph(cfg);
    // ONP cycle: some agent's chain revisits itself.
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      AgentIndex at = a;
      bool found = false;
      for (int step = 0; step < g.num_agents() && g.out_degree(at) == 1; ++step) {
        at = g.out_edges(at)[0].dst;
        if (at == a) {
          found = true;
          break;
        }
      }
      if (found) {
        ++cyclic;
        break;
      }
    }
  }
  EXPECT_GT(cyclic, 20);
}

TEST(GenConfig, Validation) {
  const auto bad = [](auto mutate) {
    GenConfig cfg;
    mutate(cfg);
    try {
      ValidateGenConfig(cfg);
    } catch (const Error& e) {
      return e.code() == ErrorCode::kInvalidArgument;
    }
    return false;
  };
  EXPECT_TRUE(bad([](GenConfig& c) { c.n_agents = 0; }));
  EXPECT_TRUE(bad([](GenConfig& c) { c.voter_fraction = 0; }));
  EXPECT_TRUE(bad([](GenConfig& c) { c.voter_fraction = 1.5; }));
  EXPECT_TRUE(bad([](GenConfig& c) { c.edge_density = -0.1; }));
  EXPECT_TRUE(bad([](GenConfig& c) { c.max_out_degree = 0; }));
  EXPECT_FALSE(bad([](GenConfig&) {}));
}

TEST(RandomScenario, NoneWhenNothingFavorsTheOutcome) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kMup;
  cfg.n_agents = 8;
  MechanismConfig mech;
  mech.id = MechanismId::kFluid;
  int checked = 0;
  for (int t = 0; t < 300 && checked < 20; ++t) {
    cfg.seed = MixSeed(12, t);
    const PreferenceGraph g = RandomGraph(cfg);
    bool all_yes = true;
    for (AgentIndex a = 0; a < g.num_agents(); ++a) {
      if (g.vote(a) == Outcome::kNo) all_yes = false;
    }
    if (!all_yes) continue;
    ++checked;
    EXPECT_FALSE(RandomScenario(cfg, Outcome::kNo, mech).has_value())
        << SerializeLdg(g);
  }
  EXPECT_GT(checked, 0);
}

TEST(RandomScenario, ProducesValidScenarios) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kMup;
  cfg.n_agents = 7;
  MechanismConfig mech;
  mech.id = MechanismId::kFluid;
  int made = 0;
  for (int t = 0; t < 200; ++t) {
    cfg.seed = MixSeed(13, t);
    const Outcome favor = t % 2 ? Outcome::kYes : Outcome::kNo;
    const auto s = RandomScenario(cfg, favor, mech);
    if (!s) continue;
    ++made;
    EXPECT_NO_THROW(ValidateScenario(*s));
    EXPECT_EQ(s->outcome, favor);
    EXPECT_EQ(s->round1.num_agents(), 7);
    const ScenarioReport r = RunScenario(mech, *s);
    EXPECT_NE(r.verdict.verdict, Verdict::kPreconditionFailed)
        << r.verdict.detail;
    const auto again = RandomScenario(cfg, favor, mech);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(again->round2, s->round2);
    EXPECT_EQ(again->changed, s->changed);
  }
  EXPECT_GT(made, 50);
}

TEST(MixSeed, SpreadsStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(MixSeed(0, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(MixSeed(5, 6), MixSeed(5, 6));
}

TEST(Rng, UniformBelowStaysInRange) {
  Rng rng(42);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.UniformBelow(7);
    ASSERT_LT(x, 7u);
    ++counts[x];
  }
  for (int c : counts) EXPECT_GT(c, 800);
}

}  // namespace
}  // namespace liquid
