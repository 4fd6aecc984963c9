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

#include "liquid/audit.h"
#include "liquid/error.h"
#include "liquid/fixtures.h"
#include "liquid/gen.h"
#include "liquid/ldg_format.h"
#include "liquid/mechanisms.h"
#include "liquid/random.h"

namespace liquid {
namespace {

PreferenceGraph G(std::string_view text) { return ParseLdg(text); }

MechanismConfig Config(MechanismId id, std::int64_t cap = kDefaultCap) {
  MechanismConfig cfg;
  cfg.id = id;
  cfg.cap = cap;
  return cfg;
}

RoutingDistribution Dist(MechanismId id, const PreferenceGraph& g,
                        std::int64_t cap = kDefaultCap) {
  return RunMechanism(Config(id, cap), g).distribution;
}

PropertyRequest Req(std::string_view token) {
  const auto r = ParsePropertyToken(token);
  EXPECT_TRUE(r.has_value()) << token;
  return *r;
}

std::set<std::string> WitnessNames(const PreferenceGraph& g,
                                   const PropertyVerdict& v) {
  std::set<std::string> out;
  if (v.witness) {
    for (AgentIndex a : v.witness->agents) out.insert(g.name(a));
  }
  return out;
}

TEST(Rtd, Examples) {
  EXPECT_EQ(CheckRtd(GetFixture("fig1").graph,
                     Dist(MechanismId::kLf, GetFixture("fig1").graph))
                .verdict,
            Verdict::kVacuous);

  const PreferenceGraph pair = GetFixture("thm31_pair").graph;
  const PropertyVerdict v = CheckRtd(pair, Dist(MechanismId::kGreedyCap, pair, 1));
  EXPECT_EQ(v.verdict, Verdict::kViolated);
  EXPECT_EQ(WitnessNames(pair, v), std::set<std::string>{"a1"});
  EXPECT_EQ(CheckRtd(pair, Dist(MechanismId::kGreedyCap, pair, 2)).verdict,
            Verdict::kSatisfied);

  const PreferenceGraph fig4a = GetFixture("fig4a").graph;
  EXPECT_EQ(CheckRtd(fig4a, Dist(MechanismId::kFluid, fig4a)).verdict,
            Verdict::kSatisfied);
}

TEST(Rttr, Examples) {
  const PreferenceGraph fig2 = GetFixture("fig2").graph;
  EXPECT_EQ(CheckRttr(fig2, Dist(MechanismId::kDfd1, fig2)).verdict,
            Verdict::kVacuous);

  const PreferenceGraph bw = GetFixture("bfd_rttr_witness").graph;
  const PropertyVerdict b = CheckRttr(bw, Dist(MechanismId::kBfd, bw));
  EXPECT_EQ(b.verdict, Verdict::kViolated);
  EXPECT_EQ(WitnessNames(bw, b), std::set<std::string>{"a1"});
  EXPECT_EQ(CheckRttr(bw, Dist(MechanismId::kDfd1, bw)).verdict,
            Verdict::kSatisfied);

  const PreferenceGraph dw = GetFixture("dfd2_rttr_witness").graph;
  const PropertyVerdict d = CheckRttr(dw, Dist(MechanismId::kDfd2, dw));
  EXPECT_EQ(d.verdict, Verdict::kViolated);
  EXPECT_EQ(WitnessNames(dw, d), std::set<std::string>{"a1"});
}

TEST(Rttr, NeedsRankedInput) {
  const PreferenceGraph fig3 = GetFixture("fig3").graph;
  try {
    CheckRttr(fig3, Dist(MechanismId::kFluid, fig3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongKind);
  }
}

// An agent whose forwarded votes leave along two different edges.
void ExpectTwoOutEdges(const PreferenceGraph& g, const VoteRouting& r,
                       AgentIndex w) {
  std::set<AgentIndex> next;
  for (AgentIndex a = 0; a < g.num_agents(); ++a) {
    const VotePath p = r.Path(a);
    AgentIndex at = p.origin;
    for (AgentIndex h : p.hops) {
      if (at == w) next.insert(h);
      at = h;
    }
  }
  EXPECT_GE(next.size(), 2u) << g.name(w);
}

TEST(PsiPe, GoogleVotesViolateOnFig2) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  for (MechanismId id : {MechanismId::kDfd1, MechanismId::kDfd2}) {
    const RoutingDistribution d = Dist(id, g);
    const PropertyVerdict v = CheckPsiPe(g, d, 1);
    ASSERT_EQ(v.verdict, Verdict::kViolated);
    ASSERT_TRUE(v.witness.has_value());
    ASSERT_FALSE(v.witness->agents.empty());
    for (AgentIndex w : v.witness->agents) {
      ExpectTwoOutEdges(g, d.support[0].first, w);
    }
  }
}

TEST(PsiPe, Dfd1WitnessesIncludeA3) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  const PropertyVerdict v = CheckPsiPe(g, Dist(MechanismId::kDfd1, g), 1);
  EXPECT_TRUE(WitnessNames(g, v).count("a3"));
}

TEST(PsiPe, BreadthFirstFig2Holds) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  EXPECT_EQ(CheckPsiPe(g, Dist(MechanismId::kBfd, g), 1).verdict,
            Verdict::kSatisfied);
}

TEST(PsiPe, LargerPsiRelaxes) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  const RoutingDistribution d = Dist(MechanismId::kDfd1, g);
  // Each of a1..a3 forwards at most three distinct onward paths.
  EXPECT_EQ(CheckPsiPe(g, d, 3).verdict, Verdict::kSatisfied);
  EXPECT_LE(CheckPsiPe(g, d, 2).verdict == Verdict::kViolated,
            CheckPsiPe(g, d, 1).verdict == Verdict::kViolated);
}

TEST(PsiPe, LiquidFeedbackAlwaysConfluent) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kOnp;
  for (int t = 0; t < 300; ++t) {
    cfg.seed = MixSeed(5, t);
    cfg.n_agents = 1 + t % 20;
    const PreferenceGraph g = RandomGraph(cfg);
    EXPECT_NE(CheckPsiPe(g, Dist(MechanismId::kLf, g), 1).verdict,
              Verdict::kViolated)
        << SerializeLdg(g);
  }
}

TEST(Gre, Examples) {
  const PreferenceGraph fig2 = GetFixture("fig2").graph;
  EXPECT_EQ(CheckGre(fig2, Dist(MechanismId::kDfd1, fig2)).verdict,
            Verdict::kSatisfied);
  const PreferenceGraph fig1 = GetFixture("fig1").graph;
  EXPECT_NE(CheckGre(fig1, Dist(MechanismId::kLf, fig1)).verdict,
            Verdict::kViolated);
}

TEST(Gre, MalformedRoutingViolates) {
  const PreferenceGraph g = G("edge a1 a2\nedge a2 v\nvote v yes\n");
  VoteRouting r(g.num_agents());
  r.SetCast(g.Index("v"), Outcome::kYes);
  const AgentIndex hops[] = {g.Index("a2")};
  r.SetPath(g.Index("a1"), hops, Outcome::kYes, RouteState::kResolved);
  EXPECT_EQ(CheckGre(g, RoutingDistribution::Point(r)).verdict,
            Verdict::kViolated);
}

TEST(Lfe, BreadthFirstFig2Feedback) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  const LfeReport r = CheckLfe(g, Dist(MechanismId::kBfd, g));
  EXPECT_EQ(r.verdict.verdict, Verdict::kSatisfied);
  const auto a1 = std::find_if(r.feedback.begin(), r.feedback.end(),
                               [&](auto& f) { return f.agent == g.Index("a1"); });
  ASSERT_NE(a1, r.feedback.end());
  EXPECT_EQ(a1->held, Rational(1));
  EXPECT_EQ(a1->cast, Rational(0));
  ASSERT_EQ(a1->neighbors.size(), 1u);
  EXPECT_EQ(a1->neighbors[0].neighbor, g.Index("a4"));
  EXPECT_EQ(a1->neighbors[0].fraction, Rational(1));
  EXPECT_EQ(a1->neighbors[0].yes_share, Rational(1));
  const auto a6 = std::find_if(r.feedback.begin(), r.feedback.end(),
                               [&](auto& f) { return f.agent == g.Index("a6"); });
  ASSERT_NE(a6, r.feedback.end());
  EXPECT_EQ(a6->held, Rational(2));
  EXPECT_EQ(a6->cast, Rational(2));
}

TEST(Lfe, FractionsSumToOne) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kMup;
  for (int t = 0; t < 100; ++t) {
    cfg.seed = MixSeed(6, t);
    cfg.n_agents = 3 + t % 8;
    const PreferenceGraph g = RandomGraph(cfg);
    for (MechanismId id : {MechanismId::kGreedyCap, MechanismId::kFluid}) {
      const LfeReport r = CheckLfe(g, Dist(id, g));
      for (const auto& f : r.feedback) {
        Rational sent(0);
        for (const auto& n : f.neighbors) {
          sent += n.fraction;
          // Votes parked with a pending holder have no outcome yet.
          if (id == MechanismId::kFluid) {
            EXPECT_EQ(n.yes_share + n.no_share, Rational(1));
          } else {
            EXPECT_LE(n.yes_share + n.no_share, Rational(1));
          }
        }
        if (!f.neighbors.empty()) {
          EXPECT_EQ(sent * f.held + f.cast, f.held) << SerializeLdg(g);
        }
      }
    }
  }
}

TEST(Arbitrariness, Classifications) {
  const PreferenceGraph fig3 = GetFixture("fig3").graph;
  const PropertyVerdict f = ClassifyArbitrariness(Config(MechanismId::kFluid), fig3);
  EXPECT_EQ(f.property, Property::kArbitrary);
  ASSERT_TRUE(f.witness.has_value());
  ASSERT_EQ(f.witness->routings.size(), 2u);
  EXPECT_NE(WinnerOf(TallyFromRouting(fig3, f.witness->routings[0])),
            WinnerOf(TallyFromRouting(fig3, f.witness->routings[1])));

  const PreferenceGraph fig2 = GetFixture("fig2").graph;
  EXPECT_EQ(ClassifyArbitrariness(Config(MechanismId::kBfd), fig2).property,
            Property::kSd);
  EXPECT_EQ(ClassifyArbitrariness(Config(MechanismId::kLf),
                                  GetFixture("fig1").graph)
                .property,
            Property::kSd);

  const PreferenceGraph star = GetFixture("greedycap_star").graph;
  EXPECT_EQ(ClassifyArbitrariness(Config(MechanismId::kGreedyCap, 3), star).property,
            Property::kSdod);
  EXPECT_EQ(ClassifyArbitrariness(Config(MechanismId::kGreedyCap, 4), star).property,
            Property::kSd);
}

TEST(Arbitrariness, AsRequestedProperty) {
  const PreferenceGraph star = GetFixture("greedycap_star").graph;
  const PropertyVerdict c =
      ClassifyArbitrariness(Config(MechanismId::kGreedyCap, 3), star);
  EXPECT_EQ(ArbitrarinessAs(Property::kSd, c).verdict, Verdict::kViolated);
  EXPECT_EQ(ArbitrarinessAs(Property::kSdod, c).verdict, Verdict::kSatisfied);
  EXPECT_EQ(ArbitrarinessAs(Property::kNad, c).verdict, Verdict::kSatisfied);
  EXPECT_THROW(ArbitrarinessAs(Property::kRtd, c), Error);
}

TEST(Arbitrariness, EnumerationLimitIsInconclusive) {
  std::string text = "vote v yes\nvote w no\n";
  for (int i = 0; i < 4; ++i) {
    const std::string d = "d" + std::to_string(i);
    text += "edge " + d + " v\nedge " + d + " w\n";
  }
  const PreferenceGraph g = G(text);
  MechanismConfig cfg = Config(MechanismId::kFluid);
  cfg.enum_limit = 2;
  // The first two optima in canonical order already disagree.
  const PropertyVerdict v = ClassifyArbitrariness(cfg, g);
  EXPECT_TRUE(v.property == Property::kArbitrary ||
              v.verdict == Verdict::kInconclusive);
  const PreferenceGraph same = G("edge a v\nedge a w\nvote v yes\nvote w yes\n"
                                 "edge b v\nedge b w\n");
  cfg.enum_limit = 1;
  EXPECT_EQ(ClassifyArbitrariness(cfg, same).verdict, Verdict::kInconclusive);
}

TEST(Scenario, Fig4UnderFluid) {
  const Scenario s{GetFixture("fig4a").graph, GetFixture("fig4b").graph, "a1",
                   Outcome::kNo};
  const ScenarioReport r = RunScenario(Config(MechanismId::kFluid), s);
  EXPECT_EQ(r.verdict.verdict, Verdict::kViolated);
  EXPECT_EQ(r.share1, Rational(4, 7));
  EXPECT_EQ(r.share2, Rational(3, 7));
  EXPECT_TRUE(r.exact);
}

TEST(Scenario, PreconditionFailure) {
  const Scenario s{GetFixture("fig4a").graph, GetFixture("fig4b").graph, "a1",
                   Outcome::kYes};
  const ScenarioReport r = RunScenario(Config(MechanismId::kFluid), s);
  EXPECT_EQ(r.verdict.verdict, Verdict::kPreconditionFailed);
}

TEST(Scenario, KindMismatch) {
  const Scenario s{GetFixture("fig4a").graph, GetFixture("fig4b").graph, "a1",
                   Outcome::kNo};
  try {
    RunScenario(Config(MechanismId::kBfd), s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongKind);
  }
}

TEST(Scenario, OnlyTheChangedAgentMayDiffer) {
  const Scenario s{GetFixture("fig4a").graph, GetFixture("fig4b").graph, "a5",
                   Outcome::kNo};
  try {
    ValidateScenario(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kChangedAgentMismatch);
  }
}

TEST(Scenario, BreadthFirstRandomScenariosHold) {
  GenConfig cfg;
  cfg.kind = PreferenceKind::kMrp;
  const MechanismConfig mech = Config(MechanismId::kBfd);
  int run = 0;
  for (int t = 0; t < 500; ++t) {
    cfg.seed = MixSeed(21, t);
    cfg.n_agents = 3 + t % 8;
    const auto s = RandomScenario(cfg, t % 2 ? Outcome::kYes : Outcome::kNo, mech);
    if (!s) continue;
    ++run;
    EXPECT_NE(RunScenario(mech, *s).verdict.verdict, Verdict::kViolated)
        << SerializeLdg(s->round1) << "--\n" << SerializeLdg(s->round2);
  }
  EXPECT_GT(run, 100);
}

TEST(Power, Examples) {
  const PreferenceGraph fig4a = GetFixture("fig4a").graph;
  EXPECT_EQ(ReportPower(fig4a, Dist(MechanismId::kFluid, fig4a), std::nullopt)
                .max_power,
            3);
  const PreferenceGraph lone = G("vote v yes\n");
  EXPECT_EQ(ReportPower(lone, Dist(MechanismId::kLf, lone), std::nullopt).max_power,
            1);
  const PreferenceGraph star = GetFixture("greedycap_star").graph;
  const PowerReport p =
      ReportPower(star, Dist(MechanismId::kGreedyCap, star, 3), std::int64_t{3});
  EXPECT_LE(p.max_power, 3);
  ASSERT_TRUE(p.cap.has_value());
  EXPECT_EQ(p.cap->verdict, Verdict::kSatisfied);
  EXPECT_EQ(ReportPower(star, Dist(MechanismId::kGreedyCap, star, 4), std::int64_t{3})
                .cap->verdict,
            Verdict::kViolated);
}

TEST(ExpectedTotals, StarUnderTightCap) {
  const PreferenceGraph star = GetFixture("greedycap_star").graph;
  const auto e = ExpectedTotals(star, Dist(MechanismId::kGreedyCap, star, 3));
  EXPECT_EQ(e[0], Rational(3));
  EXPECT_EQ(e[1], Rational(0));
}

TEST(PropertyTokens, Parse) {
  EXPECT_EQ(Req("rtd").property, Property::kRtd);
  EXPECT_EQ(Req("pe1").property, Property::kPsiPe);
  EXPECT_EQ(Req("pe12").parameter, 12);
  EXPECT_EQ(Req("lp").property, Property::kLocalPred);
  EXPECT_FALSE(ParsePropertyToken("pe").has_value());
  EXPECT_FALSE(ParsePropertyToken("pe0").has_value());
  EXPECT_FALSE(ParsePropertyToken("pex").has_value());
  EXPECT_FALSE(ParsePropertyToken("fairness").has_value());
}

TEST(RunAudit, CollectsVerdictsInOrder) {
  const PreferenceGraph g = GetFixture("fig2").graph;
  const AuditReport r = RunAudit(Config(MechanismId::kDfd1), g,
                                 {Req("pe1"), Req("gre"), Req("rttr"),
                                  Req("sd"), Req("det"), Req("lfe")});
  ASSERT_EQ(r.verdicts.size(), 6u);
  EXPECT_EQ(r.verdicts[0].verdict, Verdict::kViolated);
  EXPECT_EQ(r.verdicts[1].verdict, Verdict::kSatisfied);
  EXPECT_EQ(r.verdicts[2].verdict, Verdict::kVacuous);
  EXPECT_EQ(r.verdicts[3].verdict, Verdict::kSatisfied);
  EXPECT_EQ(r.verdicts[4].verdict, Verdict::kSatisfied);
  EXPECT_TRUE(r.lfe.has_value());
  EXPECT_TRUE(r.any_violation());
}

TEST(RunAudit, LocalPredictabilityNeedsAScenario) {
  try {
    RunAudit(Config(MechanismId::kBfd), GetFixture("fig2").graph, {Req("lp")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Minimize, KeepsTheViolation) {
  // fig3 padded with bystanders still shows arbitrariness after shrinking.
  const PreferenceGraph g = G(
      "edge a1 a2\nedge a1 a3\nvote a2 yes\nvote a3 no\n"
      "edge b1 b2\nvote b2 yes\nagent c\nvote d no\n");
  const MechanismConfig cfg = Config(MechanismId::kFluid);
  const auto fails = [&](const PreferenceGraph& h) {
    return ClassifyArbitrariness(cfg, h).property == Property::kArbitrary;
  };
  ASSERT_TRUE(fails(g));
  const PreferenceGraph m = MinimizeGraph(g, fails);
  EXPECT_TRUE(fails(m));
  EXPECT_LE(m.num_agents(), 3);
  EXPECT_EQ(m.num_edges(), 2);
}

TEST(Minimize, ScenarioKeepsChangedAgent) {
  const Scenario s{GetFixture("fig4a").graph, GetFixture("fig4b").graph, "a1",
                   Outcome::kNo};
  const MechanismConfig cfg = Config(MechanismId::kFluid);
  const auto fails = [&](const Scenario& x) {
    return RunScenario(cfg, x).verdict.verdict == Verdict::kViolated;
  };
  const Scenario m = MinimizeScenario(s, fails);
  EXPECT_TRUE(fails(m));
  EXPECT_TRUE(m.round1.Find("a1").has_value());
  EXPECT_LE(m.round1.num_agents(), s.round1.num_agents());
}

}  // namespace
}  // namespace liquid
