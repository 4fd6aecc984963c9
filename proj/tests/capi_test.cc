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

// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <string>

#include "liquid_tally.h"

namespace {

struct Graph {
  lqt_graph* g = nullptr;
  ~Graph() { lqt_graph_free(g); }
};
struct Options {
  lqt_options* o = lqt_options_new();
  ~Options() { lqt_options_free(o); }
};
struct Report {
  lqt_report* r = nullptr;
  ~Report() { lqt_report_free(r); }
  std::string text() const { return lqt_report_text(r); }
};

constexpr const char* kFig2 =
    "edge a1 a2 1\nedge a1 a4 2\nedge a2 a3 1\nedge a2 a6 2\n"
    "edge a3 a1 1\nedge a3 a5 2\nvote a4 yes\nvote a5 yes\nvote a6 no\n";

TEST(CApi, ParseAndTally) {
  Graph g;
  ASSERT_EQ(lqt_graph_parse(kFig2, &g.g), LQT_OK);
  EXPECT_EQ(lqt_graph_agent_count(g.g), 6u);
  Options o;
  ASSERT_EQ(lqt_options_set_mechanism(o.o, "bfd"), LQT_OK);
  Report r;
  ASSERT_EQ(lqt_tally(g.g, o.o, &r.r), LQT_OK);
  int64_t yes = 0, no = 0, unresolved = -1;
  ASSERT_EQ(lqt_report_totals(r.r, &yes, &no, &unresolved), LQT_OK);
  EXPECT_EQ(yes, 4);
  EXPECT_EQ(no, 2);
  EXPECT_EQ(unresolved, 0);
  EXPECT_NE(r.text().find("a1: a1 -> a4 => yes"), std::string::npos);
}

TEST(CApi, ParseErrorsReportLine) {
  Graph g;
  EXPECT_EQ(lqt_graph_parse("agent a1\nedge a1 a1\n", &g.g), LQT_ERR_SELF_LOOP);
  EXPECT_EQ(g.g, nullptr);
  EXPECT_EQ(lqt_last_error_line(), 2);
  EXPECT_NE(std::string(lqt_last_error()).find("self-loop"), std::string::npos);
  EXPECT_STREQ(lqt_status_name(LQT_ERR_SELF_LOOP), "SelfLoop");
  EXPECT_EQ(lqt_graph_parse("vote a1 yes\nedge a1 a2\n", &g.g),
            LQT_ERR_VOTE_AND_DELEGATE);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(lqt_graph_parse(nullptr, nullptr), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_tally(nullptr, nullptr, nullptr), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_report_violations(nullptr), 0);
  EXPECT_STREQ(lqt_report_text(nullptr), "");
  lqt_graph_free(nullptr);
  lqt_report_free(nullptr);
  lqt_options_free(nullptr);
}

TEST(CApi, OptionValidation) {
  Options o;
  EXPECT_EQ(lqt_options_set_mechanism(o.o, "borda"), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_options_set_mechanism(o.o, "greedycap(C=2)"), LQT_OK);
  EXPECT_EQ(lqt_options_set_mechanism(o.o, "bfd(C=2)"), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_options_set_mechanism(o.o, "greedycap(C=x)"),
            LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_options_set_format(o.o, "yaml"), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_options_set_properties(o.o, "rtd,bogus"), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_options_set_properties(o.o, "rtd, pe2"), LQT_OK);
  EXPECT_EQ(lqt_options_set_cap(o.o, 0), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_options_set_kind(o.o, "xyz"), LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_options_set_kind(o.o, "mup"), LQT_OK);
  EXPECT_EQ(lqt_options_set_mechanisms(o.o, ""), LQT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, AuditCountsViolations) {
  Graph g;
  ASSERT_EQ(lqt_graph_fixture("fig2", &g.g), LQT_OK);
  Options o;
  lqt_options_set_mechanism(o.o, "dfd1");
  lqt_options_set_properties(o.o, "pe1,gre");
  Report r;
  ASSERT_EQ(lqt_audit(g.g, o.o, &r.r), LQT_OK);
  EXPECT_EQ(lqt_report_violations(r.r), 1);
}

TEST(CApi, AuditWithoutPropertiesFails) {
  Graph g;
  ASSERT_EQ(lqt_graph_fixture("fig2", &g.g), LQT_OK);
  Options o;
  Report r;
  EXPECT_EQ(lqt_audit(g.g, o.o, &r.r), LQT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, WrongKind) {
  Graph g;
  ASSERT_EQ(lqt_graph_fixture("fig3", &g.g), LQT_OK);
  Options o;
  lqt_options_set_mechanism(o.o, "bfd");
  Report r;
  EXPECT_EQ(lqt_tally(g.g, o.o, &r.r), LQT_ERR_WRONG_KIND);
  EXPECT_EQ(r.r, nullptr);
}

TEST(CApi, Scenario) {
  Graph a, b;
  ASSERT_EQ(lqt_graph_fixture("fig4a", &a.g), LQT_OK);
  ASSERT_EQ(lqt_graph_fixture("fig4b", &b.g), LQT_OK);
  Options o;
  lqt_options_set_mechanism(o.o, "fluid");
  lqt_options_set_format(o.o, "machine");
  Report r;
  ASSERT_EQ(lqt_scenario(a.g, b.g, "a1", "no", o.o, &r.r), LQT_OK);
  EXPECT_EQ(lqt_report_violations(r.r), 1);
  EXPECT_NE(r.text().find("\"share_round2\": \"3/7\""), std::string::npos);
  Report bad;
  EXPECT_EQ(lqt_scenario(a.g, b.g, "a1", "maybe", o.o, &bad.r),
            LQT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lqt_scenario(a.g, b.g, "a5", "no", o.o, &bad.r),
            LQT_ERR_CHANGED_AGENT_MISMATCH);
}

TEST(CApi, CompareMarksIncompatible) {
  Graph g;
  ASSERT_EQ(lqt_graph_fixture("fig3", &g.g), LQT_OK);
  Options o;
  ASSERT_EQ(lqt_options_set_mechanisms(o.o, "fluid,greedycap(C=3),bfd"), LQT_OK);
  Report r;
  ASSERT_EQ(lqt_compare(g.g, o.o, &r.r), LQT_OK);
  EXPECT_NE(r.text().find("bfd: N/A"), std::string::npos);
  EXPECT_NE(r.text().find("outcome divergence"), std::string::npos);
}

TEST(CApi, SerializeRoundTrip) {
  Graph g;
  ASSERT_EQ(lqt_graph_parse(kFig2, &g.g), LQT_OK);
  char* text = nullptr;
  ASSERT_EQ(lqt_graph_serialize(g.g, &text), LQT_OK);
  Graph back;
  ASSERT_EQ(lqt_graph_parse(text, &back.g), LQT_OK);
  char* again = nullptr;
  ASSERT_EQ(lqt_graph_serialize(back.g, &again), LQT_OK);
  EXPECT_STREQ(text, again);
  lqt_string_free(text);
  lqt_string_free(again);
}

TEST(CApi, DeterministicMachineOutput) {
  for (const char* mech : {"lf", "bfd", "dfd1", "dfd2", "greedycap", "fluid"}) {
    for (const char* fixture : {"fig1", "fig2", "fig3", "fig4a", "greedycap_star"}) {
      Graph g;
      ASSERT_EQ(lqt_graph_fixture(fixture, &g.g), LQT_OK);
      Options o;
      lqt_options_set_mechanism(o.o, mech);
      lqt_options_set_format(o.o, "machine");
      lqt_options_set_seed(o.o, 99);
      Report r1, r2;
      const lqt_status s1 = lqt_tally(g.g, o.o, &r1.r);
      const lqt_status s2 = lqt_tally(g.g, o.o, &r2.r);
      ASSERT_EQ(s1, s2);
      if (s1 == LQT_OK) {
        EXPECT_EQ(r1.text(), r2.text()) << mech << " " << fixture;
      }
    }
  }
}

TEST(CApi, FuzzAndTable) {
  Options o;
  lqt_options_set_mechanism(o.o, "greedycap");
  lqt_options_set_properties(o.o, "cp");
  lqt_options_set_trials(o.o, 50);
  Report r;
  ASSERT_EQ(lqt_fuzz(o.o, &r.r), LQT_OK);
  EXPECT_EQ(lqt_report_violations(r.r), 0);
  Options t;
  lqt_options_set_lp_trials(t.o, 10);
  Report table;
  ASSERT_EQ(lqt_table1(nullptr, t.o, &table.r), LQT_OK);
  EXPECT_NE(table.text().find("GreedyCap"), std::string::npos);
  EXPECT_EQ(lqt_report_totals(table.r, nullptr, nullptr, nullptr),
            LQT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, UnknownFixture) {
  Graph g;
  EXPECT_EQ(lqt_graph_fixture("fig9", &g.g), LQT_ERR_UNKNOWN_FIXTURE);
  Options o;
  Report r;
  EXPECT_EQ(lqt_fixtures_emit("fig9", "/tmp", o.o, &r.r), LQT_ERR_UNKNOWN_FIXTURE);
}

}  // namespace
