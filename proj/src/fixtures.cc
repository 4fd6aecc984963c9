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

#include "liquid/fixtures.h"

#include <array>

#include "liquid/error.h"

namespace liquid {
namespace {

using Path = std::vector<std::string>;

constexpr std::array<std::string_view, 9> kNames = {
    "fig1",          "fig2",          "fig3",
    "fig4a",         "fig4b",         "thm31_pair",
    "bfd_rttr_witness", "dfd2_rttr_witness", "greedycap_star",
};

FixtureExpectation Expect(MechanismId id) {
  FixtureExpectation e;
  e.mechanism = id;
  return e;
}

FixtureExpectation Totals(MechanismId id, std::int64_t yes, std::int64_t no,
                          std::int64_t unresolved) {
  FixtureExpectation e = Expect(id);
  e.yes = yes;
  e.no = no;
  e.unresolved = unresolved;
  return e;
}

Fixture Fig1() {
  Fixture f{"fig1", "three-agent delegation cycle without voters",
            ParseLdg("edge a1 a2\nedge a2 a3\nedge a3 a1\n"), {}};
  auto lf = Totals(MechanismId::kLf, 0, 0, 3);
  lf.verdicts = {{"rtd", "VACUOUS"}, {"gre", "SATISFIED"}};
  f.expected.push_back(lf);
  return f;
}

Fixture Fig2() {
  Fixture f{"fig2", "ranked cycle a1->a2->a3->a1 with voter second choices",
            ParseLdg("edge a1 a2 1\nedge a1 a4 2\n"
                     "edge a2 a3 1\nedge a2 a6 2\n"
                     "edge a3 a1 1\nedge a3 a5 2\n"
                     "vote a4 yes\nvote a5 yes\nvote a6 no\n"),
            {}};
  auto bfd = Totals(MechanismId::kBfd, 4, 2, 0);
  bfd.paths = {{"a1", Path{"a1", "a4"}},
               {"a2", Path{"a2", "a6"}},
               {"a3", Path{"a3", "a5"}}};
  bfd.verdicts = {{"pe1", "SATISFIED"}, {"sd", "SATISFIED"},
                  {"rtd", "SATISFIED"}};
  f.expected.push_back(bfd);

  auto dfd1 = Totals(MechanismId::kDfd1, 4, 2, 0);
  dfd1.paths = {{"a1", Path{"a1", "a2", "a3", "a5"}},
                {"a2", Path{"a2", "a3", "a1", "a4"}},
                {"a3", Path{"a3", "a1", "a2", "a6"}}};
  dfd1.verdicts = {{"pe1", "VIOLATED"}, {"gre", "SATISFIED"},
                   {"rttr", "VACUOUS"}};
  f.expected.push_back(dfd1);

  auto dfd2 = Totals(MechanismId::kDfd2, 4, 2, 0);
  dfd2.paths = {{"a1", Path{"a1", "a2", "a6"}},
                {"a2", Path{"a2", "a3", "a5"}},
                {"a3", Path{"a3", "a1", "a4"}}};
  dfd2.verdicts = {{"pe1", "VIOLATED"}};
  f.expected.push_back(dfd2);
  return f;
}

Fixture Fig3() {
  Fixture f{"fig3", "a1 approves a yes voter and a no voter",
            ParseLdg("edge a1 a2\nedge a1 a3\nvote a2 yes\nvote a3 no\n"),
            {}};
  auto fluid = Expect(MechanismId::kFluid);
  fluid.optimum = 2;
  fluid.optima_count = 2;
  fluid.verdicts = {{"nad", "VIOLATED"}, {"rtd", "SATISFIED"},
                    {"pe1", "SATISFIED"}};
  f.expected.push_back(fluid);
  return f;
}

constexpr std::string_view kFig4aText =
    "agent a4\n"
    "edge a1 a2\nedge a3 a2\nedge a3 a7\nedge a5 a1\nedge a6 a7\n"
    "vote a2 yes\nvote a4 no\nvote a7 no\n";

constexpr std::string_view kFig4bText =
    "agent a4\n"
    "edge a1 a3\nedge a3 a2\nedge a3 a7\nedge a5 a1\nedge a6 a7\n"
    "vote a2 yes\nvote a4 no\nvote a7 no\n";

Fixture Fig4a() {
  Fixture f{"fig4a", "first round of the local-predictability example",
            ParseLdg(kFig4aText), {}};
  auto fluid = Totals(MechanismId::kFluid, 3, 4, 0);
  fluid.optimum = 3;
  fluid.optima_count = 1;
  fluid.paths = {{"a3", Path{"a3", "a7"}}};
  fluid.verdicts = {{"rtd", "SATISFIED"}};
  f.expected.push_back(fluid);
  return f;
}

Fixture Fig4b() {
  Fixture f{"fig4b", "second round: a1 now delegates to a3",
            ParseLdg(kFig4bText), {}};
  auto fluid = Totals(MechanismId::kFluid, 4, 3, 0);
  fluid.optimum = 4;
  fluid.optima_count = 1;
  fluid.paths = {{"a3", Path{"a3", "a2"}}};
  f.expected.push_back(fluid);
  return f;
}

Fixture CappedPair() {
  Fixture f{"thm31_pair", "a1 approves the single voter a2",
            ParseLdg("edge a1 a2\nvote a2 yes\n"), {}};
  auto capped = Totals(MechanismId::kGreedyCap, 1, 0, 1);
  capped.cap = 1;
  capped.verdicts = {{"rtd", "VIOLATED"}, {"cp", "SATISFIED"}};
  f.expected.push_back(capped);
  auto roomy = Totals(MechanismId::kGreedyCap, 2, 0, 0);
  roomy.cap = 2;
  roomy.verdicts = {{"rtd", "SATISFIED"}};
  f.expected.push_back(roomy);
  return f;
}

Fixture BfdRttrWitness() {
  Fixture f{"bfd_rttr_witness",
            "a1 ranks a2 (leading to a no voter) above the yes voter v1",
            ParseLdg("edge a1 a2 1\nedge a1 v1 2\nedge a2 v2 1\n"
                     "vote v1 yes\nvote v2 no\n"),
            {}};
  auto bfd = Expect(MechanismId::kBfd);
  bfd.paths = {{"a1", Path{"a1", "v1"}}};
  bfd.verdicts = {{"rttr", "VIOLATED"}};
  f.expected.push_back(bfd);
  auto dfd1 = Expect(MechanismId::kDfd1);
  dfd1.paths = {{"a1", Path{"a1", "a2", "v2"}}};
  dfd1.verdicts = {{"rttr", "SATISFIED"}};
  f.expected.push_back(dfd1);
  return f;
}

Fixture Dfd2RttrWitness() {
  Fixture f{"dfd2_rttr_witness",
            "shortest path from a1's top neighbor skips a2's top choice",
            ParseLdg("edge a1 a2 1\nedge a2 a3 1\nedge a2 v2 2\n"
                     "edge a3 v3 1\nvote v2 no\nvote v3 yes\n"),
            {}};
  auto dfd2 = Expect(MechanismId::kDfd2);
  dfd2.paths = {{"a1", Path{"a1", "a2", "v2"}}};
  dfd2.verdicts = {{"rttr", "VIOLATED"}};
  f.expected.push_back(dfd2);
  auto dfd1 = Expect(MechanismId::kDfd1);
  dfd1.paths = {{"a1", Path{"a1", "a2", "a3", "v3"}}};
  dfd1.verdicts = {{"rttr", "SATISFIED"}};
  f.expected.push_back(dfd1);
  return f;
}

Fixture GreedyCapStar() {
  Fixture f{"greedycap_star", "a1, a2 and a3 all approve the yes voter v",
            ParseLdg("edge a1 v\nedge a2 v\nedge a3 v\nvote v yes\n"), {}};
  auto roomy = Totals(MechanismId::kGreedyCap, 4, 0, 0);
  roomy.cap = 4;
  roomy.verdicts = {{"sd", "SATISFIED"}};
  f.expected.push_back(roomy);
  auto capped = Totals(MechanismId::kGreedyCap, 3, 0, 1);
  capped.cap = 3;
  capped.verdicts = {{"sdod", "SATISFIED"}, {"sd", "VIOLATED"},
                     {"cp", "SATISFIED"}, {"rtd", "VIOLATED"}};
  f.expected.push_back(capped);
  return f;
}

}  // namespace

std::span<const std::string_view> FixtureNames() { return kNames; }

Fixture GetFixture(std::string_view name) {
  if (name == "fig1") return Fig1();
  if (name == "fig2") return Fig2();
  if (name == "fig3") return Fig3();
  if (name == "fig4a") return Fig4a();
  if (name == "fig4b") return Fig4b();
  if (name == "thm31_pair") return CappedPair();
  if (name == "bfd_rttr_witness") return BfdRttrWitness();
  if (name == "dfd2_rttr_witness") return Dfd2RttrWitness();
  if (name == "greedycap_star") return GreedyCapStar();
  throw Error(ErrorCode::kUnknownFixture,
              "unknown fixture '" + std::string(name) + "'");
}

ScenarioManifest Fig4ScenarioManifest() {
  return ScenarioManifest{"fig4a.ldg", "fig4b.ldg", "a1", Outcome::kNo};
}

std::vector<std::filesystem::path> EmitFixtures(
    std::string_view name, const std::filesystem::path& dir) {
  std::vector<std::string_view> graphs;
  bool scenario = false;
  bool manifest = false;
  if (name == "all") {
    graphs.assign(kNames.begin(), kNames.end());
    scenario = manifest = true;
  } else if (name == "fig4") {
    graphs = {"fig4a", "fig4b"};
    scenario = true;
  } else {
    GetFixture(name);  // validates the name
    graphs = {name};
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string());

  std::vector<std::filesystem::path> written;
  Table1Manifest table;
  for (std::string_view g : graphs) {
    const std::string file = std::string(g) + ".ldg";
    WriteTextFile(dir / file, SerializeLdg(GetFixture(g).graph));
    written.push_back(dir / file);
    table.fixtures.emplace_back(std::string(g), file);
  }
  if (scenario) {
    WriteTextFile(dir / kScenarioFileName,
                  SerializeScenarioManifest(Fig4ScenarioManifest()));
    written.push_back(dir / kScenarioFileName);
  }
  if (manifest) {
    table.scenario = kScenarioFileName;
    WriteTextFile(dir / kTable1ManifestName, SerializeTable1Manifest(table));
    written.push_back(dir / kTable1ManifestName);
  }
  return written;
}

}  // namespace liquid
