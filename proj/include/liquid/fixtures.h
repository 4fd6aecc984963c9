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

// Named example graphs with executable expectations, plus the two-round
// local-predictability scenario built on fig4a/fig4b.

#ifndef LIQUID_FIXTURES_H_
#define LIQUID_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liquid/ldg_format.h"
#include "liquid/mechanisms.h"
#include "liquid/model.h"

namespace liquid {

// One mechanism run on a fixture and what it must produce. Unset fields are
// not checked. Paths list the full agent sequence starting at the origin.
struct FixtureExpectation {
  MechanismId mechanism = MechanismId::kBfd;
  std::int64_t cap = kDefaultCap;
  std::optional<std::int64_t> yes;
  std::optional<std::int64_t> no;
  std::optional<std::int64_t> unresolved;
  std::optional<std::int64_t> optimum;
  std::optional<std::int64_t> optima_count;
  std::vector<std::pair<std::string, std::vector<std::string>>> paths;
  // (property token, verdict name), e.g. ("pe1", "VIOLATED").
  std::vector<std::pair<std::string, std::string>> verdicts;
};

struct Fixture {
  std::string name;
  std::string description;
  PreferenceGraph graph;
  std::vector<FixtureExpectation> expected;
};

std::span<const std::string_view> FixtureNames();
// Throws kUnknownFixture.
Fixture GetFixture(std::string_view name);

// round1 = fig4a, round2 = fig4b, changed a1, outcome no.
inline constexpr std::string_view kScenarioFileName = "fig4.scenario";
inline constexpr std::string_view kTable1ManifestName = "table1.manifest";
ScenarioManifest Fig4ScenarioManifest();

// Writes `<name>.ldg` (and for "fig4" both rounds plus the scenario
// manifest; for "all" every fixture, the scenario and the table1
// manifest). Returns the files written in order. Throws kUnknownFixture.
std::vector<std::filesystem::path> EmitFixtures(
    std::string_view name, const std::filesystem::path& dir);

}  // namespace liquid

#endif  // LIQUID_FIXTURES_H_
