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

// Regenerates the property matrix of the five mechanisms from runs over the
// fixture suite, the fig4 scenario and seeded local-predictability fuzzing.

#ifndef LIQUID_TABLE1_H_
#define LIQUID_TABLE1_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liquid/gen.h"
#include "liquid/model.h"

namespace liquid {

inline constexpr std::array<std::string_view, 9> kTable1Columns = {
    "Preferences",   "Limit Power",  "Outcomes",
    "Cycles",        "Right to Delegate", "Right to Top Rank",
    "Explainability", "Locally Predictable", "Running Time",
};

struct Table1Row {
  std::string mechanism;  // display name
  std::array<std::string, 9> cells;
  std::vector<std::string> notes;  // evidence behind the cells
};

struct Table1Inputs {
  std::vector<std::pair<std::string, PreferenceGraph>> fixtures;
  Scenario scenario;  // the two-round fluid example
  std::int64_t lp_trials = 300;
  std::uint64_t seed = 1;
};

// The built-in fixtures plus fig2 with ranks stripped (an unranked cycle
// probe for the unranked mechanisms).
Table1Inputs DefaultTable1Inputs();
// Adds the stripped fig2 probe to fixtures loaded from a manifest.
void AddDerivedProbes(Table1Inputs& inputs);

std::vector<Table1Row> BuildTable1(const Table1Inputs& inputs);

}  // namespace liquid

#endif  // LIQUID_TABLE1_H_
