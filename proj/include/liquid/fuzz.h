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

// Seeded fuzz campaigns: random instances, property checks, and minimized
// witnesses for every violation found.

#ifndef LIQUID_FUZZ_H_
#define LIQUID_FUZZ_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liquid/audit.h"
#include "liquid/gen.h"
#include "liquid/mechanisms.h"

namespace liquid {

struct FuzzConfig {
  MechanismConfig mechanism;
  GenConfig gen;  // gen.seed is the campaign seed
  std::int64_t trials = 100;
  std::vector<PropertyRequest> checks;
  bool minimize = true;
};

struct FuzzCounts {
  std::int64_t checked = 0;
  std::int64_t violated = 0;
  std::int64_t inconclusive = 0;
  std::int64_t skipped = 0;  // lp trials without a strictly-favoring change
};

struct FuzzFinding {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;  // generator seed of the trial
  std::string check;
  PropertyVerdict verdict;
  // Minimized failing input: a graph, or a scenario for lp.
  std::optional<PreferenceGraph> graph;
  std::optional<Scenario> scenario;
};

struct FuzzReport {
  std::int64_t trials = 0;
  std::map<std::string, FuzzCounts> counts;  // by check token
  std::vector<FuzzFinding> findings;         // first violation per check
  std::int64_t total_violations() const;
};

// Trial i uses generator seed MixSeed(gen.seed, i); GreedyCap draws with
// MixSeed(mechanism.seed, i). Throws kWrongKind when the generated kind or
// a check does not fit the mechanism.
FuzzReport RunFuzz(const FuzzConfig& cfg);

}  // namespace liquid

#endif  // LIQUID_FUZZ_H_
