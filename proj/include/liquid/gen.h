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

// Seeded random preference graphs and two-round scenarios for fuzzing.

#ifndef LIQUID_GEN_H_
#define LIQUID_GEN_H_

#include <cstdint>
#include <optional>
#include <string>

#include "liquid/mechanisms.h"
#include "liquid/model.h"

namespace liquid {

struct GenConfig {
  PreferenceKind kind = PreferenceKind::kMup;
  int n_agents = 8;
  double voter_fraction = 0.3;  // in (0, 1]
  // Chance of each out-edge beyond the first (MRP/MUP).
  double edge_density = 0.3;
  int max_out_degree = 3;
  std::uint64_t seed = 0;
  double abstain_probability = 0.1;
  // Share of samples that get a forced delegation cycle.
  double cycle_bias = 0.25;
  // Delegators approve voters only (one-hop proxy model).
  bool proxy_only = false;
};

// Throws kInvalidArgument for out-of-range fields.
void ValidateGenConfig(const GenConfig& cfg);

// Deterministic under cfg.seed. Ids are zero-padded ("a01", ...), so id
// order matches creation order.
PreferenceGraph RandomGraph(const GenConfig& cfg);

// Two rounds that differ only in the preferences of `changed`.
struct Scenario {
  PreferenceGraph round1;
  PreferenceGraph round2;
  std::string changed;
  Outcome outcome = Outcome::kYes;
};

// Generates round 1 from cfg and looks for an agent whose new delegation
// set strictly favors `favor` under the round-1 ratings of `mechanism`.
// nullopt when no such change exists in the sample.
std::optional<Scenario> RandomScenario(const GenConfig& cfg, Outcome favor,
                                       const MechanismConfig& mechanism);

}  // namespace liquid

#endif  // LIQUID_GEN_H_
