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

#include "liquid/fuzz.h"

#include "liquid/error.h"
#include "liquid/random.h"

namespace liquid {

std::int64_t FuzzReport::total_violations() const {
  std::int64_t total = 0;
  for (const auto& [token, c] : counts) total += c.violated;
  return total;
}

FuzzReport RunFuzz(const FuzzConfig& cfg) {
  ValidateGenConfig(cfg.gen);
  const MechanismInfo& info = GetMechanismInfo(cfg.mechanism.id);
  const PreferenceKind kind = cfg.gen.kind;
  const bool kind_ok = info.kind == PreferenceKind::kMup
                           ? kind != PreferenceKind::kMrp
                           : kind == info.kind;
  if (!kind_ok) {
    throw Error(ErrorCode::kWrongKind,
                std::string(info.display) + " cannot take " +
                    std::string(PreferenceKindName(kind)) + " input");
  }
  for (const auto& check : cfg.checks) {
    if (check.property == Property::kRttr && kind != PreferenceKind::kMrp) {
      throw Error(ErrorCode::kWrongKind, "rttr needs MRP input");
    }
  }

  FuzzReport report;
  report.trials = cfg.trials;
  for (const auto& check : cfg.checks) report.counts[check.token];
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    GenConfig gen = cfg.gen;
    gen.seed = MixSeed(cfg.gen.seed, static_cast<std::uint64_t>(trial));
    MechanismConfig mech = cfg.mechanism;
    mech.seed = MixSeed(cfg.mechanism.seed, static_cast<std::uint64_t>(trial));
    const PreferenceGraph g = RandomGraph(gen);
    std::optional<MechanismOutput> out;

    for (const auto& check : cfg.checks) {
      FuzzCounts& counts = report.counts[check.token];
      const bool first = counts.violated == 0;
      if (check.property == Property::kLocalPred) {
        const Outcome favor = trial % 2 ? Outcome::kYes : Outcome::kNo;
        const auto scenario = RandomScenario(gen, favor, mech);
        if (!scenario) {
          ++counts.skipped;
          continue;
        }
        ++counts.checked;
        const ScenarioReport r = RunScenario(mech, *scenario);
        if (r.verdict.verdict == Verdict::kInconclusive) ++counts.inconclusive;
        if (r.verdict.verdict != Verdict::kViolated) continue;
        ++counts.violated;
        if (!first) continue;
        FuzzFinding f{trial, gen.seed, check.token, r.verdict, {}, *scenario};
        if (cfg.minimize) {
          f.scenario = MinimizeScenario(*scenario, [&](const Scenario& s) {
            return RunScenario(mech, s).verdict.verdict == Verdict::kViolated;
          });
          f.verdict = RunScenario(mech, *f.scenario).verdict;
        }
        report.findings.push_back(std::move(f));
        continue;
      }

      if (!out) out = RunMechanism(mech, g);
      ++counts.checked;
      const PropertyVerdict v = CheckProperty(mech, g, *out, check);
      if (v.verdict == Verdict::kInconclusive) ++counts.inconclusive;
      if (v.verdict != Verdict::kViolated) continue;
      ++counts.violated;
      if (!first) continue;
      FuzzFinding f{trial, gen.seed, check.token, v, g, {}};
      if (cfg.minimize) {
        const auto fails = [&](const PreferenceGraph& h) {
          if (!AcceptsGraph(mech.id, h)) return false;
          const MechanismOutput o = RunMechanism(mech, h);
          return CheckProperty(mech, h, o, check).verdict == Verdict::kViolated;
        };
        f.graph = MinimizeGraph(g, fails);
        const MechanismOutput o = RunMechanism(mech, *f.graph);
        f.verdict = CheckProperty(mech, *f.graph, o, check);
      }
      report.findings.push_back(std::move(f));
    }
  }
  return report;
}

}  // namespace liquid
