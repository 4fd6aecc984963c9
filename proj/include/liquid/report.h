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

// Text and machine-readable (JSON, sorted keys) documents for every command.

#ifndef LIQUID_REPORT_H_
#define LIQUID_REPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liquid/audit.h"
#include "liquid/fuzz.h"
#include "liquid/mechanisms.h"
#include "liquid/table1.h"

namespace liquid {

enum class OutputFormat { kText, kMachine };
std::optional<OutputFormat> ParseOutputFormat(std::string_view token);

std::string RenderTally(const PreferenceGraph& g, const MechanismConfig& cfg,
                        const MechanismOutput& out, OutputFormat format);
std::string RenderAudit(const PreferenceGraph& g, const MechanismConfig& cfg,
                        const AuditReport& report, OutputFormat format);
std::string RenderScenario(const Scenario& s, const MechanismConfig& cfg,
                           const ScenarioReport& report, OutputFormat format);

// One column of `compare`; `output` is empty when the kind does not fit.
struct CompareEntry {
  MechanismConfig config;
  std::string label;
  std::optional<AuditReport> report;
  std::string skipped_reason;
};
std::string RenderCompare(const PreferenceGraph& g,
                          const std::vector<CompareEntry>& entries,
                          OutputFormat format);

std::string RenderFuzz(const FuzzConfig& cfg, const FuzzReport& report,
                       OutputFormat format);
std::string RenderTable1(const std::vector<Table1Row>& rows,
                         OutputFormat format);
std::string RenderFixtures(const std::vector<std::filesystem::path>& files,
                           OutputFormat format);

// "a1 -> a2 -> a6 => no", "a1 -> v => pending" or "unresolved".
std::string FormatRoute(const PreferenceGraph& g, const VoteRouting& r,
                        AgentIndex a);

}  // namespace liquid

#endif  // LIQUID_REPORT_H_
