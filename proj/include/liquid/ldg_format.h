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

// Line-oriented text format for preference graphs (.ldg):
//
//   # comment
//   agent <id>
//   edge <src> <dst> [<rank>]
//   vote <id> <yes|no>
//
// Ids used by `edge` or `vote` are declared implicitly. Canonical output
// lists agents, then edges, then votes, each block sorted by id.

#ifndef LIQUID_LDG_FORMAT_H_
#define LIQUID_LDG_FORMAT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liquid/model.h"

namespace liquid {

// Throws liquid::Error carrying the 1-based line of the offending directive.
PreferenceGraph ParseLdg(std::string_view text);
std::string SerializeLdg(const PreferenceGraph& g);

PreferenceGraph LoadLdgFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

// Two-round scenario manifest:
//
//   round1 <file.ldg>
//   round2 <file.ldg>
//   changed <id>
//   outcome <yes|no>
//
// Relative file names resolve against the manifest's directory.
struct ScenarioManifest {
  std::filesystem::path round1;
  std::filesystem::path round2;
  std::string changed;
  Outcome outcome = Outcome::kYes;
};
ScenarioManifest ParseScenarioManifest(std::string_view text,
                                       const std::filesystem::path& base_dir);
std::string SerializeScenarioManifest(const ScenarioManifest& manifest);

// table1 input: one `fixture <name> <file>` line per graph and one
// `scenario <file>` line. Relative names resolve against base_dir.
struct Table1Manifest {
  std::vector<std::pair<std::string, std::filesystem::path>> fixtures;
  std::filesystem::path scenario;
};
Table1Manifest ParseTable1Manifest(std::string_view text,
                                   const std::filesystem::path& base_dir);
std::string SerializeTable1Manifest(const Table1Manifest& manifest);

}  // namespace liquid

#endif  // LIQUID_LDG_FORMAT_H_
