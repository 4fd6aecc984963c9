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

#include "liquid/ldg_format.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "liquid/error.h"

namespace liquid {
namespace {

// Splits `text` into lines, dropping comments, and calls fn(line_no, tokens)
// for every non-blank line.
template <typename Fn>
void ForEachDirective(std::string_view text, Fn&& fn) {
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!tokens.empty()) fn(line_no, tokens);
    if (end == text.size()) break;
  }
}

std::string Id(std::string_view token, int line) {
  if (!IsValidAgentId(token)) {
    throw Error(ErrorCode::kSyntax,
                "invalid agent id '" + std::string(token) + "'", line);
  }
  return std::string(token);
}

int Rank(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value <= 0) {
    throw Error(ErrorCode::kSyntax,
                "rank must be a positive integer, got '" +
                    std::string(token) + "'",
                line);
  }
  return value;
}

Outcome OutcomeToken(std::string_view token, int line) {
  auto outcome = ParseOutcome(token);
  if (!outcome) {
    throw Error(ErrorCode::kSyntax,
                "expected yes or no, got '" + std::string(token) + "'", line);
  }
  return *outcome;
}

}  // namespace

PreferenceGraph ParseLdg(std::string_view text) {
  GraphSpec spec;
  ForEachDirective(text, [&](int line, const std::vector<std::string_view>& t) {
    const std::string_view op = t[0];
    if (op == "agent" && t.size() == 2) {
      spec.agents.push_back(Id(t[1], line));
    } else if (op == "edge" && (t.size() == 3 || t.size() == 4)) {
      spec.edges.push_back({Id(t[1], line), Id(t[2], line),
                            t.size() == 4 ? Rank(t[3], line) : 0, line});
    } else if (op == "vote" && t.size() == 3) {
      spec.votes.push_back({Id(t[1], line), OutcomeToken(t[2], line), line});
    } else {
      throw Error(ErrorCode::kSyntax,
                  "unrecognized directive '" + std::string(op) + "' with " +
                      std::to_string(t.size() - 1) + " arguments",
                  line);
    }
  });
  return PreferenceGraph::FromSpec(spec);
}

std::string SerializeLdg(const PreferenceGraph& g) {
  const GraphSpec spec = g.ToSpec();
  std::string out;
  for (const auto& a : spec.agents) out += "agent " + a + "\n";
  for (const auto& e : spec.edges) {
    out += "edge " + e.src + " " + e.dst;
    if (e.rank > 0) out += " " + std::to_string(e.rank);
    out += "\n";
  }
  for (const auto& v : spec.votes) {
    out += "vote " + v.agent + " " + std::string(OutcomeName(v.outcome)) +
           "\n";
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path.string());
}

PreferenceGraph LoadLdgFile(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  try {
    return ParseLdg(text);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message(), e.line());
  }
}

ScenarioManifest ParseScenarioManifest(std::string_view text,
                                       const std::filesystem::path& base_dir) {
  ScenarioManifest m;
  bool seen[4] = {false, false, false, false};
  ForEachDirective(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t.size() != 2) {
      throw Error(ErrorCode::kSyntax, "expected '<key> <value>'", line);
    }
    const std::filesystem::path value{std::string(t[1])};
    if (t[0] == "round1") {
      m.round1 = value.is_absolute() ? value : base_dir / value;
      seen[0] = true;
    } else if (t[0] == "round2") {
      m.round2 = value.is_absolute() ? value : base_dir / value;
      seen[1] = true;
    } else if (t[0] == "changed") {
      m.changed = Id(t[1], line);
      seen[2] = true;
    } else if (t[0] == "outcome") {
      m.outcome = OutcomeToken(t[1], line);
      seen[3] = true;
    } else {
      throw Error(ErrorCode::kSyntax,
                  "unknown scenario key '" + std::string(t[0]) + "'", line);
    }
  });
  for (bool s : seen) {
    if (!s) {
      throw Error(ErrorCode::kSyntax,
                  "scenario needs round1, round2, changed and outcome");
    }
  }
  return m;
}

std::string SerializeScenarioManifest(const ScenarioManifest& m) {
  return "round1 " + m.round1.string() + "\nround2 " + m.round2.string() +
         "\nchanged " + m.changed + "\noutcome " +
         std::string(OutcomeName(m.outcome)) + "\n";
}

namespace {

std::filesystem::path Resolve(std::string_view name,
                              const std::filesystem::path& base_dir) {
  std::filesystem::path p{std::string(name)};
  return p.is_absolute() ? p : base_dir / p;
}

}  // namespace

Table1Manifest ParseTable1Manifest(std::string_view text,
                                   const std::filesystem::path& base_dir) {
  Table1Manifest m;
  bool have_scenario = false;
  ForEachDirective(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "fixture" && t.size() == 3) {
      m.fixtures.emplace_back(std::string(t[1]), Resolve(t[2], base_dir));
    } else if (t[0] == "scenario" && t.size() == 2) {
      m.scenario = Resolve(t[1], base_dir);
      have_scenario = true;
    } else {
      throw Error(ErrorCode::kSyntax,
                  "expected 'fixture <name> <file>' or 'scenario <file>'",
                  line);
    }
  });
  if (!have_scenario) {
    throw Error(ErrorCode::kSyntax, "manifest needs a scenario line");
  }
  return m;
}

std::string SerializeTable1Manifest(const Table1Manifest& m) {
  std::string out;
  for (const auto& [name, file] : m.fixtures) {
    out += "fixture " + name + " " + file.string() + "\n";
  }
  out += "scenario " + m.scenario.string() + "\n";
  return out;
}

}  // namespace liquid
