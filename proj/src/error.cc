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

#include "liquid/error.h"

#include "liquid/rational.h"

namespace liquid {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDuplicateRank: return "DuplicateRank";
    case ErrorCode::kRankMixing: return "RankMixing";
    case ErrorCode::kVoteAndDelegate: return "VoteAndDelegate";
    case ErrorCode::kConflictingVote: return "ConflictingVote";
    case ErrorCode::kUnknownAgent: return "UnknownAgent";
    case ErrorCode::kMixedRanking: return "MixedRanking";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kNotDelegable: return "NotDelegable";
    case ErrorCode::kRouteMismatch: return "RouteMismatch";
    case ErrorCode::kPathExplosion: return "PathExplosion";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kChangedAgentMismatch: return "ChangedAgentMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string Describe(ErrorCode code, const std::string& message, int line) {
  std::string out(ErrorCodeName(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(Describe(code, message, line)),
      code_(code),
      line_(line),
      message_(message) {}

std::string RationalToString(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double RationalToDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace liquid
