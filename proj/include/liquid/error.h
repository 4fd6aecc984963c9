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

#ifndef LIQUID_ERROR_H_
#define LIQUID_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace liquid {

enum class ErrorCode {
  kSyntax,
  kInvalidId,
  kSelfLoop,
  kDuplicateEdge,
  kDuplicateRank,
  kRankMixing,
  kVoteAndDelegate,
  kConflictingVote,
  kUnknownAgent,
  kMixedRanking,
  kWrongKind,
  kNotDelegable,
  kRouteMismatch,
  kPathExplosion,
  kUnknownFixture,
  kChangedAgentMismatch,
  kInvalidArgument,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. `line()` is the 1-based
// source line for parser diagnostics and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  // The message without code and line decoration.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  int line_;
  std::string message_;
};

}  // namespace liquid

#endif  // LIQUID_ERROR_H_
