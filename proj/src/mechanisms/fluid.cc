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

#include "liquid/flow_opt.h"
#include "liquid/mechanisms.h"

namespace liquid {

FluidResult TallyFluid(const PreferenceGraph& g, std::int64_t enum_limit) {
  FluidResult out;
  out.solution = SolveExact(g, enum_limit);
  out.optimum = out.solution.optimum;
  out.truncated = out.solution.truncated;
  out.canonical = RoutingFromSelection(g, out.solution.canonical);
  out.optima.reserve(out.solution.optima.size());
  for (const Selection& s : out.solution.optima) {
    out.optima.push_back(RoutingFromSelection(g, s));
  }
  return out;
}

}  // namespace liquid
