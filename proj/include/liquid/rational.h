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

#ifndef LIQUID_RATIONAL_H_
#define LIQUID_RATIONAL_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace liquid {

// Exact probabilities and shares.
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is one.
std::string RationalToString(const Rational& r);
double RationalToDouble(const Rational& r);

}  // namespace liquid

#endif  // LIQUID_RATIONAL_H_
