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

#ifndef LIQUID_RANDOM_H_
#define LIQUID_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace liquid {

// Seeded generator with platform-independent bounded draws (the standard
// distributions are implementation-defined, which would break
// reproducibility across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, n); n must be positive.
  std::uint64_t UniformBelow(std::uint64_t n);
  // Uniform in [0, 1).
  double UniformDouble() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  bool Bernoulli(double p) { return UniformDouble() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[UniformBelow(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent stream seed (splitmix64 finalizer).
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace liquid

#endif  // LIQUID_RANDOM_H_
