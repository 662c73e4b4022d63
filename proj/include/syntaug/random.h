// Copyright 2026 The Syntaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNTAUG_RANDOM_H_
#define SYNTAUG_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace syntaug {

// Deterministic random source. Draw-to-value conversions are done here
// rather than through <random> distributions so the produced values are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for one (seed, sentence, copy, epoch) tuple. Streams
  // do not depend on processing order, so parallel runs reproduce serial ones.
  static Rng ForUnit(std::uint64_t seed, std::uint64_t ordinal,
                     std::uint64_t copy, std::uint64_t epoch = 0);

  // Uniform double in [0, 1) with 53 random bits. Consumes one draw.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform index in [0, n). Consumes one draw. Requires n > 0.
  std::size_t Index(std::size_t n) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(engine_()) * n;
    return static_cast<std::size_t>(wide >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace syntaug

#endif  // SYNTAUG_RANDOM_H_
