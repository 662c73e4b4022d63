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

#include "syntaug/random.h"

namespace syntaug {
namespace {

// splitmix64 finalizer.
std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::ForUnit(std::uint64_t seed, std::uint64_t ordinal, std::uint64_t copy,
                 std::uint64_t epoch) {
  std::uint64_t h = Mix(seed);
  h = Mix(h ^ ordinal);
  h = Mix(h ^ copy);
  h = Mix(h ^ epoch);
  return Rng(h);
}

}  // namespace syntaug
