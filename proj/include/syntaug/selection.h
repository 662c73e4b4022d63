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

#ifndef SYNTAUG_SELECTION_H_
#define SYNTAUG_SELECTION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "syntaug/random.h"

namespace syntaug {

// How words are chosen for modification.
//  - kSyntaxAware: probability grows with dependency depth, scaled so that
//    about alpha * n words of an n-word sentence are picked.
//  - kUniform: every word is picked with the same fixed `rate`.
struct SelectionPolicy {
  enum class Kind { kSyntaxAware, kUniform };

  Kind kind = Kind::kSyntaxAware;
  double alpha = 0.1;
  double rate = 0.1;

  // Throws std::invalid_argument unless alpha > 0 and rate is in [0, 1].
  void Validate() const;
};

std::string ToString(SelectionPolicy::Kind kind);
SelectionPolicy::Kind ParsePolicyKind(const std::string& name);

// Per-token probabilities for one sentence and the mask sampled from them.
struct SelectionProfile {
  std::vector<double> q;        // depth scores, 0 at the root
  std::vector<double> p;        // softmax of q
  std::vector<double> p_final;  // length-compensated, clipped to [0, 1]
  std::vector<bool> mask;
  double alpha = 0.0;
  std::size_t clipped = 0;  // tokens whose alpha * p * n exceeded 1

  std::size_t size() const { return mask.size(); }
  std::size_t selected_count() const;
};

// q = 1 - 2^-(depth - 1). Throws std::invalid_argument for depth < 1.
// Strictly increasing in depth while depth <= 54; beyond that the double
// result saturates at 1.
std::vector<double> DepthScore(std::span<const int> depths);

// Max-shifted softmax. Throws std::invalid_argument on empty input.
std::vector<double> Normalize(std::span<const double> q);

struct LengthScaled {
  std::vector<double> values;
  std::size_t clipped = 0;
};

// min(1, alpha * p[i] * n). Throws std::invalid_argument for alpha <= 0.
LengthScaled LengthScale(std::span<const double> p, double alpha);

// Independent Bernoulli trial per token. Consumes exactly p_final.size()
// draws from `rng`, in token order.
std::vector<bool> SampleMask(std::span<const double> p_final, Rng& rng);

// Baseline: each of n tokens selected with probability `rate`. Consumes
// exactly n draws.
std::vector<bool> UniformMask(std::size_t n, double rate, Rng& rng);

// Full syntax-aware selection for one sentence.
SelectionProfile SyntaxAwareProfile(std::span<const int> depths, double alpha,
                                    Rng& rng);

// Selection under either policy. For kUniform the profile carries q = 0,
// p = 1/n and p_final = rate so downstream statistics stay comparable.
SelectionProfile Select(const SelectionPolicy& policy,
                        std::span<const int> depths, Rng& rng);

}  // namespace syntaug

#endif  // SYNTAUG_SELECTION_H_
