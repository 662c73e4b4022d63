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

#include "syntaug/selection.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace syntaug {

void SelectionPolicy::Validate() const {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("alpha must be positive, got " +
                                std::to_string(alpha));
  }
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw std::invalid_argument("rate must lie in [0, 1], got " +
                                std::to_string(rate));
  }
}

std::string ToString(SelectionPolicy::Kind kind) {
  return kind == SelectionPolicy::Kind::kSyntaxAware ? "syntax" : "uniform";
}

SelectionPolicy::Kind ParsePolicyKind(const std::string& name) {
  if (name == "syntax") return SelectionPolicy::Kind::kSyntaxAware;
  if (name == "uniform") return SelectionPolicy::Kind::kUniform;
  throw std::invalid_argument("unknown selection policy: " + name);
}

std::size_t SelectionProfile::selected_count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

std::vector<double> DepthScore(std::span<const int> depths) {
  std::vector<double> q;
  q.reserve(depths.size());
  for (const int d : depths) {
    if (d < 1) {
      throw std::invalid_argument("depth must be >= 1, got " +
                                  std::to_string(d));
    }
    q.push_back(1.0 - std::ldexp(1.0, -(d - 1)));
  }
  return q;
}

std::vector<double> Normalize(std::span<const double> q) {
  if (q.empty()) throw std::invalid_argument("softmax of empty sequence");
  const double max = *std::max_element(q.begin(), q.end());
  std::vector<double> p(q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    p[i] = std::exp(q[i] - max);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

LengthScaled LengthScale(std::span<const double> p, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("alpha must be positive, got " +
                                std::to_string(alpha));
  }
  LengthScaled out;
  out.values.reserve(p.size());
  const double n = static_cast<double>(p.size());
  for (const double pi : p) {
    const double scaled = alpha * pi * n;
    if (scaled > 1.0) {
      ++out.clipped;
      out.values.push_back(1.0);
    } else {
      out.values.push_back(scaled);
    }
  }
  return out;
}

std::vector<bool> SampleMask(std::span<const double> p_final, Rng& rng) {
  std::vector<bool> mask(p_final.size());
  for (std::size_t i = 0; i < p_final.size(); ++i) {
    mask[i] = rng.Uniform() < p_final[i];
  }
  return mask;
}

std::vector<bool> UniformMask(std::size_t n, double rate, Rng& rng) {
  std::vector<bool> mask(n);
  for (std::size_t i = 0; i < n; ++i) mask[i] = rng.Uniform() < rate;
  return mask;
}

SelectionProfile SyntaxAwareProfile(std::span<const int> depths, double alpha,
                                    Rng& rng) {
  SelectionProfile profile;
  profile.alpha = alpha;
  profile.q = DepthScore(depths);
  profile.p = Normalize(profile.q);
  LengthScaled scaled = LengthScale(profile.p, alpha);
  profile.p_final = std::move(scaled.values);
  profile.clipped = scaled.clipped;
  profile.mask = SampleMask(profile.p_final, rng);
  return profile;
}

SelectionProfile Select(const SelectionPolicy& policy,
                        std::span<const int> depths, Rng& rng) {
  if (policy.kind == SelectionPolicy::Kind::kSyntaxAware) {
    return SyntaxAwareProfile(depths, policy.alpha, rng);
  }
  const std::size_t n = depths.size();
  SelectionProfile profile;
  profile.alpha = policy.alpha;
  profile.q.assign(n, 0.0);
  profile.p.assign(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  profile.p_final.assign(n, policy.rate);
  profile.mask = UniformMask(n, policy.rate, rng);
  return profile;
}

}  // namespace syntaug
