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

#ifndef SYNTAUG_AUGMENT_H_
#define SYNTAUG_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syntaug/frequency.h"
#include "syntaug/random.h"

namespace syntaug {

inline constexpr std::string_view kBlankToken = "<BLANK>";

enum class Operation { kBlanking, kDropout, kReplacement };

std::string ToString(Operation op);
Operation ParseOperation(const std::string& name);

// One augmented variant of a source sentence. All operations keep the token
// count, so the record stays positionally aligned with the original.
struct AugmentationRecord {
  Operation operation = Operation::kBlanking;
  std::vector<std::string> tokens_out;
  std::vector<bool> dropout_mask;  // true = zero this embedding in training
  std::vector<std::size_t> selected_positions;  // 1-based, increasing
  // Replacement only: selected tokens left as-is because they were out of
  // vocabulary or had no candidate. They are not in selected_positions.
  std::size_t unreplaced = 0;

  // Provenance, filled in by the corpus pipeline.
  std::uint64_t seed = 0;
  std::size_t ordinal = 0;
  std::size_t copy = 0;
};

// The functions below throw std::invalid_argument when tokens and mask
// differ in length.

AugmentationRecord ApplyBlanking(std::span<const std::string> tokens,
                                 const std::vector<bool>& mask);

// Tokens pass through; the mask is carried to the trainer as a sidecar.
AugmentationRecord ApplyDropout(std::span<const std::string> tokens,
                                const std::vector<bool>& mask);

// Swaps each selected token for a frequency-neighbour drawn from `table`.
// Draws one value from `rng` per replaced token, in token order.
AugmentationRecord ApplyReplacement(std::span<const std::string> tokens,
                                    const std::vector<bool>& mask,
                                    const FrequencyTable& table,
                                    const ReplacementPolicy& policy, Rng& rng);

}  // namespace syntaug

#endif  // SYNTAUG_AUGMENT_H_
