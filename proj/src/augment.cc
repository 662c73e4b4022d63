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

#include "syntaug/augment.h"

#include <stdexcept>

#include "syntaug/errors.h"

namespace syntaug {
namespace {

void CheckLengths(std::span<const std::string> tokens,
                  const std::vector<bool>& mask) {
  if (tokens.size() != mask.size()) {
    throw std::invalid_argument(
        "mask length " + std::to_string(mask.size()) +
        " does not match token count " + std::to_string(tokens.size()));
  }
}

AugmentationRecord Passthrough(Operation op,
                               std::span<const std::string> tokens) {
  AugmentationRecord record;
  record.operation = op;
  record.tokens_out.assign(tokens.begin(), tokens.end());
  record.dropout_mask.assign(tokens.size(), false);
  return record;
}

}  // namespace

std::string ToString(Operation op) {
  switch (op) {
    case Operation::kBlanking:
      return "blanking";
    case Operation::kDropout:
      return "dropout";
    case Operation::kReplacement:
      return "replacement";
  }
  return "unknown";
}

Operation ParseOperation(const std::string& name) {
  if (name == "blanking") return Operation::kBlanking;
  if (name == "dropout") return Operation::kDropout;
  if (name == "replacement") return Operation::kReplacement;
  throw std::invalid_argument("unknown operation: " + name);
}

AugmentationRecord ApplyBlanking(std::span<const std::string> tokens,
                                 const std::vector<bool>& mask) {
  CheckLengths(tokens, mask);
  AugmentationRecord record = Passthrough(Operation::kBlanking, tokens);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!mask[i]) continue;
    record.tokens_out[i] = kBlankToken;
    record.selected_positions.push_back(i + 1);
  }
  return record;
}

AugmentationRecord ApplyDropout(std::span<const std::string> tokens,
                                const std::vector<bool>& mask) {
  CheckLengths(tokens, mask);
  AugmentationRecord record = Passthrough(Operation::kDropout, tokens);
  record.dropout_mask = mask;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (mask[i]) record.selected_positions.push_back(i + 1);
  }
  return record;
}

AugmentationRecord ApplyReplacement(std::span<const std::string> tokens,
                                    const std::vector<bool>& mask,
                                    const FrequencyTable& table,
                                    const ReplacementPolicy& policy,
                                    Rng& rng) {
  CheckLengths(tokens, mask);
  AugmentationRecord record = Passthrough(Operation::kReplacement, tokens);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!mask[i]) continue;
    std::vector<std::string> candidates;
    try {
      candidates = ReplacementCandidates(table, tokens[i], policy);
    } catch (const OovError&) {
      ++record.unreplaced;
      continue;
    }
    if (candidates.empty()) {
      ++record.unreplaced;
      continue;
    }
    record.tokens_out[i] = SampleReplacement(candidates, rng);
    record.selected_positions.push_back(i + 1);
  }
  return record;
}

}  // namespace syntaug
