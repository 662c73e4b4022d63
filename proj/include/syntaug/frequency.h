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

#ifndef SYNTAUG_FREQUENCY_H_
#define SYNTAUG_FREQUENCY_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "syntaug/random.h"

namespace syntaug {

// Unigram counts with a total rank order: descending count, ties broken by
// byte-wise lexicographic order. Immutable once built.
class FrequencyTable {
 public:
  using Counts = std::unordered_map<std::string, std::uint64_t>;

  // Throws std::invalid_argument if `counts` is empty.
  static FrequencyTable FromCounts(Counts counts);

  // Counts every token of every sentence. Throws std::invalid_argument when
  // the corpus contains no tokens.
  static FrequencyTable Build(
      std::span<const std::vector<std::string>> corpus);

  // Reads "word<TAB>count" lines. Throws FormatError with the line number on
  // malformed or duplicate entries.
  static FrequencyTable ReadTsv(std::istream& in);
  void WriteTsv(std::ostream& out) const;

  std::size_t size() const { return rank_order_.size(); }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(const std::string& word) const;
  bool contains(const std::string& word) const {
    return rank_of_.contains(word);
  }
  std::optional<std::size_t> rank_of(const std::string& word) const;
  const std::vector<std::string>& rank_order() const { return rank_order_; }
  const Counts& entries() const { return counts_; }

 private:
  FrequencyTable() = default;

  Counts counts_;
  std::vector<std::string> rank_order_;
  std::unordered_map<std::string, std::size_t> rank_of_;
  std::uint64_t total_ = 0;
};

// Candidate set for frequency-similar replacement: every word within
// `window` ranks of the target, excluding the target itself.
struct ReplacementPolicy {
  std::size_t window = 10;

  void Validate() const;  // window >= 1
};

// Ordered by rank distance, then lexicographically. Throws OovError if
// `word` is not in the table.
std::vector<std::string> ReplacementCandidates(const FrequencyTable& table,
                                               const std::string& word,
                                               const ReplacementPolicy& policy);

// Uniform draw; consumes exactly one draw from `rng`. Throws
// std::invalid_argument on an empty candidate list.
const std::string& SampleReplacement(std::span<const std::string> candidates,
                                     Rng& rng);

}  // namespace syntaug

#endif  // SYNTAUG_FREQUENCY_H_
