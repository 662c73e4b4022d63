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

#include "syntaug/frequency.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "syntaug/errors.h"

namespace syntaug {

FrequencyTable FrequencyTable::FromCounts(Counts counts) {
  if (counts.empty()) {
    throw std::invalid_argument("frequency table needs at least one word");
  }
  FrequencyTable table;
  table.counts_ = std::move(counts);
  table.rank_order_.reserve(table.counts_.size());
  for (const auto& [word, count] : table.counts_) {
    table.rank_order_.push_back(word);
    table.total_ += count;
  }
  const Counts& c = table.counts_;
  std::sort(table.rank_order_.begin(), table.rank_order_.end(),
            [&c](const std::string& a, const std::string& b) {
              const std::uint64_t ca = c.at(a);
              const std::uint64_t cb = c.at(b);
              return ca != cb ? ca > cb : a < b;
            });
  table.rank_of_.reserve(table.rank_order_.size());
  for (std::size_t k = 0; k < table.rank_order_.size(); ++k) {
    table.rank_of_.emplace(table.rank_order_[k], k);
  }
  return table;
}

FrequencyTable FrequencyTable::Build(
    std::span<const std::vector<std::string>> corpus) {
  Counts counts;
  for (const auto& sentence : corpus) {
    for (const auto& word : sentence) ++counts[word];
  }
  if (counts.empty()) {
    throw std::invalid_argument("cannot build a frequency table from an "
                                "empty corpus");
  }
  return FromCounts(std::move(counts));
}

FrequencyTable FrequencyTable::ReadTsv(std::istream& in) {
  Counts counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(line_no, "expected word<TAB>count");
    }
    std::uint64_t count = 0;
    const char* first = line.data() + tab + 1;
    const char* last = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc() || ptr != last || first == last) {
      throw FormatError(line_no, "count is not a non-negative integer");
    }
    if (!counts.emplace(line.substr(0, tab), count).second) {
      throw FormatError(line_no, "duplicate word '" + line.substr(0, tab) +
                                     "'");
    }
  }
  if (counts.empty()) throw FormatError(line_no, "empty frequency table");
  return FromCounts(std::move(counts));
}

void FrequencyTable::WriteTsv(std::ostream& out) const {
  for (const std::string& word : rank_order_) {
    out << word << '\t' << counts_.at(word) << '\n';
  }
}

std::uint64_t FrequencyTable::count(const std::string& word) const {
  const auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

std::optional<std::size_t> FrequencyTable::rank_of(
    const std::string& word) const {
  const auto it = rank_of_.find(word);
  if (it == rank_of_.end()) return std::nullopt;
  return it->second;
}

void ReplacementPolicy::Validate() const {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
}

std::vector<std::string> ReplacementCandidates(
    const FrequencyTable& table, const std::string& word,
    const ReplacementPolicy& policy) {
  const auto rank = table.rank_of(word);
  if (!rank) throw OovError(word);
  const auto& order = table.rank_order();
  std::vector<std::string> out;
  out.reserve(2 * policy.window);
  for (std::size_t d = 1; d <= policy.window; ++d) {
    const std::string* below = *rank >= d ? &order[*rank - d] : nullptr;
    const std::string* above =
        *rank + d < order.size() ? &order[*rank + d] : nullptr;
    if (below == nullptr && above == nullptr) break;
    if (below != nullptr && above != nullptr && *above < *below) {
      std::swap(below, above);
    }
    if (below != nullptr) out.push_back(*below);
    if (above != nullptr) out.push_back(*above);
  }
  return out;
}

const std::string& SampleReplacement(std::span<const std::string> candidates,
                                     Rng& rng) {
  if (candidates.empty()) {
    throw std::invalid_argument("no replacement candidates");
  }
  return candidates[rng.Index(candidates.size())];
}

}  // namespace syntaug
