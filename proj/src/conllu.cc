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

#include "syntaug/conllu.h"

#include <charconv>
#include <string_view>

#include "syntaug/errors.h"

namespace syntaug {
namespace {

constexpr std::size_t kConlluColumns = 10;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

std::vector<std::string> ParsedSentence::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<int> ComputeDepths(std::span<const Token> tokens,
                               std::size_t sentence) {
  const int n = static_cast<int>(tokens.size());
  if (n == 0) throw TreeError(sentence, "empty sentence");

  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const int head = tokens[i].head;
    if (head < 0 || head > n) {
      throw TreeError(sentence, "token " + std::to_string(i + 1) +
                                    " has head " + std::to_string(head) +
                                    " outside [0, " + std::to_string(n) + "]");
    }
    if (head == i + 1) {
      throw TreeError(sentence,
                      "token " + std::to_string(i + 1) + " is its own head");
    }
    if (head == 0) ++roots;
  }
  if (roots != 1) {
    throw TreeError(sentence, "expected exactly one root, found " +
                                  std::to_string(roots));
  }

  // 0 = unvisited, -1 = on the current walk, >0 = resolved depth.
  std::vector<int> depth(n, 0);
  std::vector<int> path;
  for (int start = 0; start < n; ++start) {
    if (depth[start] > 0) continue;
    path.clear();
    int node = start;
    int base = 0;
    while (true) {
      if (depth[node] > 0) {
        base = depth[node];
        break;
      }
      if (depth[node] == -1) {
        throw TreeError(sentence, "cycle through token " +
                                      std::to_string(node + 1));
      }
      depth[node] = -1;
      path.push_back(node);
      const int head = tokens[node].head;
      if (head == 0) break;
      node = head - 1;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++base;
  }
  return depth;
}

std::optional<ConlluBlock> ConlluReader::Next() {
  ConlluBlock block;
  ParsedSentence sentence;
  std::string line;
  bool in_block = false;

  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) {
      if (in_block) break;
      continue;
    }
    if (line.front() == '#') continue;

    const auto fields = SplitTabs(line);
    if (fields.size() != kConlluColumns) {
      throw FormatError(line_, "expected " + std::to_string(kConlluColumns) +
                                   " tab-separated columns, found " +
                                   std::to_string(fields.size()));
    }
    const std::string_view id = fields[0];
    if (id.find_first_of("-.") != std::string_view::npos) continue;

    const auto index = ParseInt(id);
    if (!index) {
      throw FormatError(line_, "non-integer ID '" + std::string(id) + "'");
    }
    const auto head = ParseInt(fields[6]);
    if (!head) {
      throw FormatError(line_,
                        "non-integer HEAD '" + std::string(fields[6]) + "'");
    }
    if (!in_block) {
      in_block = true;
      block.first_line = line_;
    }
    sentence.tokens.push_back(Token{*index, std::string(fields[1]), *head,
                                    std::string(fields[7])});
  }
  if (!in_block) return std::nullopt;

  block.ordinal = ordinal_++;
  try {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (sentence.tokens[i].index != static_cast<int>(i + 1)) {
        throw TreeError(block.ordinal,
                        "token IDs are not consecutive from 1 at ID " +
                            std::to_string(sentence.tokens[i].index));
      }
    }
    sentence.depths = ComputeDepths(sentence.tokens, block.ordinal);
    block.sentence = std::move(sentence);
  } catch (const TreeError& e) {
    block.tree_error = e.reason();
  }
  return block;
}

std::vector<ParsedSentence> ParseConllu(std::istream& in,
                                        BadParsePolicy policy,
                                        IngestStats* stats) {
  ConlluReader reader(in);
  std::vector<ParsedSentence> out;
  IngestStats local;
  while (auto block = reader.Next()) {
    ++local.sentences_read;
    if (block->sentence) {
      out.push_back(std::move(*block->sentence));
      continue;
    }
    if (policy == BadParsePolicy::kAbort) {
      throw TreeError(block->ordinal,
                      block->tree_error + " (starting at line " +
                          std::to_string(block->first_line) + ")");
    }
    ++local.sentences_skipped;
  }
  if (stats != nullptr) *stats = local;
  return out;
}

void WriteConllu(std::ostream& out,
                 std::span<const ParsedSentence> sentences) {
  for (const ParsedSentence& s : sentences) {
    for (const Token& t : s.tokens) {
      out << t.index << '\t' << t.surface << "\t_\t_\t_\t_\t" << t.head << '\t'
          << (t.deprel.empty() ? "_" : t.deprel) << "\t_\t_\n";
    }
    out << '\n';
  }
}

}  // namespace syntaug
