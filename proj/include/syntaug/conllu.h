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

#ifndef SYNTAUG_CONLLU_H_
#define SYNTAUG_CONLLU_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace syntaug {

struct Token {
  int index = 0;  // 1-based position in the sentence
  std::string surface;
  int head = 0;  // 0 is the artificial root, otherwise 1..n
  std::string deprel;
};

// A dependency-parsed sentence together with the tree depth of every token.
// The root has depth 1 and every other token sits one below its head.
struct ParsedSentence {
  std::vector<Token> tokens;
  std::vector<int> depths;

  std::size_t size() const { return tokens.size(); }
  std::vector<std::string> Surfaces() const;
};

enum class BadParsePolicy { kSkip, kAbort };

// Returns the depth of each token by walking head chains with memoization.
// Throws TreeError on cycles, zero or multiple roots, self loops, or heads
// outside [0, n]. `sentence` is only used to label the error.
std::vector<int> ComputeDepths(std::span<const Token> tokens,
                               std::size_t sentence = 0);

// One sentence block from a CoNLL-U stream. Blocks whose tree is invalid
// carry the error text instead of a sentence so callers that align by
// position (the corpus joiner) can keep counting.
struct ConlluBlock {
  std::size_t ordinal = 0;
  std::size_t first_line = 0;
  std::optional<ParsedSentence> sentence;
  std::string tree_error;
};

// Streaming reader over CoNLL-U text. Tolerates CRLF line endings, skips
// comments, multi-word token ranges ("3-4") and empty nodes ("5.1").
// Throws FormatError on a malformed token line.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in) : in_(in) {}

  std::optional<ConlluBlock> Next();
  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::size_t ordinal_ = 0;
};

struct IngestStats {
  std::size_t sentences_read = 0;
  std::size_t sentences_skipped = 0;
};

// Parses a whole stream. Under kAbort the first tree error is rethrown as
// TreeError; under kSkip bad sentences are dropped and counted in `stats`.
std::vector<ParsedSentence> ParseConllu(
    std::istream& in, BadParsePolicy policy = BadParsePolicy::kSkip,
    IngestStats* stats = nullptr);

// Writes sentences back as 10-column CoNLL-U. Columns the model does not
// carry are written as "_".
void WriteConllu(std::ostream& out, std::span<const ParsedSentence> sentences);

}  // namespace syntaug

#endif  // SYNTAUG_CONLLU_H_
