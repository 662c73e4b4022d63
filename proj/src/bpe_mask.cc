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

#include "syntaug/bpe_mask.h"

#include <stdexcept>

#include "syntaug/errors.h"
#include "syntaug/pipeline.h"

namespace syntaug {
namespace {

bool EndsWith(const std::string& s, const std::string& suffix) {
  return !suffix.empty() && s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::vector<bool> ParseMaskLine(const std::string& line) {
  std::vector<bool> mask;
  for (const std::string& flag : SplitWhitespace(line)) {
    if (flag == "0") {
      mask.push_back(false);
    } else if (flag == "1") {
      mask.push_back(true);
    } else {
      throw std::invalid_argument("mask flag must be 0 or 1, got '" + flag +
                                  "'");
    }
  }
  return mask;
}

std::vector<std::string> DesegmentBpe(const std::string& line,
                                      const std::string& marker) {
  std::vector<std::string> words;
  std::string current;
  bool open = false;
  for (const std::string& piece : SplitWhitespace(line)) {
    if (EndsWith(piece, marker)) {
      current.append(piece, 0, piece.size() - marker.size());
      open = true;
      continue;
    }
    current += piece;
    words.push_back(std::move(current));
    current.clear();
    open = false;
  }
  // A dangling continuation still closes a word.
  if (open) words.push_back(std::move(current));
  return words;
}

std::vector<bool> ExpandMask(const std::vector<bool>& word_mask,
                             const std::string& bpe_line,
                             const std::string& marker) {
  const auto pieces = SplitWhitespace(bpe_line);
  std::vector<bool> out;
  out.reserve(pieces.size());
  std::size_t word = 0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (word >= word_mask.size()) {
      throw std::invalid_argument(
          "BPE line has more words than the mask's " +
          std::to_string(word_mask.size()));
    }
    out.push_back(word_mask[word]);
    const bool continues = EndsWith(pieces[k], marker) && k + 1 < pieces.size();
    if (!continues) ++word;
  }
  if (word != word_mask.size()) {
    throw std::invalid_argument("mask has " + std::to_string(word_mask.size()) +
                                " flags but the BPE line has " +
                                std::to_string(word) + " words");
  }
  return out;
}

std::size_t ExpandMaskStream(std::istream& masks, std::istream& bpe,
                             std::ostream& out, const std::string& marker) {
  std::string mask_line;
  std::string bpe_line;
  std::size_t line_no = 0;
  while (true) {
    const bool have_mask = static_cast<bool>(std::getline(masks, mask_line));
    const bool have_bpe = static_cast<bool>(std::getline(bpe, bpe_line));
    if (!have_mask && !have_bpe) break;
    ++line_no;
    if (have_mask != have_bpe) {
      throw FormatError(line_no, have_mask ? "BPE file ended early"
                                           : "mask file ended early");
    }
    try {
      const auto expanded = ExpandMask(ParseMaskLine(mask_line), bpe_line,
                                       marker);
      for (std::size_t i = 0; i < expanded.size(); ++i) {
        if (i > 0) out << ' ';
        out << (expanded[i] ? '1' : '0');
      }
      out << '\n';
    } catch (const std::invalid_argument& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return line_no;
}

}  // namespace syntaug
