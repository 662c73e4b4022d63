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

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "syntaug/errors.h"

namespace syntaug {
namespace {

TEST(ExpandMaskTest, ReplicatesAcrossPieces) {
  EXPECT_EQ(ExpandMask({false, true, false}, "a won@@ der@@ ful day"),
            (std::vector<bool>{false, true, true, true, false}));
}

TEST(ExpandMaskTest, NoJoinsIsIdentity) {
  const std::vector<bool> mask = {true, false, true, true};
  EXPECT_EQ(ExpandMask(mask, "w x y z"), mask);
}

TEST(ExpandMaskTest, CountMismatch) {
  EXPECT_THROW(ExpandMask({true, false}, "a b c"), std::invalid_argument);
  EXPECT_THROW(ExpandMask({true, false, true}, "a b@@ c"),
               std::invalid_argument);
}

TEST(ExpandMaskTest, CustomMarker) {
  EXPECT_EQ(ExpandMask({true, false}, "un## do it", "##"),
            (std::vector<bool>{true, true, false}));
}

TEST(DesegmentBpeTest, JoinsPieces) {
  EXPECT_EQ(DesegmentBpe("a won@@ der@@ ful day"),
            (std::vector<std::string>{"a", "wonderful", "day"}));
  EXPECT_EQ(DesegmentBpe("dangling@@"),
            (std::vector<std::string>{"dangling"}));
}

TEST(ParseMaskLineTest, RejectsOtherFlags) {
  EXPECT_EQ(ParseMaskLine("0 1  1"), (std::vector<bool>{false, true, true}));
  EXPECT_THROW(ParseMaskLine("0 2"), std::invalid_argument);
}

// Random words split at random points: de-segmenting recovers the words and
// the expanded mask has one flag per piece.
TEST(ExpandMaskTest, RandomSegmentationsRoundTrip) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + gen() % 15;
    std::vector<std::string> words;
    std::vector<bool> mask;
    std::string bpe;
    std::size_t pieces = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::string word;
      const std::size_t len = 1 + gen() % 9;
      for (std::size_t c = 0; c < len; ++c) word += static_cast<char>('a' + gen() % 26);
      words.push_back(word);
      mask.push_back(gen() % 2 == 1);
      std::size_t start = 0;
      while (start < word.size()) {
        const std::size_t take = 1 + gen() % (word.size() - start);
        if (!bpe.empty()) bpe += ' ';
        bpe += word.substr(start, take);
        start += take;
        if (start < word.size()) bpe += "@@";
        ++pieces;
      }
    }
    EXPECT_EQ(DesegmentBpe(bpe), words);
    const auto expanded = ExpandMask(mask, bpe);
    EXPECT_EQ(expanded.size(), pieces);
  }
}

TEST(ExpandMaskStreamTest, ReportsLineOfMismatch) {
  std::istringstream masks("0 1 0\n1 1\n");
  std::istringstream bpe("a won@@ der@@ ful day\nx y z\n");
  std::ostringstream out;
  try {
    ExpandMaskStream(masks, bpe, out);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_EQ(out.str(), "0 1 1 1 0\n");
}

TEST(ExpandMaskStreamTest, UnevenFiles) {
  std::istringstream masks("0\n1\n");
  std::istringstream bpe("a\n");
  std::ostringstream out;
  EXPECT_THROW(ExpandMaskStream(masks, bpe, out), FormatError);
}

}  // namespace
}  // namespace syntaug
