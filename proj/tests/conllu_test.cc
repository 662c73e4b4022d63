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

#include <queue>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "syntaug/errors.h"
#include "test_util.h"

namespace syntaug {
namespace {

using testing::kGoodThingDepths;
using testing::kGoodThingHeads;
using testing::kGoodThingWords;
using testing::MakeTokens;
using testing::ToConllu;

// Independent oracle: BFS from the root over the child lists obtained by
// inverting the head links.
std::vector<int> BfsDepths(const std::vector<int>& heads) {
  const std::size_t n = heads.size();
  std::vector<std::vector<int>> children(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    children[heads[i]].push_back(static_cast<int>(i + 1));
  }
  std::vector<int> depth(n + 1, 0);
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const int node = frontier.front();
    frontier.pop();
    for (const int child : children[node]) {
      depth[child] = depth[node] + 1;
      frontier.push(child);
    }
  }
  return {depth.begin() + 1, depth.end()};
}

std::vector<ParsedSentence> Parse(const std::string& text,
                                  BadParsePolicy policy = BadParsePolicy::kAbort,
                                  IngestStats* stats = nullptr) {
  std::istringstream in(text);
  return ParseConllu(in, policy, stats);
}

TEST(ComputeDepthsTest, Figure1Sentence) {
  EXPECT_EQ(ComputeDepths(MakeTokens(kGoodThingWords, kGoodThingHeads)), kGoodThingDepths);
}

TEST(ComputeDepthsTest, ChainTree) {
  std::vector<int> heads;
  std::vector<std::string> words;
  std::vector<int> expected;
  for (int i = 1; i <= 12; ++i) {
    heads.push_back(i - 1);
    words.push_back("w");
    expected.push_back(i);
  }
  EXPECT_EQ(ComputeDepths(MakeTokens(words, heads)), expected);
}

TEST(ComputeDepthsTest, MatchesBfsOracleOnRandomSmallTrees) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto heads = testing::RandomHeads(n, gen);
    const std::vector<std::string> words(n, "x");
    EXPECT_EQ(ComputeDepths(MakeTokens(words, heads)), BfsDepths(heads));
  }
}

TEST(ComputeDepthsTest, RejectsMalformedTrees) {
  const std::vector<std::string> two = {"a", "b"};
  const std::vector<std::string> three = {"a", "b", "c"};
  EXPECT_THROW(ComputeDepths(MakeTokens(two, {2, 1})), TreeError);
  EXPECT_THROW(ComputeDepths(MakeTokens(three, {0, 3, 2})), TreeError);
  EXPECT_THROW(ComputeDepths(MakeTokens(two, {0, 0})), TreeError);
  EXPECT_THROW(ComputeDepths(MakeTokens(two, {0, 2})), TreeError);
  EXPECT_THROW(ComputeDepths(MakeTokens(two, {0, 3})), TreeError);
  EXPECT_THROW(ComputeDepths(std::vector<Token>{}), TreeError);
}

TEST(ComputeDepthsTest, CycleErrorNamesSentence) {
  try {
    ComputeDepths(MakeTokens({"a", "b", "c"}, {0, 3, 2}), 41);
    FAIL() << "expected TreeError";
  } catch (const TreeError& e) {
    EXPECT_EQ(e.sentence(), 41u);
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(ComputeDepthsTest, LevelProfileProperties) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 40;
    const auto heads = testing::RandomHeads(n, gen);
    const auto depths =
        ComputeDepths(MakeTokens(std::vector<std::string>(n, "x"), heads));
    int max_depth = 0;
    std::vector<int> level(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (heads[i] == 0) {
        EXPECT_EQ(depths[i], 1);
      } else {
        EXPECT_EQ(depths[i], depths[heads[i] - 1] + 1);
        EXPECT_GT(depths[i], 1);
      }
      max_depth = std::max(max_depth, depths[i]);
      ++level[depths[i]];
    }
    EXPECT_LE(max_depth, static_cast<int>(n));
    EXPECT_EQ(level[1], 1);
    for (int k = 1; k < max_depth; ++k) EXPECT_GT(level[k], 0);
  }
}

TEST(ParseConlluTest, TwoTokenBlock) {
  const auto sentences = Parse(
      "1\tIt\tit\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\tis\tbe\tVERB\tVBZ\t_\t0\troot\t_\t_\n\n");
  ASSERT_EQ(sentences.size(), 1u);
  EXPECT_EQ(sentences[0].tokens[0].head, 2);
  EXPECT_EQ(sentences[0].tokens[1].head, 0);
  EXPECT_EQ(sentences[0].tokens[0].deprel, "nsubj");
  EXPECT_EQ(sentences[0].depths, (std::vector<int>{2, 1}));
}

TEST(ParseConlluTest, SingleTokenAndNoTrailingBlankLine) {
  const auto sentences = Parse("1\tHi\t_\t_\t_\t_\t0\troot\t_\t_");
  ASSERT_EQ(sentences.size(), 1u);
  EXPECT_EQ(sentences[0].depths, (std::vector<int>{1}));
}

TEST(ParseConlluTest, SkipsCommentsMultiwordTokensAndEmptyNodes) {
  const auto sentences = Parse(
      "# sent_id = 1\n"
      "# text = vamonos al mar\n"
      "1\tvamos\t_\t_\t_\t_\t0\troot\t_\t_\n"
      "2-3\tal\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "2\ta\t_\t_\t_\t_\t4\tcase\t_\t_\n"
      "3\tel\t_\t_\t_\t_\t4\tdet\t_\t_\n"
      "3.1\tnull\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "4\tmar\t_\t_\t_\t_\t1\tobl\t_\t_\n"
      "\n");
  ASSERT_EQ(sentences.size(), 1u);
  EXPECT_EQ(sentences[0].Surfaces(),
            (std::vector<std::string>{"vamos", "a", "el", "mar"}));
  EXPECT_EQ(sentences[0].depths, (std::vector<int>{1, 3, 3, 2}));
}

TEST(ParseConlluTest, ToleratesCrlfAndRepeatedBlankLines) {
  const auto sentences = Parse(
      "1\ta\t_\t_\t_\t_\t0\troot\t_\t_\r\n\r\n\r\n"
      "1\tb\t_\t_\t_\t_\t2\tdep\t_\t_\r\n"
      "2\tc\t_\t_\t_\t_\t0\troot\t_\t_\r\n");
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[1].tokens[1].deprel, "root");
  EXPECT_EQ(sentences[1].depths, (std::vector<int>{2, 1}));
}

TEST(ParseConlluTest, BadColumnCountReportsLine) {
  try {
    Parse("# c\n1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n2\tb\t_\t_\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseConlluTest, NonIntegerHeadIsFormatError) {
  EXPECT_THROW(Parse("1\ta\t_\t_\t_\t_\tx\troot\t_\t_\n"), FormatError);
  EXPECT_THROW(Parse("1\ta\t_\t_\t_\t_\t1.5\troot\t_\t_\n"), FormatError);
}

TEST(ParseConlluTest, NonConsecutiveIdsAreTreeErrors) {
  EXPECT_THROW(Parse("1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n"
                     "3\tb\t_\t_\t_\t_\t1\tdep\t_\t_\n"),
               TreeError);
}

TEST(ParseConlluTest, SkipPolicyDropsAndCountsBadTrees) {
  const std::string text = ToConllu({"a", "b"}, {2, 1}) +
                           ToConllu({"c"}, {0}) +
                           ToConllu({"d", "e"}, {0, 0}) +
                           ToConllu({"f", "g"}, {0, 1});
  IngestStats stats;
  const auto kept = Parse(text, BadParsePolicy::kSkip, &stats);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].Surfaces(), (std::vector<std::string>{"c"}));
  EXPECT_EQ(kept[1].Surfaces(), (std::vector<std::string>{"f", "g"}));
  EXPECT_EQ(stats.sentences_read, 4u);
  EXPECT_EQ(stats.sentences_skipped, 2u);

  try {
    Parse(text, BadParsePolicy::kAbort);
    FAIL() << "expected TreeError";
  } catch (const TreeError& e) {
    EXPECT_EQ(e.sentence(), 0u);
  }
}

TEST(ConlluReaderTest, BadBlocksKeepTheirOrdinal) {
  std::istringstream in(ToConllu({"a"}, {0}) + ToConllu({"b", "c"}, {2, 1}) +
                        ToConllu({"d"}, {0}));
  ConlluReader reader(in);
  std::vector<ConlluBlock> blocks;
  while (auto block = reader.Next()) blocks.push_back(*block);
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_TRUE(blocks[0].sentence.has_value());
  EXPECT_FALSE(blocks[1].sentence.has_value());
  EXPECT_EQ(blocks[1].ordinal, 1u);
  EXPECT_EQ(blocks[1].first_line, 3u);
  EXPECT_NE(blocks[1].tree_error.find("root"), std::string::npos);
  EXPECT_EQ(blocks[2].ordinal, 2u);
}

// Surface and head columns survive parse -> write byte for byte.
TEST(ParseConlluTest, RoundTripKeepsSurfaceAndHeadColumns) {
  std::mt19937_64 gen(99);
  std::string text;
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 1 + s % 13;
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i) {
      words.push_back("tok" + std::to_string(gen() % 1000) + "\xC3\xA9");
    }
    text += ToConllu(words, testing::RandomHeads(n, gen));
  }
  const auto sentences = Parse(text);
  std::ostringstream written;
  WriteConllu(written, sentences);

  auto columns = [](const std::string& conllu) {
    std::vector<std::string> out;
    std::istringstream in(conllu);
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) {
        out.push_back("");
        continue;
      }
      std::vector<std::string> fields;
      std::istringstream cells(line);
      for (std::string f; std::getline(cells, f, '\t');) fields.push_back(f);
      out.push_back(fields[0] + "|" + fields[1] + "|" + fields[6]);
    }
    return out;
  };
  EXPECT_EQ(columns(written.str()), columns(text));
}

}  // namespace
}  // namespace syntaug
