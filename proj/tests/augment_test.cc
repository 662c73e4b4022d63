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

#include <random>

#include "gtest/gtest.h"
#include "syntaug/selection.h"
#include "test_util.h"

namespace syntaug {
namespace {

const std::vector<std::string> kBeaches = {"We", "shall", "fight", "on",
                                           "the", "beaches", "."};
const std::vector<bool> kOnBeaches = {false, false, false, true,
                                      false, true, false};

TEST(BlankingTest, PlaceholderAtSelectedPositions) {
  const auto record = ApplyBlanking(kBeaches, kOnBeaches);
  EXPECT_EQ(record.tokens_out,
            (std::vector<std::string>{"We", "shall", "fight", "<BLANK>", "the",
                                      "<BLANK>", "."}));
  EXPECT_EQ(record.selected_positions, (std::vector<std::size_t>{4, 6}));
  EXPECT_EQ(record.dropout_mask, std::vector<bool>(7, false));
  EXPECT_EQ(record.operation, Operation::kBlanking);
}

TEST(BlankingTest, EmptyAndFullMasks) {
  EXPECT_EQ(ApplyBlanking(kBeaches, std::vector<bool>(7, false)).tokens_out,
            kBeaches);
  EXPECT_EQ(ApplyBlanking(kBeaches, std::vector<bool>(7, true)).tokens_out,
            std::vector<std::string>(7, "<BLANK>"));
}

TEST(BlankingTest, LengthMismatch) {
  EXPECT_THROW(ApplyBlanking(kBeaches, std::vector<bool>(6)),
               std::invalid_argument);
}

TEST(DropoutTest, TokensKeptMaskCarried) {
  const auto record = ApplyDropout(kBeaches, kOnBeaches);
  EXPECT_EQ(record.tokens_out, kBeaches);
  EXPECT_EQ(record.dropout_mask, kOnBeaches);
  EXPECT_EQ(record.selected_positions, (std::vector<std::size_t>{4, 6}));
  EXPECT_EQ(ApplyDropout(kBeaches, std::vector<bool>(7)).dropout_mask,
            std::vector<bool>(7, false));
  EXPECT_THROW(ApplyDropout(kBeaches, std::vector<bool>(8)),
               std::invalid_argument);
}

TEST(ReplacementTest, EmptyMaskIsIdentity) {
  const auto table = FrequencyTable::Build(
      std::vector<std::vector<std::string>>{kBeaches});
  Rng rng(3);
  const auto record =
      ApplyReplacement(kBeaches, std::vector<bool>(7), table, {}, rng);
  EXPECT_EQ(record.tokens_out, kBeaches);
  EXPECT_TRUE(record.selected_positions.empty());
}

TEST(ReplacementTest, TwoWordVocabularyForcesTheOther) {
  const auto table = FrequencyTable::Build(
      std::vector<std::vector<std::string>>{{"x", "x", "y"}});
  Rng rng(3);
  const std::vector<std::string> tokens = {"x", "y", "x"};
  const auto record = ApplyReplacement(tokens, {true, true, false}, table,
                                       {10}, rng);
  EXPECT_EQ(record.tokens_out, (std::vector<std::string>{"y", "x", "x"}));
  EXPECT_EQ(record.selected_positions, (std::vector<std::size_t>{1, 2}));
}

TEST(ReplacementTest, OovLeftUnchangedAndCounted) {
  const auto table = FrequencyTable::Build(
      std::vector<std::vector<std::string>>{{"x", "y"}});
  Rng rng(3);
  const std::vector<std::string> tokens = {"x", "unknown"};
  const auto record =
      ApplyReplacement(tokens, {true, true}, table, {1}, rng);
  EXPECT_EQ(record.tokens_out, (std::vector<std::string>{"y", "unknown"}));
  EXPECT_EQ(record.unreplaced, 1u);
  EXPECT_EQ(record.selected_positions, (std::vector<std::size_t>{1}));
}

TEST(ReplacementTest, LengthMismatch) {
  const auto table = FrequencyTable::Build(
      std::vector<std::vector<std::string>>{{"x", "y"}});
  Rng rng(3);
  EXPECT_THROW(ApplyReplacement(kBeaches, {true}, table, {}, rng),
               std::invalid_argument);
}

// Post-hoc scan over many augmented sentences.
TEST(ReplacementTest, EveryReplacementWithinWindowAndNeverSelf) {
  const auto toy = testing::MakeToyCorpus(10000, 25, 400, 77);
  const auto table = FrequencyTable::Build(toy.sentences);
  const ReplacementPolicy policy{10};
  std::size_t replaced = 0;
  for (std::size_t s = 0; s < toy.sentences.size(); ++s) {
    const auto& tokens = toy.sentences[s];
    Rng rng = Rng::ForUnit(5, s, 0);
    const auto mask = UniformMask(tokens.size(), 0.3, rng);
    const auto record = ApplyReplacement(tokens, mask, table, policy, rng);
    ASSERT_EQ(record.tokens_out.size(), tokens.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const bool listed = next < record.selected_positions.size() &&
                          record.selected_positions[next] == i + 1;
      if (listed) ++next;
      if (!mask[i]) {
        EXPECT_FALSE(listed);
        EXPECT_EQ(record.tokens_out[i], tokens[i]);
        continue;
      }
      ASSERT_TRUE(listed);
      ++replaced;
      EXPECT_NE(record.tokens_out[i], tokens[i]);
      const long d = std::labs(
          static_cast<long>(*table.rank_of(record.tokens_out[i])) -
          static_cast<long>(*table.rank_of(tokens[i])));
      EXPECT_LE(d, 10);
    }
  }
  EXPECT_GT(replaced, 10000u);
}

TEST(ReplacementTest, ReplayingSeedReproducesOutput) {
  const auto toy = testing::MakeToyCorpus(50, 25, 100, 7);
  const auto table = FrequencyTable::Build(toy.sentences);
  for (std::size_t s = 0; s < toy.sentences.size(); ++s) {
    const std::vector<bool> mask(toy.sentences[s].size(), true);
    Rng a(s);
    Rng b(s);
    EXPECT_EQ(ApplyReplacement(toy.sentences[s], mask, table, {}, a).tokens_out,
              ApplyReplacement(toy.sentences[s], mask, table, {}, b).tokens_out);
  }
}

TEST(OperationTest, NamesRoundTrip) {
  for (const Operation op : {Operation::kBlanking, Operation::kDropout,
                             Operation::kReplacement}) {
    EXPECT_EQ(ParseOperation(ToString(op)), op);
  }
  EXPECT_THROW(ParseOperation("swap"), std::invalid_argument);
}

}  // namespace
}  // namespace syntaug
