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

#ifndef SYNTAUG_PIPELINE_H_
#define SYNTAUG_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "syntaug/augment.h"
#include "syntaug/conllu.h"
#include "syntaug/frequency.h"
#include "syntaug/selection.h"

namespace syntaug {

// A source sentence, its parse, and the target line it translates to. The
// target is opaque and is never modified.
struct ParallelUnit {
  std::size_t ordinal = 0;
  std::vector<std::string> source_tokens;
  ParsedSentence parse;
  std::string target_line;
};

// Splits on runs of spaces, tabs and carriage returns.
std::vector<std::string> SplitWhitespace(const std::string& line);

struct JoinOptions {
  BadParsePolicy on_bad_parse = BadParsePolicy::kSkip;
  BadParsePolicy on_mismatch = BadParsePolicy::kAbort;
};

struct JoinResult {
  std::vector<ParallelUnit> units;
  std::size_t sentences_in = 0;
  std::size_t tree_errors = 0;
  std::size_t join_errors = 0;
  std::vector<std::string> problems;  // one message per skipped sentence
};

// Aligns the three streams by position. Throws AlignmentError when counts
// differ, TreeError / JoinError when a bad sentence meets an abort policy.
JoinResult JoinCorpus(std::span<const std::string> source_lines,
                      std::span<const ConlluBlock> parses,
                      std::span<const std::string> target_lines,
                      const JoinOptions& options = {});

JoinResult JoinCorpus(std::span<const std::string> source_lines,
                      std::span<const ParsedSentence> parses,
                      std::span<const std::string> target_lines,
                      const JoinOptions& options = {});

struct PipelineConfig {
  Operation operation = Operation::kBlanking;
  SelectionPolicy selection;
  ReplacementPolicy replacement;
  std::uint64_t seed = 0;
  std::size_t copies = 1;
  bool keep_original = true;
  std::size_t jobs = 1;
  JoinOptions join;

  std::string source_path;
  std::string conllu_path;
  std::string target_path;
  std::string freq_path;  // optional; built from the source when empty

  std::string out_source_path;
  std::string out_target_path;
  std::string out_mask_path;
  std::string out_stats_path;

  void Validate() const;
};

struct DepthBin {
  std::uint64_t selected = 0;
  std::uint64_t total = 0;
  double sum_q = 0.0;
  double sum_p = 0.0;
  double sum_p_final = 0.0;
};

struct RunStats {
  std::uint64_t sentences_in = 0;
  std::uint64_t sentences_out = 0;
  std::uint64_t sentences_skipped = 0;
  std::uint64_t tree_errors = 0;  // part of sentences_skipped
  std::uint64_t join_errors = 0;  // part of sentences_skipped
  std::uint64_t output_pairs = 0;
  // Token counters run over every generated variant, originals excluded.
  std::uint64_t tokens_total = 0;
  std::uint64_t tokens_selected = 0;
  std::uint64_t clip_events = 0;
  std::uint64_t oov_replacements = 0;
  // copies + keep_original; 0 when unknown (stats merged from elsewhere).
  std::uint64_t pairs_per_sentence = 0;
  std::map<int, DepthBin> depth_histogram;

  double selection_rate() const;
  void Merge(const RunStats& other);
  // Empty when every counter identity holds.
  std::vector<std::string> Check() const;

  std::string ToJson() const;
  // Throws std::invalid_argument on malformed input.
  static RunStats FromJson(const std::string& text);
};

// Generates config.copies variants of one unit. Variant k draws from
// Rng::ForUnit(config.seed, unit.ordinal, k, epoch). `table` is required
// for replacement. When `stats` is given, per-variant token and depth
// counters are added to it.
std::vector<AugmentationRecord> AugmentUnit(const ParallelUnit& unit,
                                            const PipelineConfig& config,
                                            const FrequencyTable* table,
                                            std::uint64_t epoch = 0,
                                            RunStats* stats = nullptr);

// Reads, joins and augments the configured corpus and writes the augmented
// source, repeated target, dropout-mask sidecar and stats JSON. Output bytes
// depend only on the configuration, not on config.jobs.
RunStats RunPipeline(const PipelineConfig& config);

}  // namespace syntaug

#endif  // SYNTAUG_PIPELINE_H_
