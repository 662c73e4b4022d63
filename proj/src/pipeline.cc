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

#include "syntaug/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "syntaug/errors.h"

namespace syntaug {
namespace {

using Json = nlohmann::ordered_json;

// Units processed between ordered flushes to the output files.
constexpr std::size_t kChunkSize = 4096;

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(std::move(line));
  if (in.bad()) throw std::runtime_error("error reading " + path);
  return lines;
}

std::vector<ConlluBlock> ReadBlocks(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ConlluBlock> blocks;
  ConlluReader reader(in);
  try {
    while (auto block = reader.Next()) blocks.push_back(std::move(*block));
  } catch (const FormatError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return blocks;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void WriteTokens(std::ostream& out, std::span<const std::string> tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out << ' ';
    out << tokens[i];
  }
  out << '\n';
}

void WriteMask(std::ostream& out, const std::vector<bool>& mask) {
  std::string line;
  line.reserve(mask.size() * 2);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (i > 0) line += ' ';
    line += mask[i] ? '1' : '0';
  }
  line += '\n';
  out << line;
}

std::string FirstDifference(std::span<const std::string> parse,
                            std::span<const std::string> source) {
  const std::size_t common = std::min(parse.size(), source.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (parse[k] != source[k]) {
      return "token " + std::to_string(k + 1) + ": parse has '" + parse[k] +
             "', source has '" + source[k] + "'";
    }
  }
  return "parse has " + std::to_string(parse.size()) +
         " tokens, source has " + std::to_string(source.size());
}

std::uint64_t GetCount(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw std::invalid_argument(std::string("missing or invalid counter '") +
                                key + "'");
  }
  return j.at(key).get<std::uint64_t>();
}

struct UnitOutput {
  std::vector<AugmentationRecord> records;
  RunStats stats;
};

}  // namespace

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    while (i < n && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < n && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.emplace_back(line, start, i - start);
  }
  return out;
}

JoinResult JoinCorpus(std::span<const std::string> source_lines,
                      std::span<const ConlluBlock> parses,
                      std::span<const std::string> target_lines,
                      const JoinOptions& options) {
  if (source_lines.size() != parses.size()) {
    throw AlignmentError("source has " + std::to_string(source_lines.size()) +
                         " lines but the parse file has " +
                         std::to_string(parses.size()) + " sentences");
  }
  if (source_lines.size() != target_lines.size()) {
    throw AlignmentError("source has " + std::to_string(source_lines.size()) +
                         " lines but the target has " +
                         std::to_string(target_lines.size()));
  }

  JoinResult result;
  result.units.reserve(parses.size());
  for (std::size_t i = 0; i < parses.size(); ++i) {
    ++result.sentences_in;
    const ConlluBlock& block = parses[i];
    if (!block.sentence) {
      if (options.on_bad_parse == BadParsePolicy::kAbort) {
        throw TreeError(i, block.tree_error);
      }
      ++result.tree_errors;
      result.problems.push_back("ordinal " + std::to_string(i) +
                                ": bad parse: " + block.tree_error);
      continue;
    }
    std::vector<std::string> tokens = SplitWhitespace(source_lines[i]);
    const auto surfaces = block.sentence->Surfaces();
    if (tokens != surfaces) {
      const std::string diff = FirstDifference(surfaces, tokens);
      if (options.on_mismatch == BadParsePolicy::kAbort) {
        throw JoinError(i, diff);
      }
      ++result.join_errors;
      result.problems.push_back("ordinal " + std::to_string(i) +
                                ": surface mismatch: " + diff);
      continue;
    }
    result.units.push_back(ParallelUnit{i, std::move(tokens), *block.sentence,
                                        target_lines[i]});
  }
  return result;
}

JoinResult JoinCorpus(std::span<const std::string> source_lines,
                      std::span<const ParsedSentence> parses,
                      std::span<const std::string> target_lines,
                      const JoinOptions& options) {
  std::vector<ConlluBlock> blocks;
  blocks.reserve(parses.size());
  for (std::size_t i = 0; i < parses.size(); ++i) {
    ConlluBlock block;
    block.ordinal = i;
    block.sentence = parses[i];
    blocks.push_back(std::move(block));
  }
  return JoinCorpus(source_lines, blocks, target_lines, options);
}

void PipelineConfig::Validate() const {
  selection.Validate();
  replacement.Validate();
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

double RunStats::selection_rate() const {
  return tokens_total == 0 ? 0.0
                           : static_cast<double>(tokens_selected) /
                                 static_cast<double>(tokens_total);
}

void RunStats::Merge(const RunStats& other) {
  sentences_in += other.sentences_in;
  sentences_out += other.sentences_out;
  sentences_skipped += other.sentences_skipped;
  tree_errors += other.tree_errors;
  join_errors += other.join_errors;
  output_pairs += other.output_pairs;
  tokens_total += other.tokens_total;
  tokens_selected += other.tokens_selected;
  clip_events += other.clip_events;
  oov_replacements += other.oov_replacements;
  if (pairs_per_sentence == 0) pairs_per_sentence = other.pairs_per_sentence;
  for (const auto& [depth, bin] : other.depth_histogram) {
    DepthBin& mine = depth_histogram[depth];
    mine.selected += bin.selected;
    mine.total += bin.total;
    mine.sum_q += bin.sum_q;
    mine.sum_p += bin.sum_p;
    mine.sum_p_final += bin.sum_p_final;
  }
}

std::vector<std::string> RunStats::Check() const {
  std::vector<std::string> problems;
  if (sentences_out + sentences_skipped != sentences_in) {
    problems.push_back("sentences_out + sentences_skipped != sentences_in (" +
                       std::to_string(sentences_out) + " + " +
                       std::to_string(sentences_skipped) +
                       " != " + std::to_string(sentences_in) + ")");
  }
  if (tree_errors + join_errors != sentences_skipped) {
    problems.push_back("tree_errors + join_errors != sentences_skipped");
  }
  if (tokens_selected > tokens_total) {
    problems.push_back("tokens_selected exceeds tokens_total");
  }
  if (pairs_per_sentence != 0 &&
      output_pairs != sentences_out * pairs_per_sentence) {
    problems.push_back("output_pairs != sentences_out * pairs_per_sentence");
  }
  if (!depth_histogram.empty()) {
    std::uint64_t selected = 0;
    std::uint64_t total = 0;
    for (const auto& [depth, bin] : depth_histogram) {
      if (depth < 1) problems.push_back("histogram has depth < 1");
      if (bin.selected > bin.total) {
        problems.push_back("depth " + std::to_string(depth) +
                           ": selected exceeds total");
      }
      selected += bin.selected;
      total += bin.total;
    }
    if (selected != tokens_selected || total != tokens_total) {
      problems.push_back("depth histogram does not sum to token counters");
    }
  }
  return problems;
}

std::string RunStats::ToJson() const {
  Json j;
  j["sentences_in"] = sentences_in;
  j["sentences_out"] = sentences_out;
  j["sentences_skipped"] = sentences_skipped;
  j["tree_errors"] = tree_errors;
  j["join_errors"] = join_errors;
  j["output_pairs"] = output_pairs;
  j["pairs_per_sentence"] = pairs_per_sentence;
  j["tokens_total"] = tokens_total;
  j["tokens_selected"] = tokens_selected;
  j["selection_rate"] = selection_rate();
  j["clip_events"] = clip_events;
  j["oov_replacements"] = oov_replacements;
  Json histogram = Json::array();
  for (const auto& [depth, bin] : depth_histogram) {
    const double total = bin.total == 0 ? 1.0 : static_cast<double>(bin.total);
    histogram.push_back({
        {"depth", depth},
        {"selected", bin.selected},
        {"total", bin.total},
        {"rate", static_cast<double>(bin.selected) / total},
        {"mean_q", bin.sum_q / total},
        {"mean_p", bin.sum_p / total},
        {"mean_p_final", bin.sum_p_final / total},
        {"sum_q", bin.sum_q},
        {"sum_p", bin.sum_p},
        {"sum_p_final", bin.sum_p_final},
    });
  }
  j["depth_histogram"] = std::move(histogram);
  return j.dump(2) + "\n";
}

RunStats RunStats::FromJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed stats JSON: ") +
                                e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("stats JSON must be object");
  RunStats s;
  s.sentences_in = GetCount(j, "sentences_in");
  s.sentences_out = GetCount(j, "sentences_out");
  s.sentences_skipped = GetCount(j, "sentences_skipped");
  s.tree_errors = GetCount(j, "tree_errors");
  s.join_errors = GetCount(j, "join_errors");
  s.output_pairs = GetCount(j, "output_pairs");
  s.pairs_per_sentence = GetCount(j, "pairs_per_sentence");
  s.tokens_total = GetCount(j, "tokens_total");
  s.tokens_selected = GetCount(j, "tokens_selected");
  s.clip_events = GetCount(j, "clip_events");
  s.oov_replacements = GetCount(j, "oov_replacements");
  if (j.contains("depth_histogram")) {
    const Json& h = j.at("depth_histogram");
    if (!h.is_array()) {
      throw std::invalid_argument("depth_histogram must be an array");
    }
    for (const Json& entry : h) {
      if (!entry.is_object() || !entry.contains("depth") ||
          !entry.at("depth").is_number_integer()) {
        throw std::invalid_argument("histogram entry without integer depth");
      }
      DepthBin bin;
      bin.selected = GetCount(entry, "selected");
      bin.total = GetCount(entry, "total");
      bin.sum_q = entry.value("sum_q", 0.0);
      bin.sum_p = entry.value("sum_p", 0.0);
      bin.sum_p_final = entry.value("sum_p_final", 0.0);
      s.depth_histogram[entry.at("depth").get<int>()] = bin;
    }
  }
  return s;
}

std::vector<AugmentationRecord> AugmentUnit(const ParallelUnit& unit,
                                            const PipelineConfig& config,
                                            const FrequencyTable* table,
                                            std::uint64_t epoch,
                                            RunStats* stats) {
  if (config.operation == Operation::kReplacement && table == nullptr) {
    throw std::invalid_argument("replacement needs a frequency table");
  }
  const auto& tokens = unit.source_tokens;
  const auto& depths = unit.parse.depths;
  if (tokens.size() != depths.size()) {
    throw std::invalid_argument("unit " + std::to_string(unit.ordinal) +
                                ": source and parse lengths differ");
  }

  std::vector<AugmentationRecord> records;
  records.reserve(config.copies);
  for (std::size_t copy = 0; copy < config.copies; ++copy) {
    Rng rng = Rng::ForUnit(config.seed, unit.ordinal, copy, epoch);
    const SelectionProfile profile = Select(config.selection, depths, rng);

    AugmentationRecord record;
    switch (config.operation) {
      case Operation::kBlanking:
        record = ApplyBlanking(tokens, profile.mask);
        break;
      case Operation::kDropout:
        record = ApplyDropout(tokens, profile.mask);
        break;
      case Operation::kReplacement:
        record = ApplyReplacement(tokens, profile.mask, *table,
                                  config.replacement, rng);
        break;
    }
    record.seed = config.seed;
    record.ordinal = unit.ordinal;
    record.copy = copy;

    if (stats != nullptr) {
      stats->tokens_total += tokens.size();
      stats->tokens_selected += profile.selected_count();
      stats->clip_events += profile.clipped;
      stats->oov_replacements += record.unreplaced;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        DepthBin& bin = stats->depth_histogram[depths[i]];
        ++bin.total;
        if (profile.mask[i]) ++bin.selected;
        bin.sum_q += profile.q[i];
        bin.sum_p += profile.p[i];
        bin.sum_p_final += profile.p_final[i];
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

RunStats RunPipeline(const PipelineConfig& config) {
  config.Validate();
  const auto source = ReadLines(config.source_path);
  const auto target = ReadLines(config.target_path);
  const auto blocks = ReadBlocks(config.conllu_path);
  JoinResult joined = JoinCorpus(source, blocks, target, config.join);

  if (config.operation == Operation::kBlanking) {
    for (const ParallelUnit& unit : joined.units) {
      for (const std::string& token : unit.source_tokens) {
        if (token == kBlankToken) {
          throw std::runtime_error(
              "placeholder " + std::string(kBlankToken) +
              " already occurs in the source corpus (ordinal " +
              std::to_string(unit.ordinal) + ")");
        }
      }
    }
  }

  std::optional<FrequencyTable> table;
  if (config.operation == Operation::kReplacement) {
    if (!config.freq_path.empty()) {
      std::ifstream in(config.freq_path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + config.freq_path);
      try {
        table = FrequencyTable::ReadTsv(in);
      } catch (const FormatError& e) {
        throw std::runtime_error(config.freq_path + ": " + e.what());
      }
    } else {
      std::vector<std::vector<std::string>> corpus;
      corpus.reserve(joined.units.size());
      for (const ParallelUnit& unit : joined.units) {
        corpus.push_back(unit.source_tokens);
      }
      table = FrequencyTable::Build(corpus);
    }
    if (table->contains(std::string(kBlankToken))) {
      throw std::runtime_error("frequency table contains the placeholder " +
                               std::string(kBlankToken));
    }
  }
  const FrequencyTable* table_ptr = table ? &*table : nullptr;

  std::ofstream out_source = OpenOutput(config.out_source_path);
  std::ofstream out_target = OpenOutput(config.out_target_path);
  std::ofstream out_mask = OpenOutput(config.out_mask_path);

  RunStats stats;
  stats.sentences_in = joined.sentences_in;
  stats.tree_errors = joined.tree_errors;
  stats.join_errors = joined.join_errors;
  stats.sentences_skipped = joined.tree_errors + joined.join_errors;
  stats.sentences_out = joined.units.size();
  stats.pairs_per_sentence = config.copies + (config.keep_original ? 1 : 0);

  const auto& units = joined.units;
  std::vector<UnitOutput> chunk;
  for (std::size_t begin = 0; begin < units.size(); begin += kChunkSize) {
    const std::size_t count = std::min(kChunkSize, units.size() - begin);
    chunk.assign(count, UnitOutput{});

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
      try {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          chunk[i].records = AugmentUnit(units[begin + i], config, table_ptr,
                                         0, &chunk[i].stats);
        }
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    };
    const std::size_t workers = std::min(config.jobs, count);
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < count; ++i) {
      const ParallelUnit& unit = units[begin + i];
      if (config.keep_original) {
        WriteTokens(out_source, unit.source_tokens);
        out_target << unit.target_line << '\n';
        WriteMask(out_mask, std::vector<bool>(unit.source_tokens.size()));
        ++stats.output_pairs;
      }
      for (const AugmentationRecord& record : chunk[i].records) {
        WriteTokens(out_source, record.tokens_out);
        out_target << unit.target_line << '\n';
        WriteMask(out_mask, record.dropout_mask);
        ++stats.output_pairs;
      }
      stats.Merge(chunk[i].stats);
    }
  }

  out_source.flush();
  out_target.flush();
  out_mask.flush();
  if (!out_source || !out_target || !out_mask) {
    throw std::runtime_error("error writing augmented corpus");
  }
  if (!config.out_stats_path.empty()) {
    std::ofstream out_stats = OpenOutput(config.out_stats_path);
    out_stats << stats.ToJson();
    if (!out_stats) {
      throw std::runtime_error("cannot write " + config.out_stats_path);
    }
  }
  return stats;
}

}  // namespace syntaug
