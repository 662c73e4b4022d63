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

#include "syntaug/cli.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "syntaug/bpe_mask.h"
#include "syntaug/conllu.h"
#include "syntaug/errors.h"
#include "syntaug/frequency.h"
#include "syntaug/pipeline.h"

namespace syntaug {
namespace {

constexpr char kConfigHelp[] =
    "Options may also come from --config FILE (flat TOML key = value, keys "
    "named like the long flags) and from SYNTAUG_<FLAG> environment "
    "variables. Precedence: defaults < config < environment < flags.";

std::string EnvName(const std::string& flag) {
  std::string name = kEnvPrefix;
  for (const char c : flag) {
    name += c == '-' ? '_' : static_cast<char>(std::toupper(
                                 static_cast<unsigned char>(c)));
  }
  return name;
}

// Removes "--config FILE" / "--config=FILE" from `args` and returns FILE.
std::string ExtractConfigPath(std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config", 1, 0);
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      ++i;
    }
  }
  return path;
}

// Turns config-file and environment settings into flags placed ahead of
// the user's own flags; options take the last value given.
std::vector<std::string> ResolveArguments(const CLI::App& sub,
                                          const std::string& config_path,
                                          std::vector<std::string> user) {
  std::vector<std::string> resolved{sub.get_name()};
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw CLI::FileError::Missing(config_path);
    for (const CLI::ConfigItem& item : CLI::ConfigTOML().from_config(in)) {
      if (!item.parents.empty()) {
        throw CLI::ConversionError("config sections are not supported: " +
                                   item.fullname());
      }
      resolved.push_back("--" + item.name);
      for (const std::string& value : item.inputs) resolved.push_back(value);
    }
  }
  for (const CLI::Option* opt : sub.get_options()) {
    const auto& names = opt->get_lnames();
    if (names.empty()) continue;
    if (const char* value = std::getenv(EnvName(names.front()).c_str())) {
      resolved.push_back("--" + names.front());
      resolved.push_back(value);
    }
  }
  resolved.insert(resolved.end(), user.begin() + 1, user.end());
  return resolved;
}

int Fail(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return 1;
}

std::vector<std::vector<std::string>> ReadTokenizedCorpus(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> corpus;
  std::string line;
  while (std::getline(in, line)) corpus.push_back(SplitWhitespace(line));
  return corpus;
}

struct BuildFreqArgs {
  std::string corpus;
  std::string output;
};

int CmdBuildFreq(const BuildFreqArgs& args, std::ostream& out,
                 std::ostream& err) {
  try {
    const auto corpus = ReadTokenizedCorpus(args.corpus);
    const FrequencyTable table = FrequencyTable::Build(corpus);
    std::ofstream tsv(args.output, std::ios::binary | std::ios::trunc);
    if (!tsv) return Fail(err, "cannot write " + args.output);
    table.WriteTsv(tsv);
    tsv.flush();
    if (!tsv) return Fail(err, "error writing " + args.output);
    out << "vocabulary size: " << table.size() << "\n"
        << "tokens: " << table.total() << "\n";
    return 0;
  } catch (const std::exception& e) {
    return Fail(err, args.corpus + ": " + e.what());
  }
}

int CmdAugment(const PipelineConfig& config, std::ostream& out,
               std::ostream& err) {
  try {
    const RunStats stats = RunPipeline(config);
    out << "sentences in: " << stats.sentences_in
        << ", out: " << stats.sentences_out
        << ", skipped: " << stats.sentences_skipped << "\n"
        << "output pairs: " << stats.output_pairs << "\n"
        << "selection rate: " << stats.selection_rate() << "\n";
    return 0;
  } catch (const std::exception& e) {
    return Fail(err, e.what());
  }
}

struct ValidateArgs {
  std::string conllu;
  std::string source;
};

int CmdValidate(const ValidateArgs& args, std::ostream& out,
                std::ostream& err) {
  std::vector<std::string> source;
  std::vector<ConlluBlock> blocks;
  try {
    std::ifstream src(args.source, std::ios::binary);
    if (!src) return Fail(err, "cannot open " + args.source);
    for (std::string line; std::getline(src, line);) source.push_back(line);
    std::ifstream parses(args.conllu, std::ios::binary);
    if (!parses) return Fail(err, "cannot open " + args.conllu);
    ConlluReader reader(parses);
    while (auto block = reader.Next()) blocks.push_back(std::move(*block));
  } catch (const FormatError& e) {
    return Fail(err, args.conllu + ": " + e.what());
  }

  std::size_t problems = 0;
  if (source.size() != blocks.size()) {
    err << "count mismatch: source has " << source.size()
        << " lines, parse file has " << blocks.size() << " sentences\n";
    ++problems;
  }
  const std::size_t common = std::min(source.size(), blocks.size());
  const std::span<const std::string> lines(source.data(), common);
  const JoinResult joined =
      JoinCorpus(lines, std::span<const ConlluBlock>(blocks.data(), common),
                 lines, {BadParsePolicy::kSkip, BadParsePolicy::kSkip});
  for (const std::string& problem : joined.problems) err << problem << "\n";
  problems += joined.problems.size();

  out << common << " sentences checked, " << joined.tree_errors
      << " bad parses, " << joined.join_errors << " surface mismatches\n";
  return problems == 0 ? 0 : 1;
}

struct ExpandMaskArgs {
  std::string mask;
  std::string bpe;
  std::string output;
  std::string marker = kDefaultBpeMarker;
};

int CmdExpandMask(const ExpandMaskArgs& args, std::ostream& out,
                  std::ostream& err) {
  std::ifstream masks(args.mask, std::ios::binary);
  if (!masks) return Fail(err, "cannot open " + args.mask);
  std::ifstream bpe(args.bpe, std::ios::binary);
  if (!bpe) return Fail(err, "cannot open " + args.bpe);
  std::ofstream expanded(args.output, std::ios::binary | std::ios::trunc);
  if (!expanded) return Fail(err, "cannot write " + args.output);
  try {
    const std::size_t lines =
        ExpandMaskStream(masks, bpe, expanded, args.marker);
    out << "expanded " << lines << " lines\n";
    return 0;
  } catch (const FormatError& e) {
    return Fail(err, args.mask + " / " + args.bpe + ": " + e.what());
  }
}

int CmdStats(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Fail(err, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  RunStats stats;
  try {
    stats = RunStats::FromJson(buffer.str());
  } catch (const std::exception& e) {
    return Fail(err, path + ": " + e.what());
  }

  out << "sentences in       " << stats.sentences_in << "\n"
      << "sentences out      " << stats.sentences_out << "\n"
      << "sentences skipped  " << stats.sentences_skipped << " (tree "
      << stats.tree_errors << ", join " << stats.join_errors << ")\n"
      << "output pairs       " << stats.output_pairs << "\n"
      << "tokens selected    " << stats.tokens_selected << " / "
      << stats.tokens_total << "\n"
      << "selection rate     " << std::fixed << std::setprecision(4)
      << stats.selection_rate() << "\n"
      << "clip events        " << stats.clip_events << "\n"
      << "oov replacements   " << stats.oov_replacements << "\n";
  if (!stats.depth_histogram.empty()) {
    out << "\n"
        << std::setw(6) << "depth" << std::setw(12) << "selected"
        << std::setw(12) << "total" << std::setw(10) << "rate"
        << std::setw(12) << "mean p^f" << "\n";
    for (const auto& [depth, bin] : stats.depth_histogram) {
      const double total =
          bin.total == 0 ? 1.0 : static_cast<double>(bin.total);
      out << std::setw(6) << depth << std::setw(12) << bin.selected
          << std::setw(12) << bin.total << std::setw(10)
          << static_cast<double>(bin.selected) / total << std::setw(12)
          << bin.sum_p_final / total << "\n";
    }
  }
  for (const std::string& problem : stats.Check()) {
    out << "warning: " << problem << "\n";
  }
  out.unsetf(std::ios::floatfield);
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Syntax-aware data augmentation for parallel corpora."};
  app.name("syntaug");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  BuildFreqArgs freq_args;
  auto* build_freq = app.add_subcommand(
      "build-freq", "Count unigram frequencies of a tokenized corpus.");
  build_freq->add_option("--corpus", freq_args.corpus,
                         "Space-tokenized text, one sentence per line")
      ->required();
  build_freq->add_option("--output", freq_args.output, "TSV output path")
      ->required();

  PipelineConfig config;
  std::string op = "blanking";
  std::string policy = "syntax";
  std::string on_bad_parse = "skip";
  std::string on_join_mismatch = "abort";
  auto* augment = app.add_subcommand(
      "augment", "Augment a parsed parallel corpus.");
  augment->footer(kConfigHelp);
  augment->add_option("--source", config.source_path,
                      "Source text, one space-tokenized sentence per line")
      ->required();
  augment->add_option("--conllu", config.conllu_path,
                      "CoNLL-U parses of the source")
      ->required();
  augment->add_option("--target", config.target_path, "Target text")
      ->required();
  augment->add_option("--freq", config.freq_path,
                      "Frequency TSV for replacement (default: built from "
                      "the source)");
  augment->add_option("--out-source", config.out_source_path)->required();
  augment->add_option("--out-target", config.out_target_path)->required();
  augment->add_option("--out-mask", config.out_mask_path,
                      "Dropout mask sidecar")
      ->required();
  augment->add_option("--out-stats", config.out_stats_path, "Stats JSON")
      ->required();
  augment->add_option("--op", op)
      ->check(CLI::IsMember({"blanking", "dropout", "replacement"}))
      ->capture_default_str();
  augment->add_option("--policy", policy)
      ->check(CLI::IsMember({"syntax", "uniform"}))
      ->capture_default_str();
  augment->add_option("--alpha", config.selection.alpha)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--rate", config.selection.rate)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  augment->add_option("--window", config.replacement.window)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--seed", config.seed)->capture_default_str();
  augment->add_option("--copies", config.copies)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--keep-original", config.keep_original)
      ->capture_default_str();
  augment->add_option("--jobs", config.jobs)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--on-bad-parse", on_bad_parse)
      ->check(CLI::IsMember({"skip", "abort"}))
      ->capture_default_str();
  augment->add_option("--on-join-mismatch", on_join_mismatch)
      ->check(CLI::IsMember({"skip", "abort"}))
      ->capture_default_str();

  std::string stats_path;
  auto* stats = app.add_subcommand("stats", "Summarize a stats JSON report.");
  stats->add_option("--input", stats_path)->required();

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand(
      "validate", "Check parses and their agreement with the source.");
  validate->add_option("--conllu", validate_args.conllu)->required();
  validate->add_option("--source", validate_args.source)->required();

  ExpandMaskArgs expand_args;
  auto* expand_mask = app.add_subcommand(
      "expand-mask", "Expand a word-level mask onto BPE subword pieces.");
  expand_mask->add_option("--mask", expand_args.mask)->required();
  expand_mask->add_option("--bpe", expand_args.bpe,
                          "BPE-segmented source")
      ->required();
  expand_mask->add_option("--output", expand_args.output)->required();
  expand_mask->add_option("--marker", expand_args.marker,
                          "Continuation suffix")
      ->capture_default_str();

  try {
    std::vector<std::string> argv = args;
    CLI::App* sub = nullptr;
    if (!argv.empty()) {
      for (CLI::App* candidate : app.get_subcommands({})) {
        if (candidate->get_name() == argv.front()) sub = candidate;
      }
    }
    if (sub != nullptr) {
      const std::string config_path = ExtractConfigPath(argv);
      argv = ResolveArguments(*sub, config_path, std::move(argv));
    }
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (*build_freq) return CmdBuildFreq(freq_args, out, err);
  if (*augment) {
    config.operation = ParseOperation(op);
    config.selection.kind = ParsePolicyKind(policy);
    config.join.on_bad_parse =
        on_bad_parse == "abort" ? BadParsePolicy::kAbort : BadParsePolicy::kSkip;
    config.join.on_mismatch = on_join_mismatch == "abort"
                                  ? BadParsePolicy::kAbort
                                  : BadParsePolicy::kSkip;
    err << "# resolved configuration\n" << augment->config_to_str(true, false);
    return CmdAugment(config, out, err);
  }
  if (*stats) return CmdStats(stats_path, out, err);
  if (*validate) return CmdValidate(validate_args, out, err);
  if (*expand_mask) return CmdExpandMask(expand_args, out, err);
  return 1;
}

}  // namespace syntaug
