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

#ifndef SYNTAUG_ERRORS_H_
#define SYNTAUG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syntaug {

// Malformed CoNLL-U line (wrong column count, non-integer field).
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A sentence whose head links do not form a single-rooted tree.
class TreeError : public std::runtime_error {
 public:
  TreeError(std::size_t sentence, const std::string& what)
      : std::runtime_error("sentence " + std::to_string(sentence) + ": " +
                           what),
        sentence_(sentence),
        reason_(what) {}
  std::size_t sentence() const { return sentence_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t sentence_;
  std::string reason_;
};

// Source, parse and target streams disagree in sentence count.
class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse surface forms differ from the whitespace-tokenized source line.
class JoinError : public std::runtime_error {
 public:
  JoinError(std::size_t ordinal, const std::string& what)
      : std::runtime_error("ordinal " + std::to_string(ordinal) + ": " + what),
        ordinal_(ordinal) {}
  std::size_t ordinal() const { return ordinal_; }

 private:
  std::size_t ordinal_;
};

class OovError : public std::runtime_error {
 public:
  explicit OovError(const std::string& word)
      : std::runtime_error("word not in frequency table: " + word) {}
};

}  // namespace syntaug

#endif  // SYNTAUG_ERRORS_H_
