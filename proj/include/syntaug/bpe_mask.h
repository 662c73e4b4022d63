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

#ifndef SYNTAUG_BPE_MASK_H_
#define SYNTAUG_BPE_MASK_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace syntaug {

inline constexpr char kDefaultBpeMarker[] = "@@";

// Parses a sidecar line of space-separated 0/1 flags. Throws
// std::invalid_argument on any other token.
std::vector<bool> ParseMaskLine(const std::string& line);

// Joins subword pieces back into words: a piece ending in `marker` is glued
// to the following piece with the marker removed.
std::vector<std::string> DesegmentBpe(const std::string& line,
                                      const std::string& marker =
                                          kDefaultBpeMarker);

// Replicates each word's flag onto all of its subword pieces. Throws
// std::invalid_argument if the mask length differs from the word count.
std::vector<bool> ExpandMask(const std::vector<bool>& word_mask,
                             const std::string& bpe_line,
                             const std::string& marker = kDefaultBpeMarker);

// Line-by-line expansion over whole files. Throws FormatError naming the
// first bad line; returns the number of lines written.
std::size_t ExpandMaskStream(std::istream& masks, std::istream& bpe,
                             std::ostream& out,
                             const std::string& marker = kDefaultBpeMarker);

}  // namespace syntaug

#endif  // SYNTAUG_BPE_MASK_H_
