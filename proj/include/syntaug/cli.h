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

#ifndef SYNTAUG_CLI_H_
#define SYNTAUG_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace syntaug {

// Prefix for environment overrides, e.g. SYNTAUG_SEED=7.
inline constexpr char kEnvPrefix[] = "SYNTAUG_";

// Runs one command line (without the program name). Option values resolve
// as built-in defaults < --config file < SYNTAUG_* environment < flags.
// Returns the process exit status.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace syntaug

#endif  // SYNTAUG_CLI_H_
