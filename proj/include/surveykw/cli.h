// Copyright 2026 The surveykw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The surveykw command line: extract, baseline-tfidf and evaluate.
//
// Every flag can also be given in a --config file of `key = value` lines
// whose keys are the flag names with '-' replaced by '_'. Flags on the
// command line override the file.

#ifndef SURVEYKW_CLI_H_
#define SURVEYKW_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace surveykw {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

// Runs one invocation. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace surveykw

#endif  // SURVEYKW_CLI_H_
