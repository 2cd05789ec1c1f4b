// Copyright 2026 The sparsematch Authors
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

#ifndef SPARSEMATCH_CLI_H_
#define SPARSEMATCH_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsematch {

// Exit codes, grep style.
inline constexpr int kExitMatch = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitError = 2;

// Runs the command-line tool. `args` excludes the program name. Text is
// read from `in` when no input file (or "-") is given.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace sparsematch

#endif  // SPARSEMATCH_CLI_H_
