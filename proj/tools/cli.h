// Copyright 2026 The stablenash Authors
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

#ifndef STABLENASH_TOOLS_CLI_H_
#define STABLENASH_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace stablenash::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitUsage = 64;

// Runs one command. `args` excludes the program name. JSON goes to `out`,
// diagnostics to `err`; a game is read from `in` unless --game is given.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace stablenash::cli

#endif  // STABLENASH_TOOLS_CLI_H_
