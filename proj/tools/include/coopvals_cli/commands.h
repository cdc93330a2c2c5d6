// Copyright 2026 The coopvals Authors
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

#ifndef COOPVALS_CLI_COMMANDS_H_
#define COOPVALS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace coopvals::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

// Runs `coopvals <args...>` (args excludes the program name) and returns the
// exit code. Reports go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coopvals::cli

#endif  // COOPVALS_CLI_COMMANDS_H_
