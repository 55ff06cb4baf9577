// Copyright 2026 The erent Authors
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

// Command-line front end: solve, pareto, verify and gen.

#ifndef ERENT_TOOLS_CLI_H_
#define ERENT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace erent {

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 2,
  kExitUsage = 3,
  kExitMismatch = 4,
};

// `args` excludes the program name. Documents go to `out` (or --output),
// human-readable notes and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erent

#endif  // ERENT_TOOLS_CLI_H_
