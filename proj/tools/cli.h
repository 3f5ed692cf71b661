// Copyright 2026 The phasenoise Authors
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

#ifndef PHASENOISE_TOOLS_CLI_H_
#define PHASENOISE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace phasenoise::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitRealization = 3,
  kExitVerification = 4,
  kExitConvergence = 5,
};

// Runs one command. `args` excludes the program name. Results go to `out`
// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phasenoise::cli

#endif  // PHASENOISE_TOOLS_CLI_H_
