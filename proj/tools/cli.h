// Copyright 2026 The fuzzyica Authors
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

#ifndef FUZZYICA_TOOLS_CLI_H_
#define FUZZYICA_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

namespace fuzzyica::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 2,
  kBudgetInfeasible = 3,
  kThresholdInfeasible = 4,
};

// "7", "1..20", "1,4,9" or combinations such as "1..5,9". Throws
// std::invalid_argument on malformed input or an empty/reversed range.
std::vector<std::uint64_t> ParseSeedList(std::string_view text);

// Entry point behind main(); writes the report to `out` (or --out) and
// diagnostics to `err`. Returns an ExitCode.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace fuzzyica::cli

#endif  // FUZZYICA_TOOLS_CLI_H_
