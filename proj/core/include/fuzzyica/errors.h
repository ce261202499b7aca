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

#ifndef FUZZYICA_ERRORS_H_
#define FUZZYICA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fuzzyica {

// Malformed input: a field violates its documented invariant. Messages name
// the offending field (and asset index, where there is one).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// The budget equality cannot be met: sum of upper bounds < total fund.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace fuzzyica

#endif  // FUZZYICA_ERRORS_H_
