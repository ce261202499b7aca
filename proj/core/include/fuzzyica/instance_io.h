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

#ifndef FUZZYICA_INSTANCE_IO_H_
#define FUZZYICA_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "fuzzyica/errors.h"
#include "fuzzyica/model.h"

namespace fuzzyica {

// Instance files are JSON objects:
//
//   {
//     "assets": [{"r0": .., "r1": .., "r2": .., "beta": .., "gamma": ..}, ...],
//     "target": {"r0": .., "r1": .., "r2": .., "beta": .., "gamma": ..},
//     "total_fund": ..,
//     "upper_bounds": [..],
//     "factor": {"mean": .., "std_dev": ..},
//     "reference": {"kind": "power", "exponent": ..}     (optional)
//   }
//
// "reference" defaults to the linear shape and is only written when it
// differs from it.

// Syntax errors; the message carries line and column.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Throws ParseError, ValidationError (missing or invalid field, named in the
// message), or InfeasibleError (budget above the sum of bounds).
PortfolioInstance ParseInstance(std::string_view text);
PortfolioInstance LoadInstance(const std::string& path);

std::string WriteInstance(const PortfolioInstance& instance);

// Five securities plus the target return 200 * (1.25 + 0.25 t, 1.25 + 0.25 t,
// 0.2, 0.2), budget 200, 60 per asset, standard normal factor. This is the
// `paper_table1` fixture shipped in data/.
PortfolioInstance PaperExampleInstance();

}  // namespace fuzzyica

#endif  // FUZZYICA_INSTANCE_IO_H_
