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

#ifndef FUZZYICA_PENALTY_H_
#define FUZZYICA_PENALTY_H_

#include <span>
#include <vector>

#include "fuzzyica/model.h"

namespace fuzzyica {

// Exterior penalty settings. Violations cost factor * |violation|^exponent.
struct PenaltyConfig {
  // Budget equality.
  double eq_factor = 1e3;
  double eq_exponent = 2.0;
  // Return threshold, only when enforce_threshold is set.
  double ineq_factor = 1e3;
  double ineq_exponent = 2.0;
  bool enforce_threshold = false;

  // Throws ValidationError unless factors > 0 and exponents are 1 or 2.
  void Validate() const;
};

// c.x - [ineq_factor * max(0, threshold - c.x)^ineq_exponent
//        + eq_factor * |sum(x) - total_fund|^eq_exponent]
// (the threshold term only when cfg.enforce_threshold). Maximization sense.
// Box bounds are not penalized.
double PenalizedObjective(const DeterministicLP& lp, std::span<const double> x,
                          const PenaltyConfig& cfg);

// Projects x onto {sum(x) = total, 0 <= x <= upper}: clamps to the box, then
// spreads a deficit over the remaining headroom (or a surplus over the
// current mass) proportionally. Points already within 1e-12 * total of the
// budget are returned clamped but otherwise untouched, which makes the map
// idempotent.
//
// Throws InfeasibleError if sum(upper) < total, std::invalid_argument on a
// length mismatch.
std::vector<double> Repair(std::span<const double> x, double total,
                           std::span<const double> upper);

}  // namespace fuzzyica

#endif  // FUZZYICA_PENALTY_H_
