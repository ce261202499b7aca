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

#ifndef FUZZYICA_NECESSITY_H_
#define FUZZYICA_NECESSITY_H_

#include "fuzzyica/fuzzy_number.h"

namespace fuzzyica {

// N(a >= f) for a crisp threshold f, closed form:
//   1                          if f <= a0 - beta
//   1 - L((a0 - f) / beta)     if a0 - beta < f <= a0
//   0                          if f > a0
// so that N(a >= f) >= eta  <=>  f <= a0 - beta * L*(1 - eta).
double NecessityGeqScalar(const LRFuzzyNumber& a, double f);

// N(a >= b) = inf_u max{1 - mu_a(u), sup_{v <= u} mu_b(v)}, evaluated by brute
// force on a uniform grid of `grid_points` points spanning both supports (plus
// the peak and support breakpoints). The error is at most the membership
// variation of `a` over one grid step. Crisp operands reduce to point
// evaluation. This is a verification oracle, not a fast path.
//
// Throws std::invalid_argument if grid_points < 100.
double NecessityGeqFuzzy(const LRFuzzyNumber& a, const LRFuzzyNumber& b,
                         int grid_points = 1000);

}  // namespace fuzzyica

#endif  // FUZZYICA_NECESSITY_H_
