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

#include "fuzzyica/necessity.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fuzzyica {

double NecessityGeqScalar(const LRFuzzyNumber& a, double f) {
  if (f > a.a0()) return 0.0;
  if (f <= a.a0() - a.beta()) return 1.0;
  return 1.0 - a.left().Evaluate((a.a0() - f) / a.beta());
}

double NecessityGeqFuzzy(const LRFuzzyNumber& a, const LRFuzzyNumber& b,
                         int grid_points) {
  if (grid_points < 100) {
    throw std::invalid_argument("NecessityGeqFuzzy needs >= 100 grid points");
  }
  const Interval sa = a.Support();
  const Interval sb = b.Support();
  const double lo = std::min(sa.lo, sb.lo);
  const double hi = std::max(sa.hi, sb.hi);

  std::vector<double> grid = {sa.lo, a.a0(), a.a1(), sa.hi,
                              sb.lo, b.a0(), b.a1(), sb.hi};
  if (hi > lo) {
    const double step = (hi - lo) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) grid.push_back(lo + i * step);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // Off the grid mu_a = 0, so the max is 1 there and cannot lower the inf.
  double inf = 1.0;
  double prefix_sup_b = 0.0;
  for (double u : grid) {
    prefix_sup_b = std::max(prefix_sup_b, b.Membership(u));
    inf = std::min(inf, std::max(1.0 - a.Membership(u), prefix_sup_b));
  }
  return inf;
}

}  // namespace fuzzyica
