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

#ifndef FUZZYICA_LP_ORACLE_H_
#define FUZZYICA_LP_ORACLE_H_

#include <vector>

#include "fuzzyica/model.h"

namespace fuzzyica {

enum class SolveStatus { kOptimal, kBudgetInfeasible, kThresholdInfeasible };

const char* ToString(SolveStatus status);

struct ExactSolution {
  std::vector<double> x;
  double objective = 0.0;
  bool threshold_satisfied = false;
  SolveStatus status = SolveStatus::kBudgetInfeasible;
};

// Exact optimum of a DeterministicLP. The feasible set is a box cut by one
// budget hyperplane, so filling assets to their bounds in order of decreasing
// coefficient (ties by ascending index) is optimal; at most one asset ends up
// partially filled.
//
// kThresholdInfeasible still carries the optimal allocation: it is the best
// possible return, and it falls short of the threshold.
ExactSolution SolveExact(const DeterministicLP& lp);

// Enumerates every allocation on the lattice grid_step * Z^n that meets the
// budget and bounds, and returns the best. Ties keep the first allocation in
// lexicographic order of (x_0 descending, x_1 descending, ...).
//
// Requires at most 6 assets and that grid_step divides the budget and every
// bound (to 1e-9). Throws std::invalid_argument on violated preconditions and
// std::runtime_error once the search passes 1e8 nodes.
ExactSolution BruteForce(const DeterministicLP& lp, double grid_step);

}  // namespace fuzzyica

#endif  // FUZZYICA_LP_ORACLE_H_
