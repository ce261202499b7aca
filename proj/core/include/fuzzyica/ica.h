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

#ifndef FUZZYICA_ICA_H_
#define FUZZYICA_ICA_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "fuzzyica/model.h"
#include "fuzzyica/penalty.h"

namespace fuzzyica {

// Imperialist Competitive Algorithm over the box [0, upper]. Costs follow the
// minimization convention throughout: a lower cost is a stronger country.

using Rng = std::mt19937_64;
using CostFunction = std::function<double(std::span<const double>)>;

struct Country {
  std::vector<double> position;
  double cost = 0.0;
};

struct Empire {
  Country imperialist;
  std::vector<Country> colonies;
};

// How a colony moves toward its imperialist, x += u * beta * (imp - x):
//   kAlongLine      one u ~ U(0, 1) for the whole move, so the colony stays on
//                   the segment through the imperialist (and on any affine
//                   constraint both already satisfy, up to clamping);
//   kPerCoordinate  an independent u per coordinate.
enum class AssimilationMode { kAlongLine, kPerCoordinate };

// What happens to a revolting colony:
//   kTransfer  moves an amount ~ N(0, scale * (U_a + U_b) / 2) from one
//              random asset b to another a, clipped so both stay in the box;
//              the allocation total is unchanged;
//   kRedraw    redraws the whole position uniformly in the box.
enum class RevolutionMode { kTransfer, kRedraw };

struct IcaConfig {
  int n_countries = 100;
  int n_imperialists = 10;
  double revolution_rate = 0.2;
  int max_iterations = 25;
  // Weight of the colonies' mean cost in an empire's total cost.
  double epsilon = 0.05;
  // Colonies move by u * assimilation_beta * (imperialist - colony),
  // u ~ U(0, 1) per coordinate.
  double assimilation_beta = 2.0;
  AssimilationMode assimilation = AssimilationMode::kAlongLine;
  RevolutionMode revolution = RevolutionMode::kTransfer;
  // Standard deviation of a transfer, relative to the mean bound of the pair.
  double revolution_scale = 0.2;
  std::uint64_t seed = 1;

  // Throws ValidationError.
  void Validate() const;
};

struct IterationRecord {
  int iteration = 0;
  double best_cost = 0.0;
  int empires = 0;
};

struct RunReport {
  // Best country ever evaluated, as found (not repaired).
  std::vector<double> best_position;
  double best_cost = 0.0;
  // -best_cost: the penalized objective of best_position.
  double best_objective = 0.0;
  // best_position projected onto the budget and box, and its plain objective.
  std::vector<double> repaired_position;
  double repaired_objective = 0.0;
  ResidualReport residuals;
  // Entry 0 is the initial population, then one per iteration.
  std::vector<IterationRecord> trace;
  std::uint64_t seed = 0;
};

// Called after initialization and after every iteration with the current
// empires. Lets callers audit invariants without exposing the loop.
using IterationObserver =
    std::function<void(int iteration, std::span<const Empire> empires)>;

// n_countries positions drawn uniformly per coordinate in [0, upper[j]].
std::vector<Country> InitializeCountries(const IcaConfig& config,
                                         std::span<const double> upper,
                                         const CostFunction& cost, Rng& rng);

// Normalized power of each imperialist (or empire) from its cost:
// C_n = c_n - max_i c_i, p_n = C_n / sum_i C_i. Every p_n >= 0 and they sum
// to 1; when all costs are equal the powers are uniform.
std::vector<double> NormalizedPowers(std::span<const double> costs);

// Largest-remainder apportionment of `total` items by `powers` (which sum to
// 1). Counts sum exactly to `total`; remainder ties go to the lower index.
std::vector<int> ApportionColonies(std::span<const double> powers, int total);

// The n_imperialists cheapest countries become imperialists, and the rest are
// shuffled and dealt out in ApportionColonies(NormalizedPowers(...)) blocks.
// Throws std::invalid_argument if there are not more countries than
// imperialists.
std::vector<Empire> FormEmpires(std::vector<Country> countries,
                                const IcaConfig& config, Rng& rng);

// One colony move toward `imperialist`, clamped to [0, upper]. `steps` holds
// the uniform draw for each coordinate.
void AssimilateColony(std::span<double> colony,
                      std::span<const double> imperialist,
                      double assimilation_beta, std::span<const double> steps,
                      std::span<const double> upper);

void Assimilate(Empire& empire, const IcaConfig& config,
                std::span<const double> upper, const CostFunction& cost,
                Rng& rng);

// Budget-preserving transfer between two distinct coordinates (see
// RevolutionMode::kTransfer). No-op for fewer than two coordinates.
void TransferRevolution(std::span<double> position,
                        std::span<const double> upper, double scale, Rng& rng);

// Each colony, with probability revolution_rate, is revolted according to
// config.revolution.
void Revolve(Empire& empire, const IcaConfig& config,
             std::span<const double> upper, const CostFunction& cost,
             Rng& rng);

// Swaps the imperialist with its cheapest colony if that colony is strictly
// cheaper. Returns true on a swap.
bool Exchange(Empire& empire);

// cost(imperialist) + epsilon * mean(cost(colonies)); the imperialist's cost
// alone when there are no colonies.
double EmpirePower(const Empire& empire, double epsilon);

// Index of the empire that takes the contested colony, by roulette over
// NormalizedPowers(total_costs).
std::size_t SelectCompetitionWinner(std::span<const double> total_costs,
                                    Rng& rng);

// One round of imperialistic competition. The weakest colony of the weakest
// empire (highest EmpirePower) moves to a roulette-selected empire; if the
// weakest empire has no colonies left, its imperialist moves instead and the
// empire is removed. No-op with fewer than two empires.
void Compete(std::vector<Empire>& empires, double epsilon, Rng& rng);

// Runs the loop assimilate -> revolve -> exchange -> compete until
// max_iterations or a single surviving empire, over the penalized objective
// of `lp`. A pure function of its arguments.
RunReport RunIca(const DeterministicLP& lp, const PenaltyConfig& penalty,
                 const IcaConfig& config,
                 const IterationObserver& observer = nullptr);

}  // namespace fuzzyica

#endif  // FUZZYICA_ICA_H_
