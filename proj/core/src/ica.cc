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

#include "fuzzyica/ica.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fuzzyica/errors.h"

namespace fuzzyica {
namespace {

double Uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

void RandomPosition(std::span<const double> upper, Rng& rng,
                    std::vector<double>& out) {
  out.resize(upper.size());
  for (std::size_t j = 0; j < upper.size(); ++j) {
    out[j] = upper[j] * Uniform01(rng);
  }
}

std::size_t Roulette(std::span<const double> probabilities, Rng& rng) {
  const double r = Uniform01(rng);
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    acc += probabilities[i];
    last_positive = i;
    if (r < acc) return i;
  }
  // r landed in the rounding slack above the cumulative sum.
  return last_positive;
}

std::vector<double> TotalPowers(std::span<const Empire> empires,
                                double epsilon) {
  std::vector<double> powers;
  powers.reserve(empires.size());
  for (const Empire& e : empires) powers.push_back(EmpirePower(e, epsilon));
  return powers;
}

}  // namespace

void IcaConfig::Validate() const {
  if (n_imperialists < 1 || n_imperialists >= n_countries) {
    throw ValidationError("need 1 <= imperialists < countries");
  }
  if (!(revolution_rate >= 0.0 && revolution_rate <= 1.0)) {
    throw ValidationError("revolution rate must lie in [0, 1]");
  }
  if (max_iterations < 0) {
    throw ValidationError("max iterations must be >= 0");
  }
  if (!(epsilon > 0.0 && epsilon < 0.1)) {
    throw ValidationError("epsilon must lie in (0, 0.1)");
  }
  if (!(assimilation_beta > 1.0) || !std::isfinite(assimilation_beta)) {
    throw ValidationError("assimilation beta must exceed 1");
  }
  if (!(revolution_scale > 0.0) || !std::isfinite(revolution_scale)) {
    throw ValidationError("revolution scale must be positive");
  }
}

std::vector<Country> InitializeCountries(const IcaConfig& config,
                                         std::span<const double> upper,
                                         const CostFunction& cost, Rng& rng) {
  std::vector<Country> countries(static_cast<std::size_t>(config.n_countries));
  for (Country& c : countries) {
    RandomPosition(upper, rng, c.position);
    c.cost = cost(c.position);
  }
  return countries;
}

std::vector<double> NormalizedPowers(std::span<const double> costs) {
  const std::size_t n = costs.size();
  if (n == 0) return {};
  const double worst = *std::max_element(costs.begin(), costs.end());
  std::vector<double> powers(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    powers[i] = costs[i] - worst;
    sum += powers[i];
  }
  if (sum == 0.0) {
    std::fill(powers.begin(), powers.end(), 1.0 / static_cast<double>(n));
    return powers;
  }
  // Numerator and denominator are both <= 0.
  for (double& p : powers) p /= sum;
  return powers;
}

std::vector<int> ApportionColonies(std::span<const double> powers, int total) {
  const std::size_t n = powers.size();
  std::vector<int> counts(n, 0);
  if (n == 0 || total <= 0) return counts;
  std::vector<double> remainder(n);
  int assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double quota = powers[i] * total;
    counts[i] = static_cast<int>(std::floor(quota));
    remainder[i] = quota - counts[i];
    assigned += counts[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return remainder[a] > remainder[b];
                   });
  // Powers summing to slightly above 1 can overshoot by one; trim from the
  // smallest remainders.
  for (std::size_t k = n; assigned > total && k-- > 0;) {
    if (counts[order[k]] > 0) {
      --counts[order[k]];
      --assigned;
    }
  }
  for (std::size_t k = 0; assigned < total; k = (k + 1) % n) {
    ++counts[order[k]];
    ++assigned;
  }
  return counts;
}

std::vector<Empire> FormEmpires(std::vector<Country> countries,
                                const IcaConfig& config, Rng& rng) {
  const auto n_imp = static_cast<std::size_t>(config.n_imperialists);
  if (config.n_imperialists < 1 || countries.size() <= n_imp) {
    throw std::invalid_argument("FormEmpires: need more countries than "
                                "imperialists");
  }
  std::stable_sort(countries.begin(), countries.end(),
                   [](const Country& a, const Country& b) {
                     return a.cost < b.cost;
                   });
  std::vector<Empire> empires(n_imp);
  std::vector<double> costs(n_imp);
  for (std::size_t i = 0; i < n_imp; ++i) {
    empires[i].imperialist = std::move(countries[i]);
    costs[i] = empires[i].imperialist.cost;
  }
  std::vector<Country> colonies(std::make_move_iterator(countries.begin() + n_imp),
                                std::make_move_iterator(countries.end()));
  std::shuffle(colonies.begin(), colonies.end(), rng);

  const std::vector<int> counts = ApportionColonies(
      NormalizedPowers(costs), static_cast<int>(colonies.size()));
  std::size_t next = 0;
  for (std::size_t i = 0; i < n_imp; ++i) {
    for (int k = 0; k < counts[i]; ++k) {
      empires[i].colonies.push_back(std::move(colonies[next++]));
    }
  }
  return empires;
}

void AssimilateColony(std::span<double> colony,
                      std::span<const double> imperialist,
                      double assimilation_beta, std::span<const double> steps,
                      std::span<const double> upper) {
  for (std::size_t d = 0; d < colony.size(); ++d) {
    const double moved =
        colony[d] + steps[d] * assimilation_beta * (imperialist[d] - colony[d]);
    colony[d] = std::clamp(moved, 0.0, upper[d]);
  }
}

void Assimilate(Empire& empire, const IcaConfig& config,
                std::span<const double> upper, const CostFunction& cost,
                Rng& rng) {
  std::vector<double> steps(upper.size());
  for (Country& colony : empire.colonies) {
    if (config.assimilation == AssimilationMode::kAlongLine) {
      std::fill(steps.begin(), steps.end(), Uniform01(rng));
    } else {
      for (double& u : steps) u = Uniform01(rng);
    }
    AssimilateColony(colony.position, empire.imperialist.position,
                     config.assimilation_beta, steps, upper);
    colony.cost = cost(colony.position);
  }
}

void TransferRevolution(std::span<double> position,
                        std::span<const double> upper, double scale, Rng& rng) {
  const std::size_t n = position.size();
  if (n < 2) return;
  const std::size_t to = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  std::size_t from = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
  if (from >= to) ++from;
  const double sigma = scale * 0.5 * (upper[to] + upper[from]);
  double amount = sigma * std::normal_distribution<double>(0.0, 1.0)(rng);
  const double lo = std::max(-position[to], position[from] - upper[from]);
  const double hi = std::min(upper[to] - position[to], position[from]);
  amount = std::clamp(amount, std::min(lo, hi), std::max(lo, hi));
  position[to] += amount;
  position[from] -= amount;
}

void Revolve(Empire& empire, const IcaConfig& config,
             std::span<const double> upper, const CostFunction& cost,
             Rng& rng) {
  for (Country& colony : empire.colonies) {
    if (!(Uniform01(rng) < config.revolution_rate)) continue;
    if (config.revolution == RevolutionMode::kTransfer) {
      TransferRevolution(colony.position, upper, config.revolution_scale, rng);
    } else {
      RandomPosition(upper, rng, colony.position);
    }
    colony.cost = cost(colony.position);
  }
}

bool Exchange(Empire& empire) {
  if (empire.colonies.empty()) return false;
  auto best = std::min_element(
      empire.colonies.begin(), empire.colonies.end(),
      [](const Country& a, const Country& b) { return a.cost < b.cost; });
  if (!(best->cost < empire.imperialist.cost)) return false;
  std::swap(*best, empire.imperialist);
  return true;
}

double EmpirePower(const Empire& empire, double epsilon) {
  if (empire.colonies.empty()) return empire.imperialist.cost;
  double sum = 0.0;
  for (const Country& c : empire.colonies) sum += c.cost;
  return empire.imperialist.cost +
         epsilon * sum / static_cast<double>(empire.colonies.size());
}

std::size_t SelectCompetitionWinner(std::span<const double> total_costs,
                                    Rng& rng) {
  return Roulette(NormalizedPowers(total_costs), rng);
}

void Compete(std::vector<Empire>& empires, double epsilon, Rng& rng) {
  if (empires.size() < 2) return;
  const std::vector<double> powers = TotalPowers(empires, epsilon);
  const auto weakest = static_cast<std::size_t>(
      std::max_element(powers.begin(), powers.end()) - powers.begin());
  std::size_t winner = SelectCompetitionWinner(powers, rng);

  Empire& loser = empires[weakest];
  if (!loser.colonies.empty()) {
    auto worst = std::max_element(
        loser.colonies.begin(), loser.colonies.end(),
        [](const Country& a, const Country& b) { return a.cost < b.cost; });
    Country taken = std::move(*worst);
    loser.colonies.erase(worst);
    empires[winner].colonies.push_back(std::move(taken));
    if (!loser.colonies.empty()) return;
  }

  // The weakest empire has nothing left but its imperialist: it collapses.
  if (winner == weakest) {
    std::vector<double> others;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < empires.size(); ++i) {
      if (i == weakest) continue;
      others.push_back(powers[i]);
      index.push_back(i);
    }
    winner = index[SelectCompetitionWinner(others, rng)];
  }
  empires[winner].colonies.push_back(std::move(empires[weakest].imperialist));
  empires.erase(empires.begin() + static_cast<std::ptrdiff_t>(weakest));
}

RunReport RunIca(const DeterministicLP& lp, const PenaltyConfig& penalty,
                 const IcaConfig& config, const IterationObserver& observer) {
  config.Validate();
  penalty.Validate();
  const std::span<const double> upper = lp.upper_bounds;

  RunReport report;
  report.seed = config.seed;
  report.best_cost = std::numeric_limits<double>::infinity();
  const CostFunction cost = [&](std::span<const double> x) {
    const double c = -PenalizedObjective(lp, x, penalty);
    if (c < report.best_cost) {
      report.best_cost = c;
      report.best_position.assign(x.begin(), x.end());
    }
    return c;
  };

  Rng rng(config.seed);
  std::vector<Empire> empires =
      FormEmpires(InitializeCountries(config, upper, cost, rng), config, rng);
  auto record = [&](int iteration) {
    report.trace.push_back(
        {iteration, report.best_cost, static_cast<int>(empires.size())});
    if (observer) observer(iteration, empires);
  };
  record(0);

  for (int it = 1; it <= config.max_iterations; ++it) {
    for (Empire& empire : empires) {
      Assimilate(empire, config, upper, cost, rng);
      Revolve(empire, config, upper, cost, rng);
      Exchange(empire);
    }
    Compete(empires, config.epsilon, rng);
    record(it);
    if (empires.size() == 1) break;
  }

  report.best_objective = -report.best_cost;
  report.repaired_position =
      Repair(report.best_position, lp.total_fund, lp.upper_bounds);
  report.repaired_objective = Objective(lp, report.repaired_position);
  report.residuals = Residuals(lp, report.repaired_position);
  return report;
}

}  // namespace fuzzyica
