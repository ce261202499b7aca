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

#include "fuzzyica/penalty.h"

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "fuzzyica/errors.h"
#include "fuzzyica/instance_io.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fuzzyica {
namespace {

DeterministicLP ExampleLP(double level) {
  return Reformulate(PaperExampleInstance(), {level, level});
}

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

TEST(PenalizedObjectiveTest, Examples) {
  const DeterministicLP lp = ExampleLP(0.1);
  const PenaltyConfig cfg;
  const std::vector<double> feasible = {60, 0, 20, 60, 60};
  EXPECT_EQ(PenalizedObjective(lp, feasible, cfg), Objective(lp, feasible));

  const std::vector<double> over_by_one = {60, 1, 20, 60, 60};
  EXPECT_NEAR(PenalizedObjective(lp, over_by_one, cfg),
              Objective(lp, over_by_one) - 1000.0, 1e-9);

  EXPECT_EQ(PenalizedObjective(lp, std::vector<double>(5, 0.0), cfg), -4e7);
}

TEST(PenalizedObjectiveTest, ThresholdTermOnlyWhenEnforced) {
  const DeterministicLP lp = ExampleLP(0.9);
  const std::vector<double> x = {0, 60, 60, 20, 60};
  PenaltyConfig cfg;
  EXPECT_EQ(PenalizedObjective(lp, x, cfg), Objective(lp, x));
  cfg.enforce_threshold = true;
  cfg.ineq_exponent = 1.0;
  const double shortfall = lp.threshold - Objective(lp, x);
  EXPECT_NEAR(PenalizedObjective(lp, x, cfg),
              Objective(lp, x) - 1000.0 * shortfall, 1e-9);
}

TEST(PenaltyConfigTest, Validation) {
  PenaltyConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.eq_exponent = 3;
  EXPECT_THROW(cfg.Validate(), ValidationError);
  cfg = PenaltyConfig{};
  cfg.eq_factor = 0;
  EXPECT_THROW(cfg.Validate(), ValidationError);
}

TEST(PenalizedObjectiveTest, LargeEnoughFactorRanksFeasibleFirst) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const PortfolioInstance instance = testing::RandomInstance(rng, 5);
    const DeterministicLP lp = Reformulate(instance, {0.3, 0.3});
    std::vector<double> x(lp.size()), y;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = lp.upper_bounds[j] * u(rng);
    if (std::abs(Sum(x) - lp.total_fund) < 1e-6) continue;
    y = Repair(x, lp.total_fund, lp.upper_bounds);
    PenaltyConfig cfg;
    cfg.eq_factor = 1e-6;
    int doublings = 0;
    while (PenalizedObjective(lp, y, cfg) <= PenalizedObjective(lp, x, cfg)) {
      cfg.eq_factor *= 2;
      ASSERT_LT(++doublings, 200);
    }
  }
}

TEST(RepairTest, Examples) {
  const std::vector<double> upper(5, 60.0);
  const std::vector<double> feasible = {60, 0, 20, 60, 60};
  EXPECT_EQ(Repair(feasible, 200, upper), feasible);
  const std::vector<double> expected(5, 40.0);
  const std::vector<double> big(5, 100.0);
  EXPECT_EQ(Repair(big, 200, upper), expected);
  const std::vector<double> zero(5, 0.0);
  EXPECT_EQ(Repair(zero, 200, upper), expected);
}

TEST(RepairTest, Errors) {
  const std::vector<double> upper = {10, 10};
  EXPECT_THROW(Repair(std::vector<double>{1, 1}, 30, upper), InfeasibleError);
  EXPECT_THROW(Repair(std::vector<double>{1}, 10, upper), std::invalid_argument);
}

TEST(RepairTest, FeasibleAndIdempotentOnRandomPoints) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const PortfolioInstance instance = testing::RandomInstance(rng, 6);
    std::vector<double> x(instance.num_assets());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = -5 + (instance.upper_bounds[j] + 10) * u(rng);
    }
    const std::vector<double> once =
        Repair(x, instance.total_fund, instance.upper_bounds);
    for (std::size_t j = 0; j < x.size(); ++j) {
      ASSERT_GE(once[j], 0.0);
      ASSERT_LE(once[j], instance.upper_bounds[j]);
    }
    ASSERT_NEAR(Sum(once), instance.total_fund, 1e-9 * instance.total_fund);
    const std::vector<double> twice =
        Repair(once, instance.total_fund, instance.upper_bounds);
    ASSERT_EQ(once, twice);
  }
}

}  // namespace
}  // namespace fuzzyica
