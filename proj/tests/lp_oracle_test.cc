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

#include "fuzzyica/lp_oracle.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "fuzzyica/instance_io.h"
#include "fuzzyica/penalty.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fuzzyica {
namespace {

DeterministicLP MakeLP(std::vector<double> c, std::vector<double> upper,
                       double total, double threshold = 0.0) {
  DeterministicLP lp;
  lp.coefficients = std::move(c);
  lp.upper_bounds = std::move(upper);
  lp.total_fund = total;
  lp.threshold = threshold;
  return lp;
}

struct Table2Column {
  double level;
  std::vector<double> allocation;
  double objective;
  bool threshold_satisfied;
};

TEST(SolveExactTest, ReproducesWorkedExampleAllocations) {
  const std::vector<Table2Column> columns = {
      {0.1, {60, 0, 20, 60, 60}, 422.7231, true},
      {0.4, {20, 0, 60, 60, 60}, 289.6816, true},
      {0.7, {20, 0, 60, 60, 60}, 188.1183, false},
      {0.9, {0, 60, 60, 20, 60}, 95.3924, false},
  };
  const PortfolioInstance instance = PaperExampleInstance();
  for (const Table2Column& col : columns) {
    const ExactSolution s = SolveExact(Reformulate(instance, {col.level, col.level}));
    EXPECT_EQ(s.x, col.allocation) << col.level;
    EXPECT_NEAR(s.objective, col.objective, 1e-4);
    EXPECT_EQ(s.threshold_satisfied, col.threshold_satisfied);
    EXPECT_EQ(s.status, col.threshold_satisfied ? SolveStatus::kOptimal
                                                : SolveStatus::kThresholdInfeasible);
  }
}

TEST(SolveExactTest, TiesGoToLowerIndex) {
  const ExactSolution s = SolveExact(MakeLP({1, 1}, {60, 60}, 80));
  EXPECT_EQ(s.x, (std::vector<double>{60, 20}));
}

TEST(SolveExactTest, BudgetInfeasible) {
  const ExactSolution s = SolveExact(MakeLP({1, 2}, {10, 10}, 30));
  EXPECT_EQ(s.status, SolveStatus::kBudgetInfeasible);
  EXPECT_TRUE(s.x.empty());
  EXPECT_STREQ(ToString(s.status), "budget_infeasible");
}

TEST(BruteForceTest, Examples) {
  const PortfolioInstance instance = PaperExampleInstance();
  for (double level : {0.1, 0.4, 0.7, 0.9}) {
    const DeterministicLP lp = Reformulate(instance, {level, level});
    EXPECT_EQ(BruteForce(lp, 20).x, SolveExact(lp).x) << level;
  }
  EXPECT_EQ(BruteForce(MakeLP({1.5}, {200}, 200), 1).x,
            (std::vector<double>{200}));
}

TEST(BruteForceTest, Preconditions) {
  EXPECT_THROW(BruteForce(MakeLP({1, 1}, {10, 10}, 15), 10),
               std::invalid_argument);
  EXPECT_THROW(BruteForce(MakeLP(std::vector<double>(7, 1.0),
                                 std::vector<double>(7, 1.0), 3),
                          1),
               std::invalid_argument);
  EXPECT_THROW(BruteForce(MakeLP(std::vector<double>(6, 1.0),
                                 std::vector<double>(6, 1e4), 3e4),
                          1),
               std::runtime_error);
}

TEST(BruteForceTest, AgreesWithGreedyOnRandomInstances) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(3), upper(3);
    double capacity = 0;
    for (int j = 0; j < 3; ++j) {
      c[j] = u(rng);
      upper[j] = std::uniform_int_distribution<int>(0, 15)(rng);
      capacity += upper[j];
    }
    if (capacity == 0) continue;
    const double total =
        std::uniform_int_distribution<int>(1, static_cast<int>(capacity))(rng);
    const DeterministicLP lp = MakeLP(c, upper, total);
    EXPECT_NEAR(BruteForce(lp, 1).objective, SolveExact(lp).objective, 1e-9);
  }
}

TEST(SolveExactTest, NoRandomFeasiblePointBeatsIt) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const PortfolioInstance instance = testing::RandomInstance(rng, 6);
    const DeterministicLP lp = Reformulate(instance, {u(rng) * 0.9 + 0.05, 0.5});
    const double best = SolveExact(lp).objective;
    std::vector<double> raw(lp.size());
    for (int k = 0; k < 10000; ++k) {
      for (std::size_t j = 0; j < raw.size(); ++j) {
        raw[j] = lp.upper_bounds[j] * u(rng);
      }
      const std::vector<double> y = Repair(raw, lp.total_fund, lp.upper_bounds);
      ASSERT_LE(Objective(lp, y), best + 1e-9);
    }
  }
}

TEST(SolveExactTest, PermutationEquivariant) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5;
    std::vector<double> c(n), upper(n);
    for (int j = 0; j < n; ++j) {
      c[j] = u(rng);
      upper[j] = 1 + std::floor(20 * u(rng));
    }
    const double total = std::floor(std::accumulate(upper.begin(), upper.end(), 0.0) * u(rng)) + 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> pc(n), pu(n);
    for (int j = 0; j < n; ++j) {
      pc[j] = c[perm[j]];
      pu[j] = upper[perm[j]];
    }
    const ExactSolution base = SolveExact(MakeLP(c, upper, total));
    const ExactSolution permuted = SolveExact(MakeLP(pc, pu, total));
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(permuted.x[j], base.x[perm[j]]);
    }
  }
}

}  // namespace
}  // namespace fuzzyica
