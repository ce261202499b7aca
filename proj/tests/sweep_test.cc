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

#include "fuzzyica/sweep.h"

#include <sstream>
#include <string>
#include <vector>

#include "fuzzyica/errors.h"
#include "fuzzyica/instance_io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace fuzzyica {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(SweepTest, ExactRowsAreSortedByLevel) {
  SweepOptions options;
  options.levels = {{0.9, 0.9}, {0.1, 0.4}, {0.1, 0.1}};
  const SweepReport report = RunSweep(PaperExampleInstance(), options);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].levels, (ConfidenceLevels{0.1, 0.1}));
  EXPECT_EQ(report.rows[1].levels, (ConfidenceLevels{0.1, 0.4}));
  EXPECT_EQ(report.rows[2].levels, (ConfidenceLevels{0.9, 0.9}));
  EXPECT_EQ(report.rows[0].allocation,
            (std::vector<double>{60, 0, 20, 60, 60}));
  EXPECT_FALSE(report.rows[0].seed.has_value());
  EXPECT_TRUE(report.statistics.empty());
}

TEST(SweepTest, IcaRowsCarryOracleAndStatistics) {
  SweepOptions options;
  options.levels = {{0.4, 0.4}};
  options.solvers = {SolverKind::kIca};
  options.seeds = {3, 1, 2};
  const SweepReport report = RunSweep(PaperExampleInstance(), options);
  ASSERT_EQ(report.rows.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const SweepRow& row = report.rows[i];
    EXPECT_EQ(row.solver, SolverKind::kIca);
    EXPECT_EQ(row.seed, i + 1);
    EXPECT_NEAR(row.oracle_objective, 289.6816, 1e-4);
    EXPECT_LE(row.objective, row.oracle_objective + 1e-9);
    EXPECT_GE(row.relative_gap, -1e-12);
    EXPECT_LE(std::abs(row.budget_residual), 1e-6);
  }
  ASSERT_EQ(report.statistics.size(), 1u);
  const SeedStatistics& s = report.statistics[0];
  EXPECT_LE(s.min_objective, s.median_objective);
  EXPECT_LE(s.median_objective, s.max_objective);
  EXPECT_EQ(s.oracle_objective, report.rows[0].oracle_objective);
}

TEST(SweepTest, BudgetInfeasibleInstanceThrows) {
  PortfolioInstance instance = PaperExampleInstance();
  instance.total_fund = 400;
  SweepOptions options;
  options.levels = {{0.5, 0.5}};
  EXPECT_THROW(RunSweep(instance, options), InfeasibleError);
}

TEST(FormatCsvTest, HeaderAndExactRow) {
  SweepOptions options;
  options.levels = {{0.1, 0.1}};
  const std::vector<std::string> lines =
      Lines(FormatCsv(RunSweep(PaperExampleInstance(), options)));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0],
            "lambda,eta,solver,seed,allocation,objective,threshold,"
            "threshold_satisfied,oracle_objective,relative_gap,"
            "budget_residual");
  EXPECT_THAT(lines[1],
              StartsWith("0.100000,0.100000,exact,,60.000000;0.000000;"
                         "20.000000;60.000000;60.000000,422.723"));
  EXPECT_THAT(lines[1], HasSubstr(",true,"));
}

TEST(FormatJsonTest, Keys) {
  SweepOptions options;
  options.levels = {{0.7, 0.7}};
  const std::string json = FormatJson(RunSweep(PaperExampleInstance(), options));
  EXPECT_THAT(json, HasSubstr("\"rows\""));
  EXPECT_THAT(json, HasSubstr("\"seed_statistics\""));
  EXPECT_THAT(json, HasSubstr("\"threshold_satisfied\": false"));
  EXPECT_THAT(json, HasSubstr("\"seed\": null"));
}

TEST(ReproducePaperTest, ExactColumnsMatchPublishedTable) {
  const SweepReport report = ReproducePaper(IcaConfig{}, PenaltyConfig{}, {7});
  const auto& published = PublishedTable2();
  std::size_t k = 0;
  const bool expected_flags[] = {true, true, false, false};
  for (const SweepRow& row : report.rows) {
    if (row.solver != SolverKind::kExact) continue;
    ASSERT_LT(k, published.size());
    EXPECT_EQ(row.levels.lambda, published[k].level);
    EXPECT_EQ(row.allocation, published[k].allocation);
    EXPECT_NEAR(row.objective, published[k].objective,
                0.005 * published[k].objective);
    EXPECT_EQ(row.threshold_satisfied, expected_flags[k]);
    ++k;
  }
  EXPECT_EQ(k, 4u);
  EXPECT_EQ(report.rows.size(), 8u);
  const std::string comparison = FormatPaperComparison(report);
  EXPECT_THAT(comparison, HasSubstr("match"));
  EXPECT_THAT(comparison, ::testing::Not(HasSubstr("DIFFERS")));
}

TEST(FormatTableTest, FlagsUnsatisfiedThreshold) {
  SweepOptions options;
  options.levels = {{0.7, 0.7}};
  const std::string table = FormatTable(RunSweep(PaperExampleInstance(), options));
  EXPECT_THAT(table, HasSubstr("FAIL"));
}

}  // namespace
}  // namespace fuzzyica
