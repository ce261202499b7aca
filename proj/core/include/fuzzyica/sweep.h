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

#ifndef FUZZYICA_SWEEP_H_
#define FUZZYICA_SWEEP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyica/ica.h"
#include "fuzzyica/lp_oracle.h"
#include "fuzzyica/model.h"
#include "fuzzyica/penalty.h"

namespace fuzzyica {

enum class SolverKind { kExact, kIca };

const char* ToString(SolverKind solver);

struct SweepOptions {
  std::vector<ConfidenceLevels> levels;
  std::vector<SolverKind> solvers = {SolverKind::kExact};
  IcaConfig ica;
  PenaltyConfig penalty;
  // One ICA run per seed; ignored by the exact solver.
  std::vector<std::uint64_t> seeds = {1};
};

struct SweepRow {
  ConfidenceLevels levels;
  SolverKind solver = SolverKind::kExact;
  std::optional<std::uint64_t> seed;
  std::vector<double> allocation;
  double objective = 0.0;
  double threshold = 0.0;
  bool threshold_satisfied = false;
  double oracle_objective = 0.0;
  // (oracle - objective) / |oracle|.
  double relative_gap = 0.0;
  double budget_residual = 0.0;
};

// Over the ICA seeds of one level.
struct SeedStatistics {
  ConfidenceLevels levels;
  double min_objective = 0.0;
  double median_objective = 0.0;
  double max_objective = 0.0;
  double oracle_objective = 0.0;
};

struct SweepReport {
  // Sorted by (lambda, eta), then exact before ICA, then seed.
  std::vector<SweepRow> rows;
  std::vector<SeedStatistics> statistics;
};

// Throws InfeasibleError when the instance budget cannot be met.
SweepReport RunSweep(const PortfolioInstance& instance,
                     const SweepOptions& options);

// One row per (levels, solver, seed) with the fixed column order
//   lambda,eta,solver,seed,allocation,objective,threshold,
//   threshold_satisfied,oracle_objective,relative_gap,budget_residual
// where allocation is ';'-separated. Reals print with 6 decimals.
std::string FormatCsv(const SweepReport& report);
std::string FormatJson(const SweepReport& report);
std::string FormatTable(const SweepReport& report);

// Published optimum for one level of the worked example.
struct PublishedResult {
  double level;
  std::vector<double> allocation;
  double objective;
};

const std::vector<PublishedResult>& PublishedTable2();

// Exact and ICA results at lambda = eta in {0.1, 0.4, 0.7, 0.9} on
// PaperExampleInstance().
SweepReport ReproducePaper(const IcaConfig& ica, const PenaltyConfig& penalty,
                           const std::vector<std::uint64_t>& seeds);

// Deviation of each exact row from PublishedTable2().
std::string FormatPaperComparison(const SweepReport& report);

}  // namespace fuzzyica

#endif  // FUZZYICA_SWEEP_H_
