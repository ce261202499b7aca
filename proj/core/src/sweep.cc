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

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include <fmt/format.h>

#include "fuzzyica/instance_io.h"
#include "json.hpp"

namespace fuzzyica {
namespace {

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double RelativeGap(double oracle, double value) {
  const double scale = std::abs(oracle);
  return scale > 0.0 ? (oracle - value) / scale : oracle - value;
}

std::string JoinAllocation(const std::vector<double>& x, const char* sep) {
  std::string out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j > 0) out += sep;
    out += fmt::format("{:.6f}", x[j]);
  }
  return out;
}

}  // namespace

const char* ToString(SolverKind solver) {
  return solver == SolverKind::kExact ? "exact" : "ica";
}

SweepReport RunSweep(const PortfolioInstance& instance,
                     const SweepOptions& options) {
  instance.Validate();
  options.penalty.Validate();
  std::vector<ConfidenceLevels> levels = options.levels;
  std::stable_sort(levels.begin(), levels.end(),
                   [](const ConfidenceLevels& a, const ConfidenceLevels& b) {
                     return std::tie(a.lambda, a.eta) <
                            std::tie(b.lambda, b.eta);
                   });
  const bool want_exact =
      std::count(options.solvers.begin(), options.solvers.end(),
                 SolverKind::kExact) > 0;
  const bool want_ica = std::count(options.solvers.begin(),
                                   options.solvers.end(), SolverKind::kIca) > 0;
  std::vector<std::uint64_t> seeds = options.seeds;
  std::sort(seeds.begin(), seeds.end());

  SweepReport report;
  for (const ConfidenceLevels& level : levels) {
    const DeterministicLP lp = Reformulate(instance, level);
    const ExactSolution exact = SolveExact(lp);

    if (want_exact) {
      SweepRow row;
      row.levels = level;
      row.solver = SolverKind::kExact;
      row.allocation = exact.x;
      row.objective = exact.objective;
      row.threshold = lp.threshold;
      row.threshold_satisfied = exact.threshold_satisfied;
      row.oracle_objective = exact.objective;
      row.relative_gap = 0.0;
      row.budget_residual = Residuals(lp, exact.x).budget_residual;
      report.rows.push_back(std::move(row));
    }
    if (!want_ica || seeds.empty()) continue;

    std::vector<double> objectives;
    for (std::uint64_t seed : seeds) {
      IcaConfig cfg = options.ica;
      cfg.seed = seed;
      const RunReport run = RunIca(lp, options.penalty, cfg);
      SweepRow row;
      row.levels = level;
      row.solver = SolverKind::kIca;
      row.seed = seed;
      row.allocation = run.repaired_position;
      row.objective = run.repaired_objective;
      row.threshold = lp.threshold;
      row.threshold_satisfied = run.repaired_objective >= lp.threshold;
      row.oracle_objective = exact.objective;
      row.relative_gap = RelativeGap(exact.objective, run.repaired_objective);
      row.budget_residual = run.residuals.budget_residual;
      objectives.push_back(row.objective);
      report.rows.push_back(std::move(row));
    }
    report.statistics.push_back(
        {level, *std::min_element(objectives.begin(), objectives.end()),
         Median(objectives),
         *std::max_element(objectives.begin(), objectives.end()),
         exact.objective});
  }
  return report;
}

std::string FormatCsv(const SweepReport& report) {
  std::string out =
      "lambda,eta,solver,seed,allocation,objective,threshold,"
      "threshold_satisfied,oracle_objective,relative_gap,budget_residual\n";
  for (const SweepRow& row : report.rows) {
    out += fmt::format(
        "{:.6f},{:.6f},{},{},{},{:.6f},{:.6f},{},{:.6f},{:.6f},{:.6f}\n",
        row.levels.lambda, row.levels.eta, ToString(row.solver),
        row.seed ? std::to_string(*row.seed) : std::string(),
        JoinAllocation(row.allocation, ";"), row.objective, row.threshold,
        row.threshold_satisfied ? "true" : "false", row.oracle_objective,
        row.relative_gap, row.budget_residual);
  }
  return out;
}

std::string FormatJson(const SweepReport& report) {
  using nlohmann::ordered_json;
  ordered_json rows = ordered_json::array();
  for (const SweepRow& row : report.rows) {
    ordered_json r;
    r["lambda"] = row.levels.lambda;
    r["eta"] = row.levels.eta;
    r["solver"] = ToString(row.solver);
    r["seed"] = row.seed ? ordered_json(*row.seed) : ordered_json(nullptr);
    r["allocation"] = row.allocation;
    r["objective"] = row.objective;
    r["threshold"] = row.threshold;
    r["threshold_satisfied"] = row.threshold_satisfied;
    r["oracle_objective"] = row.oracle_objective;
    r["relative_gap"] = row.relative_gap;
    r["budget_residual"] = row.budget_residual;
    rows.push_back(std::move(r));
  }
  ordered_json stats = ordered_json::array();
  for (const SeedStatistics& s : report.statistics) {
    stats.push_back({{"lambda", s.levels.lambda},
                     {"eta", s.levels.eta},
                     {"min_objective", s.min_objective},
                     {"median_objective", s.median_objective},
                     {"max_objective", s.max_objective},
                     {"oracle_objective", s.oracle_objective}});
  }
  ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["seed_statistics"] = std::move(stats);
  return doc.dump(2) + "\n";
}

std::string FormatTable(const SweepReport& report) {
  std::string out = fmt::format(
      "{:>6} {:>6} {:>6} {:>5}  {:<38} {:>10} {:>10} {:>6} {:>10} {:>8}\n",
      "lambda", "eta", "solver", "seed", "allocation", "objective",
      "threshold", "target", "oracle", "gap%");
  for (const SweepRow& row : report.rows) {
    std::string alloc;
    for (std::size_t j = 0; j < row.allocation.size(); ++j) {
      alloc += fmt::format("{}{:.2f}", j ? " " : "", row.allocation[j]);
    }
    out += fmt::format(
        "{:>6.3f} {:>6.3f} {:>6} {:>5}  {:<38} {:>10.4f} {:>10.4f} {:>6} "
        "{:>10.4f} {:>8.4f}\n",
        row.levels.lambda, row.levels.eta, ToString(row.solver),
        row.seed ? std::to_string(*row.seed) : std::string("-"), alloc,
        row.objective, row.threshold, row.threshold_satisfied ? "ok" : "FAIL",
        row.oracle_objective, 100.0 * row.relative_gap);
  }
  if (!report.statistics.empty()) {
    out += "\nICA objective over seeds:\n";
    out += fmt::format("{:>6} {:>6} {:>10} {:>10} {:>10} {:>10}\n", "lambda",
                       "eta", "min", "median", "max", "oracle");
    for (const SeedStatistics& s : report.statistics) {
      out += fmt::format(
          "{:>6.3f} {:>6.3f} {:>10.4f} {:>10.4f} {:>10.4f} {:>10.4f}\n",
          s.levels.lambda, s.levels.eta, s.min_objective, s.median_objective,
          s.max_objective, s.oracle_objective);
    }
  }
  return out;
}

const std::vector<PublishedResult>& PublishedTable2() {
  // The last column is printed under the heading 0.99; its allocation is the
  // optimum at 0.9.
  static const std::vector<PublishedResult> kTable = {
      {0.1, {60, 0, 20, 60, 60}, 422.54},
      {0.4, {20, 0, 60, 60, 60}, 289.3},
      {0.7, {20, 0, 60, 60, 60}, 187.48},
      {0.9, {0, 60, 60, 20, 60}, 95.56},
  };
  return kTable;
}

SweepReport ReproducePaper(const IcaConfig& ica, const PenaltyConfig& penalty,
                           const std::vector<std::uint64_t>& seeds) {
  SweepOptions options;
  for (const PublishedResult& r : PublishedTable2()) {
    options.levels.push_back({r.level, r.level});
  }
  options.solvers = {SolverKind::kExact, SolverKind::kIca};
  options.ica = ica;
  options.penalty = penalty;
  options.seeds = seeds;
  return RunSweep(PaperExampleInstance(), options);
}

std::string FormatPaperComparison(const SweepReport& report) {
  std::string out = "Deviation of the exact optimum from the published table:\n";
  out += fmt::format("{:>6} {:>10} {:>10} {:>9} {:>10}\n", "level",
                     "published", "exact", "dev%", "allocation");
  for (const PublishedResult& published : PublishedTable2()) {
    for (const SweepRow& row : report.rows) {
      if (row.solver != SolverKind::kExact ||
          row.levels.lambda != published.level ||
          row.levels.eta != published.level) {
        continue;
      }
      const bool same = row.allocation == published.allocation;
      out += fmt::format(
          "{:>6.2f} {:>10.2f} {:>10.4f} {:>+9.4f} {:>10}\n", published.level,
          published.objective, row.objective,
          100.0 * (row.objective - published.objective) / published.objective,
          same ? "match" : "DIFFERS");
    }
  }
  return out;
}

}  // namespace fuzzyica
