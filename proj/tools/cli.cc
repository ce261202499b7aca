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

#include "cli.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "fuzzyica/errors.h"
#include "fuzzyica/instance_io.h"
#include "fuzzyica/sweep.h"

namespace fuzzyica::cli {
namespace {

std::uint64_t ParseSeed(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("bad seed '" + std::string(text) + "'");
  }
  return value;
}

const std::vector<double> kPaperLevels = {0.1, 0.4, 0.7, 0.9};

}  // namespace

std::vector<std::uint64_t> ParseSeedList(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      seeds.push_back(ParseSeed(item));
    } else {
      const std::uint64_t first = ParseSeed(item.substr(0, dots));
      const std::uint64_t last = ParseSeed(item.substr(dots + 2));
      if (last < first) {
        throw std::invalid_argument("reversed seed range '" +
                                    std::string(item) + "'");
      }
      for (std::uint64_t s = first; s <= last; ++s) seeds.push_back(s);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Necessity-based fuzzy random portfolio selection solver"};
  app.set_version_flag("--version", "fuzzyica 0.1.0");

  std::string instance_path;
  std::vector<double> levels;
  std::optional<double> lambda;
  std::optional<double> eta;
  std::string solver = "exact";
  std::string seeds_text;
  std::string out_path;
  std::string format;
  IcaConfig ica;
  PenaltyConfig penalty;

  app.add_option("--instance", instance_path,
                 "Instance JSON file (default: the bundled paper_table1 "
                 "example)");
  app.add_option("--levels", levels,
                 "Confidence levels, lambda = eta, e.g. 0.1,0.4")
      ->delimiter(',');
  app.add_option("--lambda", lambda, "Probability level (overrides --levels)");
  app.add_option("--eta", eta, "Necessity level (overrides --levels)");
  app.add_option("--solver", solver, "exact or ica")
      ->check(CLI::IsMember({"exact", "ica"}));
  app.add_option("--seeds", seeds_text,
                 "ICA seeds: N, A..B, or a comma list (default 1..20)");
  app.add_option("--iters", ica.max_iterations, "ICA iterations")
      ->capture_default_str();
  app.add_option("--countries", ica.n_countries, "ICA population size")
      ->capture_default_str();
  app.add_option("--imperialists", ica.n_imperialists, "ICA imperialists")
      ->capture_default_str();
  app.add_option("--revolution", ica.revolution_rate, "ICA revolution rate")
      ->capture_default_str();
  app.add_option("--epsilon", ica.epsilon,
                 "Colony weight in empire power, in (0, 0.1)")
      ->capture_default_str();
  app.add_option("--eq-factor", penalty.eq_factor, "Budget penalty factor")
      ->capture_default_str();
  app.add_flag("--enforce-threshold", penalty.enforce_threshold,
               "Penalize the return threshold and exit 4 when it fails");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "csv, json or table (default table)")
      ->check(CLI::IsMember({"csv", "json", "table"}));

  CLI::App* reproduce = app.add_subcommand(
      "reproduce-paper",
      "Exact and ICA results at lambda = eta in {0.1, 0.4, 0.7, 0.9} on the "
      "bundled example");
  reproduce->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationFailure;
  }

  try {
    const std::vector<std::uint64_t> seeds =
        ParseSeedList(seeds_text.empty() ? "1..20" : seeds_text);
    SweepReport report;
    bool compare_with_paper = false;
    if (reproduce->parsed()) {
      report = ReproducePaper(ica, penalty, seeds);
      compare_with_paper = true;
    } else {
      const PortfolioInstance instance = instance_path.empty()
                                             ? PaperExampleInstance()
                                             : LoadInstance(instance_path);
      SweepOptions options;
      if (levels.empty()) {
        if (lambda || eta) {
          levels = {lambda ? *lambda : *eta};
        } else {
          levels = kPaperLevels;
        }
      }
      for (double level : levels) {
        options.levels.push_back({lambda.value_or(level), eta.value_or(level)});
      }
      options.solvers = {solver == "ica" ? SolverKind::kIca
                                         : SolverKind::kExact};
      options.ica = ica;
      options.penalty = penalty;
      options.seeds = seeds;
      for (const ConfidenceLevels& l : options.levels) l.Validate();
      ica.Validate();
      report = RunSweep(instance, options);
    }

    std::string text;
    if (format == "csv") {
      text = FormatCsv(report);
    } else if (format == "json") {
      text = FormatJson(report);
    } else {
      text = FormatTable(report);
      if (compare_with_paper) text += "\n" + FormatPaperComparison(report);
    }
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << out_path << "'\n";
        return kValidationFailure;
      }
      file << text;
    }

    if (penalty.enforce_threshold) {
      for (const SweepRow& row : report.rows) {
        if (!row.threshold_satisfied) {
          err << "return threshold unsatisfiable at lambda=" << row.levels.lambda
              << " eta=" << row.levels.eta << "\n";
          return kThresholdInfeasible;
        }
      }
    }
    return kSuccess;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

}  // namespace fuzzyica::cli
