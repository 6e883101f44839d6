// Copyright 2026 The qtsp Authors
//
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

#pragma once

/**
 * @file commands.hpp
 * @brief The experiments behind the `qtsp` command-line tool.
 *
 * Each command returns its rendered output and an exit code; the exit code is
 * 0 exactly when every cross-check the command performs passes.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtsp/amplify.hpp"
#include "qtsp/encoding.hpp"
#include "qtsp/instance.hpp"
#include "qtsp/report.hpp"
#include "qtsp/resources.hpp"

namespace qtsp {

enum class OutputFormat { Json, Csv, Table };

OutputFormat parse_output_format(const std::string& text);

inline constexpr const char* kFigureInstanceName = "builtin:figure1";
inline constexpr double kFigureTolerance = 0.005;

struct RunConfig {
  std::string command;
  /// File path, `builtin:figure1`, or `random:<n>` (drawn with `seed`).
  std::string instance = kFigureInstanceName;
  /// `loose`, `tight`, or a positive number.
  std::string lambda = "tight";
  AmplifyMode mode = AmplifyMode::Exact;
  OutputFormat format = OutputFormat::Table;
  int ceiling = kDefaultQubitCeiling;
  std::optional<int> n;
  std::optional<std::pair<int, int>> n_range;
  unsigned long long seed = 1;
  CostModel model;
  bool include_invalid = false;
  double tolerance = kFigureTolerance;
};

struct CommandOutput {
  int exit_code = 0;
  std::string text;
};

TspInstance resolve_instance(const RunConfig& config);
double resolve_lambda(const TspInstance& instance, const std::string& spec);
/// Parses `a..b` into an inclusive range.
std::pair<int, int> parse_n_range(const std::string& text);

struct SimulationCheck {
  int n = 0;
  int qubits = 0;
  std::size_t patterns = 0;
  double lambda = 1.0;
  double max_phase_error = 0.0;
  double max_magnitude_error = 0.0;
  std::size_t validity_mismatches = 0;
  std::size_t parity_mismatches = 0;
  std::size_t entangled_patterns = 0;

  [[nodiscard]] bool passed() const {
    return max_phase_error < 1e-9 && max_magnitude_error < 1e-9 && validity_mismatches == 0 &&
           parity_mismatches == 0 && entangled_patterns == 0;
  }
};

/// Runs preparation, validity and cost oracles and compares every route
/// pattern with classify().
SimulationCheck simulate_and_check(const TspInstance& instance, const EncodingConfig& config,
                                   int ceiling = kDefaultQubitCeiling);

struct FigureRow {
  std::vector<Label> labels;
  double expected_phi = 0.0;
  bool expected_valid = false;
};

/// The 24 valid tours and the one invalid pattern listed with the reference
/// instance, with their phi values to two decimals.
const std::vector<FigureRow>& figure_table();

struct FigureRowResult {
  FigureRow row;
  std::string tour;
  double phi = 0.0;
  bool valid = false;
  bool matched = false;
};

struct FigureComparison {
  double lambda = 1.0;
  double tight_lambda = 1.0;
  double tolerance = kFigureTolerance;
  std::vector<FigureRowResult> rows;
  std::size_t matched = 0;
  double max_deviation = 0.0;
  TourOptimum optimum;
  std::string optimum_tour;
  SimulationCheck simulation;

  [[nodiscard]] bool optimum_matches() const;
  [[nodiscard]] bool passed() const {
    return matched == rows.size() && optimum_matches() && simulation.passed();
  }
};

FigureComparison compare_figure(const TspInstance& instance, double lambda,
                                double tolerance = kFigureTolerance);

CommandOutput cmd_solve(const RunConfig& config);
CommandOutput cmd_tours(const RunConfig& config);
CommandOutput cmd_simulate(const RunConfig& config);
CommandOutput cmd_amplify(const RunConfig& config);
CommandOutput cmd_resources(const RunConfig& config);
CommandOutput cmd_reproduce_figure(const RunConfig& config);

/// Dispatches on config.command.
CommandOutput run_command(const RunConfig& config);

}  // namespace qtsp
