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
 * @file report.hpp
 * @brief Tour tables and JSON forms of the reports emitted by the CLI.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "qtsp/amplify.hpp"
#include "qtsp/encoding.hpp"
#include "qtsp/resources.hpp"

namespace qtsp {

struct TourRow {
  std::vector<Label> labels;
  /// Start city fore and aft, in input labels: "[4, 2, 3, 1, 0, 4]".
  std::string tour;
  double cost = 0.0;
  double phi = 0.0;
  bool valid = false;

  friend bool operator==(const TourRow&, const TourRow&) = default;
};

struct TourTable {
  double lambda = 1.0;
  std::vector<TourRow> rows;
  /// Invalid route patterns not listed in rows.
  std::size_t invalid_omitted = 0;

  friend bool operator==(const TourTable&, const TourTable&) = default;
};

/**
 * Classifies every valid tour (and, if asked, every route pattern). Rows are
 * sorted by validity (valid first), then phi, then labels.
 */
TourTable build_tour_table(const TspInstance& instance, const EncodingConfig& config,
                           bool include_invalid = false,
                           int guard = kDefaultBruteForceGuard);

std::string tour_table_csv(const TourTable& table);
std::string tour_table_text(const TourTable& table);

struct ScheduleReport {
  AmplificationSchedule schedule;
  double achieved_success = 0.0;
  double uniformity_deviation = 0.0;
  double ancilla_excitation = 0.0;

  friend bool operator==(const ScheduleReport&, const ScheduleReport&) = default;
};

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

/// `[{"kind": "MCX", "arity": 2, "count": 16}, ...]` in key order.
nlohmann::json census_to_json(const Census& census);
Census census_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const CostModel& model);
void from_json(const nlohmann::json& j, CostModel& model);
void to_json(nlohmann::json& j, const ResourceReport& report);
void from_json(const nlohmann::json& j, ResourceReport& report);
void to_json(nlohmann::json& j, const ScheduleReport& report);
void from_json(const nlohmann::json& j, ScheduleReport& report);
void to_json(nlohmann::json& j, const TourRow& row);
void from_json(const nlohmann::json& j, TourRow& row);
void to_json(nlohmann::json& j, const TourTable& table);
void from_json(const nlohmann::json& j, TourTable& table);

GateKind parse_gate_kind(const std::string& text);

}  // namespace qtsp
