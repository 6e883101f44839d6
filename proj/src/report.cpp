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

#include "qtsp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <system_error>

namespace qtsp {

using nlohmann::json;

TourTable build_tour_table(const TspInstance& instance, const EncodingConfig& config,
                           bool include_invalid, int guard) {
  if (instance.n() > guard) {
    throw std::invalid_argument("n = " + std::to_string(instance.n()) +
                                " exceeds the enumeration guard of " + std::to_string(guard));
  }
  const RegisterLayout layout = make_layout(instance.n());
  TourTable table;
  table.lambda = config.lambda;

  const auto add = [&](std::span<const Label> labels) {
    const TourRecord rec = classify(instance, labels, config);
    table.rows.push_back({rec.labels, format_tour(instance, labels), rec.cost, rec.phase, rec.valid});
  };

  std::vector<Label> order(static_cast<std::size_t>(layout.label_count()));
  std::iota(order.begin(), order.end(), 0);
  do {
    add(order);
  } while (std::next_permutation(order.begin(), order.end()));
  const std::size_t valid_rows = table.rows.size();

  const BasisIndex patterns = BasisIndex{1} << layout.route_qubit_count();
  if (include_invalid) {
    for (BasisIndex r = 0; r < patterns; ++r) {
      const auto labels = decode_basis_index(layout, r);
      if (!is_permutation_of_labels(labels, instance.n())) add(labels);
    }
  } else {
    table.invalid_omitted = static_cast<std::size_t>(patterns) - valid_rows;
  }

  std::sort(table.rows.begin(), table.rows.end(), [](const TourRow& a, const TourRow& b) {
    if (a.valid != b.valid) return a.valid;
    if (a.phi != b.phi) return a.phi < b.phi;
    return a.labels < b.labels;
  });
  return table;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, res.ptr);
}

std::string tour_table_csv(const TourTable& table) {
  std::string out = "tour,cost,phi,valid\n";
  for (const TourRow& r : table.rows) {
    out += "\"" + r.tour + "\"," + format_double(r.cost) + "," + format_double(r.phi) + "," +
           (r.valid ? "1" : "0") + "\n";
  }
  return out;
}

std::string tour_table_text(const TourTable& table) {
  std::size_t width = 4;
  for (const TourRow& r : table.rows) width = std::max(width, r.tour.size());
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "lambda = %.6g\n", table.lambda);
  out += line;
  std::snprintf(line, sizeof line, "%-*s  %8s  %8s  %5s\n", static_cast<int>(width), "tour", "cost",
                "phi", "valid");
  out += line;
  for (const TourRow& r : table.rows) {
    std::snprintf(line, sizeof line, "%-*s  %8.4f  %8.4f  %5d\n", static_cast<int>(width),
                  r.tour.c_str(), r.cost, r.phi, r.valid ? 1 : 0);
    out += line;
  }
  if (table.invalid_omitted > 0) {
    out += "invalid route patterns not listed: " + std::to_string(table.invalid_omitted) + "\n";
  }
  return out;
}

GateKind parse_gate_kind(const std::string& text) {
  for (const GateKind k : {GateKind::H, GateKind::X, GateKind::MCX, GateKind::MCPhase}) {
    if (text == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown gate kind \"" + text + "\"");
}

json census_to_json(const Census& census) {
  json out = json::array();
  for (const auto& [key, count] : census) {
    out.push_back({{"kind", to_string(key.kind)}, {"arity", key.arity}, {"count", count}});
  }
  return out;
}

Census census_from_json(const json& j) {
  Census census;
  for (const auto& entry : j) {
    census[{parse_gate_kind(entry.at("kind").get<std::string>()), entry.at("arity").get<int>()}] +=
        entry.at("count").get<std::size_t>();
  }
  return census;
}

void to_json(json& j, const CostModel& m) {
  j = json{{"mcx_cx", {{"a", m.mcx_cx.slope}, {"c", m.mcx_cx.offset}}},
           {"mcx_t", {{"a", m.mcx_t.slope}, {"c", m.mcx_t.offset}}},
           {"epsilon", m.epsilon},
           {"parallel_slots", m.parallel_slots}};
}

void from_json(const json& j, CostModel& m) {
  m.mcx_cx = {j.at("mcx_cx").at("a").get<long long>(), j.at("mcx_cx").at("c").get<long long>()};
  m.mcx_t = {j.at("mcx_t").at("a").get<long long>(), j.at("mcx_t").at("c").get<long long>()};
  m.epsilon = j.at("epsilon").get<double>();
  m.parallel_slots = j.at("parallel_slots").get<bool>();
}

void to_json(json& j, const ResourceReport& r) {
  j = json{{"n", r.n},
           {"census", census_to_json(r.census)},
           {"cx_estimate", r.cx_estimate},
           {"t_estimate", r.t_estimate},
           {"depth_estimate", r.depth_estimate},
           {"model", r.model}};
}

void from_json(const json& j, ResourceReport& r) {
  r.n = j.at("n").get<int>();
  r.census = census_from_json(j.at("census"));
  r.cx_estimate = j.at("cx_estimate").get<long long>();
  r.t_estimate = j.at("t_estimate").get<long long>();
  r.depth_estimate = j.at("depth_estimate").get<long long>();
  r.model = j.at("model").get<CostModel>();
}

void to_json(json& j, const ScheduleReport& r) {
  const AmplificationSchedule& s = r.schedule;
  j = json{{"p", s.p},
           {"theta", s.theta},
           {"mode", to_string(s.mode)},
           {"iterations", s.iterations},
           {"phase_angle", s.phase_angle},
           {"predicted_success", s.predicted_success},
           {"achieved_success", r.achieved_success},
           {"uniformity_deviation", r.uniformity_deviation},
           {"ancilla_excitation", r.ancilla_excitation}};
}

void from_json(const json& j, ScheduleReport& r) {
  AmplificationSchedule& s = r.schedule;
  s.p = j.at("p").get<double>();
  s.theta = j.at("theta").get<double>();
  s.mode = parse_amplify_mode(j.at("mode").get<std::string>());
  s.iterations = j.at("iterations").get<int>();
  s.phase_angle = j.at("phase_angle").get<double>();
  s.predicted_success = j.at("predicted_success").get<double>();
  r.achieved_success = j.at("achieved_success").get<double>();
  r.uniformity_deviation = j.value("uniformity_deviation", 0.0);
  r.ancilla_excitation = j.value("ancilla_excitation", 0.0);
}

void to_json(json& j, const TourRow& row) {
  j = json{{"tour", row.tour}, {"labels", row.labels}, {"cost", row.cost}, {"phi", row.phi},
           {"valid", row.valid ? 1 : 0}};
}

void from_json(const json& j, TourRow& row) {
  row.tour = j.at("tour").get<std::string>();
  row.labels = j.at("labels").get<std::vector<Label>>();
  row.cost = j.at("cost").get<double>();
  row.phi = j.at("phi").get<double>();
  row.valid = j.at("valid").get<int>() != 0;
}

void to_json(json& j, const TourTable& table) {
  j = json{{"lambda", table.lambda}, {"rows", table.rows}, {"invalid_omitted", table.invalid_omitted}};
}

void from_json(const json& j, TourTable& table) {
  table.lambda = j.at("lambda").get<double>();
  table.rows = j.at("rows").get<std::vector<TourRow>>();
  table.invalid_omitted = j.at("invalid_omitted").get<std::size_t>();
}

}  // namespace qtsp
