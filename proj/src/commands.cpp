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

#include "qtsp/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qtsp/sim.hpp"

namespace qtsp {

using nlohmann::json;

namespace {

std::string printf_string(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& config, std::initializer_list<OutputFormat> allowed) {
  for (const OutputFormat f : allowed) {
    if (config.format == f) return;
  }
  throw std::invalid_argument("output format not supported by '" + config.command + "'");
}

std::vector<int> original_labels(const TspInstance& instance, const std::vector<Label>& order) {
  std::vector<int> out;
  for (const Label x : order) out.push_back(instance.original_label(x));
  return out;
}

std::vector<int> inclusive_range(std::pair<int, int> range) {
  std::vector<int> out;
  for (int n = range.first; n <= range.second; ++n) out.push_back(n);
  return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown output format \"" + text + "\"");
}

TspInstance resolve_instance(const RunConfig& config) {
  const std::string& spec = config.instance;
  if (spec == kFigureInstanceName) return figure_instance();
  const std::string random_prefix = "random:";
  if (spec.rfind(random_prefix, 0) == 0) {
    const int n = std::stoi(spec.substr(random_prefix.size()));
    return random_instance(n, config.seed);
  }
  return load_instance(spec);
}

double resolve_lambda(const TspInstance& instance, const std::string& spec) {
  if (spec == "loose") return lambda_bound(instance, LambdaMode::Loose);
  if (spec == "tight") return lambda_bound(instance, LambdaMode::Tight);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(spec, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != spec.size() || !(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("--lambda must be loose, tight or a positive number, got \"" +
                                spec + "\"");
  }
  return value;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--n-range must look like a..b");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used_a);
    const int hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("--n-range must look like a..b with a <= b, got \"" + text + "\"");
  }
}

SimulationCheck simulate_and_check(const TspInstance& instance, const EncodingConfig& config,
                                   int ceiling) {
  const RegisterLayout layout = make_layout(instance.n());
  if (layout.total_qubits() > ceiling) {
    throw std::invalid_argument("n = " + std::to_string(instance.n()) + " needs " +
                                std::to_string(layout.total_qubits()) +
                                " qubits, above the ceiling of " + std::to_string(ceiling));
  }
  StateVector state(layout.total_qubits(), ceiling);
  run_inplace(state, encoding_pipeline(instance, layout, config));

  SimulationCheck check;
  check.n = instance.n();
  check.qubits = layout.total_qubits();
  check.lambda = config.lambda;
  const auto table = route_marginals(state, layout);
  check.patterns = table.size();
  const double magnitude = 1.0 / std::sqrt(static_cast<double>(table.size()));

  for (const RouteEntry& e : table) {
    const auto labels = decode_basis_index(layout, e.route);
    const TourRecord rec = classify(instance, labels, config);
    if (e.branches != 1) {
      ++check.entangled_patterns;
      continue;
    }
    check.max_magnitude_error = std::max(check.max_magnitude_error, std::abs(std::abs(e.amplitude) - magnitude));
    const double err = std::remainder(std::arg(e.amplitude) - rec.phase, 2.0 * std::numbers::pi);
    check.max_phase_error = std::max(check.max_phase_error, std::abs(err));
    if (e.flag(layout) != rec.valid) ++check.validity_mismatches;
    for (int i = 0; i < layout.label_count(); ++i) {
      int occurrences = 0;
      for (const Label x : labels) occurrences += x == i ? 1 : 0;
      if (e.parity(i) != (occurrences % 2 == 1)) {
        ++check.parity_mismatches;
        break;
      }
    }
  }
  return check;
}

const std::vector<FigureRow>& figure_table() {
  static const std::vector<FigureRow> rows = {
      {{2, 3, 1, 0}, 0.33, true}, {{1, 3, 2, 0}, 0.42, true}, {{1, 0, 2, 3}, 0.45, true},
      {{1, 2, 3, 0}, 0.46, true}, {{1, 0, 3, 2}, 0.47, true}, {{3, 1, 2, 0}, 0.50, true},
      {{3, 1, 0, 2}, 0.51, true}, {{1, 3, 0, 2}, 0.54, true}, {{1, 2, 0, 3}, 0.56, true},
      {{2, 0, 3, 1}, 0.56, true}, {{2, 0, 1, 3}, 0.63, true}, {{3, 2, 1, 0}, 0.64, true},
      {{0, 3, 2, 1}, 1.00, true}, {{2, 1, 3, 0}, 0.65, true}, {{2, 1, 0, 3}, 0.68, true},
      {{2, 3, 0, 1}, 0.69, true}, {{3, 0, 1, 2}, 0.75, true}, {{0, 3, 1, 2}, 0.75, true},
      {{0, 2, 3, 1}, 0.75, true}, {{3, 2, 0, 1}, 0.75, true}, {{0, 1, 3, 2}, 0.84, true},
      {{0, 1, 2, 3}, 0.86, true}, {{3, 0, 2, 1}, 0.87, true}, {{0, 2, 1, 3}, 0.94, true},
      {{3, 3, 3, 2}, 0.31, false},
  };
  return rows;
}

bool FigureComparison::optimum_matches() const {
  return optimum_tour == "[4, 2, 3, 1, 0, 4]" && std::abs(optimum.cost - 1.12) <= 1e-9;
}

FigureComparison compare_figure(const TspInstance& instance, double lambda, double tolerance) {
  if (instance.n() != 5) throw std::invalid_argument("the reference table is for 5 cities");
  FigureComparison cmp;
  cmp.lambda = lambda;
  cmp.tight_lambda = lambda_bound(instance, LambdaMode::Tight);
  cmp.tolerance = tolerance;
  const EncodingConfig config{lambda, false};

  for (const FigureRow& row : figure_table()) {
    const TourRecord rec = classify(instance, row.labels, config);
    FigureRowResult r{row, format_tour(instance, row.labels), rec.phase, rec.valid, false};
    const double deviation = std::abs(rec.phase - row.expected_phi);
    cmp.max_deviation = std::max(cmp.max_deviation, deviation);
    r.matched = deviation <= tolerance && rec.valid == row.expected_valid;
    cmp.matched += r.matched ? 1 : 0;
    cmp.rows.push_back(std::move(r));
  }
  cmp.optimum = brute_force_optimum(instance);
  cmp.optimum_tour = format_tour(instance, cmp.optimum.tour.order);
  cmp.simulation = simulate_and_check(instance, config);
  return cmp;
}

CommandOutput cmd_solve(const RunConfig& config) {
  require_format(config, {OutputFormat::Json, OutputFormat::Table});
  const TspInstance instance = resolve_instance(config);
  const TourOptimum best = brute_force_optimum(instance);
  const std::string tour = format_tour(instance, best.tour.order);
  if (config.format == OutputFormat::Json) {
    return {0, render_json({{"n", instance.n()},
                            {"tour", tour},
                            {"order", original_labels(instance, best.tour.order)},
                            {"cost", best.cost}})};
  }
  return {0, "optimal tour " + tour + "  cost " + format_double(best.cost) + "\n"};
}

CommandOutput cmd_tours(const RunConfig& config) {
  const TspInstance instance = resolve_instance(config);
  const EncodingConfig enc{resolve_lambda(instance, config.lambda), false};
  const TourTable table = build_tour_table(instance, enc, config.include_invalid);
  switch (config.format) {
    case OutputFormat::Json:
      return {0, render_json(table)};
    case OutputFormat::Csv:
      return {0, tour_table_csv(table)};
    case OutputFormat::Table:
      break;
  }
  return {0, tour_table_text(table)};
}

CommandOutput cmd_simulate(const RunConfig& config) {
  require_format(config, {OutputFormat::Json, OutputFormat::Table});
  const TspInstance instance = resolve_instance(config);
  const EncodingConfig enc{resolve_lambda(instance, config.lambda), false};
  const SimulationCheck check = simulate_and_check(instance, enc, config.ceiling);
  const int code = check.passed() ? 0 : 1;
  if (config.format == OutputFormat::Json) {
    return {code, render_json({{"n", check.n},
                               {"qubits", check.qubits},
                               {"patterns", check.patterns},
                               {"lambda", check.lambda},
                               {"max_phase_error", check.max_phase_error},
                               {"max_magnitude_error", check.max_magnitude_error},
                               {"validity_mismatches", check.validity_mismatches},
                               {"parity_mismatches", check.parity_mismatches},
                               {"entangled_patterns", check.entangled_patterns},
                               {"passed", check.passed()}})};
  }
  std::string out;
  out += printf_string("n = %d, %d qubits, %zu route patterns, lambda = %.6g\n", check.n,
                       check.qubits, check.patterns, check.lambda);
  out += printf_string("max phase error      %.3e\n", check.max_phase_error);
  out += printf_string("max magnitude error  %.3e\n", check.max_magnitude_error);
  out += printf_string("validity mismatches  %zu\n", check.validity_mismatches);
  out += printf_string("parity mismatches    %zu\n", check.parity_mismatches);
  out += printf_string("entangled patterns   %zu\n", check.entangled_patterns);
  out += check.passed() ? "PASS\n" : "FAIL\n";
  return {code, out};
}

CommandOutput cmd_amplify(const RunConfig& config) {
  require_format(config, {OutputFormat::Json, OutputFormat::Table});
  const TspInstance instance = resolve_instance(config);
  AmplifyOptions options;
  options.ceiling = config.ceiling;
  const AmplifyResult result = amplify_valid(instance, config.mode, options);
  const ScheduleReport report{result.schedule, result.achieved, result.uniformity_deviation,
                              result.ancilla_excitation};

  bool ok = result.ancilla_excitation < 1e-12;
  if (config.mode == AmplifyMode::Exact) {
    ok = ok && result.achieved >= 1.0 - 1e-9 && result.uniformity_deviation < 1e-9;
  } else {
    ok = ok && std::abs(result.achieved - result.schedule.predicted_success) < 1e-9;
  }
  const int code = ok ? 0 : 1;
  if (config.format == OutputFormat::Json) return {code, render_json(report)};

  const AmplificationSchedule& s = result.schedule;
  std::string out;
  out += printf_string("mode %s, p = %.10g, theta = %.10g\n", to_string(s.mode), s.p, s.theta);
  out += printf_string("iterations %d, phase angle %.10g\n", s.iterations, s.phase_angle);
  out += printf_string("predicted success %.12f\n", s.predicted_success);
  out += printf_string("achieved success  %.12f\n", result.achieved);
  out += printf_string("uniformity deviation %.3e, ancilla excitation %.3e\n",
                       result.uniformity_deviation, result.ancilla_excitation);
  out += ok ? "PASS\n" : "FAIL\n";
  return {code, out};
}

CommandOutput cmd_resources(const RunConfig& config) {
  require_format(config, {OutputFormat::Json, OutputFormat::Table});
  validate(config.model);
  std::optional<TspInstance> instance;
  int n = 0;
  if (config.n) {
    n = *config.n;
  } else {
    instance = resolve_instance(config);
    n = instance->n();
  }
  const RegisterLayout layout = make_layout(n);
  const auto zero = TspInstance::create(
      std::vector<std::vector<double>>(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0)),
      n - 1);

  const Census prep = gate_census(uniform_prep(layout));
  const Census validity = gate_census(validity_oracle(layout));
  const Census cost = gate_census(cost_oracle(zero, layout, EncodingConfig{1.0, true}));
  const Census predicted_validity = predicted_validity_counts(n);
  const Census predicted_cost = predicted_cost_counts(n);
  const bool validity_ok = validity == predicted_validity;
  const bool cost_ok = cost == predicted_cost;

  const ResourceReport report = estimate(prep + validity + cost, config.model, n);
  json j = report;
  j["blocks"] = {
      {"validity",
       {{"predicted", census_to_json(predicted_validity)},
        {"constructed", census_to_json(validity)},
        {"match", validity_ok}}},
      {"cost",
       {{"predicted", census_to_json(predicted_cost)},
        {"constructed", census_to_json(cost)},
        {"match", cost_ok}}},
  };
  j["validity_lowered"] = census_to_json(gate_census(lower_polarities(validity_oracle(layout))));
  if (instance) {
    const EncodingConfig enc{resolve_lambda(*instance, config.lambda), false};
    j["cost_without_zero_angles"] = census_to_json(gate_census(cost_oracle(*instance, layout, enc)));
  }

  json fits = json::object();
  if (config.n_range) {
    const auto ns = inclusive_range(*config.n_range);
    for (const OracleBlock block : {OracleBlock::Prep, OracleBlock::Validity, OracleBlock::Cost}) {
      const ScalingFit fit = scaling_fit(ns, block);
      fits[to_string(block)] = {{"exponent", fit.exponent}, {"counts", fit.counts}, {"n", fit.ns}};
    }
    j["scaling"] = {{"abscissa", "n-1"}, {"fits", fits}};
  }

  const int code = validity_ok && cost_ok ? 0 : 1;
  if (config.format == OutputFormat::Json) return {code, render_json(j)};

  std::string out = printf_string("n = %d (T = %d, b = %d, %d qubits)\n", n, layout.time_steps,
                                  layout.bits_per_label, layout.total_qubits());
  const auto census_line = [](const Census& c) {
    std::string s;
    for (const auto& [key, count] : c) {
      s += printf_string(" %s(%d):%zu", to_string(key.kind), key.arity, count);
    }
    return s;
  };
  out += "validity predicted  " + census_line(predicted_validity) + "\n";
  out += "validity constructed" + census_line(validity) + (validity_ok ? "  ok\n" : "  MISMATCH\n");
  out += "cost predicted      " + census_line(predicted_cost) + "\n";
  out += "cost constructed    " + census_line(cost) + (cost_ok ? "  ok\n" : "  MISMATCH\n");
  out += printf_string("model estimates: cx %lld, t %lld, depth %lld (a_cx=%lld c_cx=%lld a_t=%lld "
                       "c_t=%lld eps=%g%s)\n",
                       report.cx_estimate, report.t_estimate, report.depth_estimate,
                       config.model.mcx_cx.slope, config.model.mcx_cx.offset,
                       config.model.mcx_t.slope, config.model.mcx_t.offset, config.model.epsilon,
                       config.model.parallel_slots ? ", parallel slots" : "");
  if (config.n_range) {
    for (const auto& [name, fit] : fits.items()) {
      out += printf_string("scaling %-8s exponent %.4f over n = %d..%d (vs n-1)\n", name.c_str(),
                           fit["exponent"].get<double>(), config.n_range->first,
                           config.n_range->second);
    }
  }
  return {code, out};
}

CommandOutput cmd_reproduce_figure(const RunConfig& config) {
  require_format(config, {OutputFormat::Json, OutputFormat::Table});
  const TspInstance instance = resolve_instance(config);
  const double lambda = resolve_lambda(instance, config.lambda);
  const FigureComparison cmp = compare_figure(instance, lambda, config.tolerance);
  const int code = cmp.passed() ? 0 : 1;
  const double scale = cmp.tight_lambda / cmp.lambda;

  if (config.format == OutputFormat::Json) {
    json rows = json::array();
    for (const FigureRowResult& r : cmp.rows) {
      rows.push_back({{"tour", r.tour},
                      {"expected_phi", r.row.expected_phi},
                      {"phi", r.phi},
                      {"valid", r.valid ? 1 : 0},
                      {"matched", r.matched}});
    }
    return {code, render_json({{"lambda", cmp.lambda},
                               {"tight_lambda", cmp.tight_lambda},
                               {"phi_scale", scale},
                               {"tolerance", cmp.tolerance},
                               {"rows", rows},
                               {"matched", cmp.matched},
                               {"max_deviation", cmp.max_deviation},
                               {"optimum", {{"tour", cmp.optimum_tour}, {"cost", cmp.optimum.cost}}},
                               {"optimum_matches", cmp.optimum_matches()},
                               {"simulation_passed", cmp.simulation.passed()},
                               {"max_phase_error", cmp.simulation.max_phase_error},
                               {"passed", cmp.passed()}})};
  }

  std::string out = printf_string("lambda = %.6g (tight %.6g), tolerance %.4g\n", cmp.lambda,
                                  cmp.tight_lambda, cmp.tolerance);
  if (std::abs(scale - 1.0) > 1e-12) {
    out += printf_string("phi is scaled by tight/used lambda = %.6f relative to the table\n", scale);
  }
  out += printf_string("%-20s %8s %8s %9s %5s\n", "tour", "table", "phi", "deviation", "valid");
  for (const FigureRowResult& r : cmp.rows) {
    out += printf_string("%-20s %8.2f %8.4f %9.4f %5d%s\n", r.tour.c_str(), r.row.expected_phi,
                         r.phi, r.phi - r.row.expected_phi, r.valid ? 1 : 0,
                         r.matched ? "" : "  MISMATCH");
  }
  out += printf_string("rows matched %zu/%zu, max deviation %.4f\n", cmp.matched, cmp.rows.size(),
                       cmp.max_deviation);
  out += "optimum " + cmp.optimum_tour + " cost " + format_double(cmp.optimum.cost) +
         (cmp.optimum_matches() ? "  ok\n" : "  MISMATCH (expected [4, 2, 3, 1, 0, 4] cost 1.12)\n");
  out += printf_string("statevector cross-check: max phase error %.3e, %zu validity mismatches\n",
                       cmp.simulation.max_phase_error, cmp.simulation.validity_mismatches);
  if (!cmp.passed()) {
    out += "mismatched rows:";
    for (const FigureRowResult& r : cmp.rows) {
      if (!r.matched) out += " " + r.tour;
    }
    out += "\n";
  }
  out += cmp.passed() ? "PASS\n" : "FAIL\n";
  return {code, out};
}

CommandOutput run_command(const RunConfig& config) {
  if (config.command == "solve") return cmd_solve(config);
  if (config.command == "tours") return cmd_tours(config);
  if (config.command == "simulate") return cmd_simulate(config);
  if (config.command == "amplify") return cmd_amplify(config);
  if (config.command == "resources") return cmd_resources(config);
  if (config.command == "reproduce-figure") return cmd_reproduce_figure(config);
  throw std::invalid_argument("unknown command \"" + config.command + "\"");
}

}  // namespace qtsp
