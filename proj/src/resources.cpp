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

#include "qtsp/resources.hpp"

#include <cmath>
#include <stdexcept>

#include "qtsp/encoding.hpp"

namespace qtsp {

void validate(const CostModel& model) {
  if (model.mcx_cx.slope < 0 || model.mcx_cx.offset < 0 || model.mcx_t.slope < 0 ||
      model.mcx_t.offset < 0) {
    throw std::invalid_argument("cost model coefficients must be nonnegative");
  }
  if (!(model.epsilon > 0.0 && model.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
}

Census predicted_validity_counts(int n) {
  const RegisterLayout layout = make_layout(n);
  const auto labels = static_cast<std::size_t>(layout.label_count());
  Census c;
  c[{GateKind::MCX, layout.bits_per_label}] += labels * labels;
  c[{GateKind::MCX, layout.label_count()}] += 1;
  return c;
}

Census predicted_cost_counts(int n) {
  const RegisterLayout layout = make_layout(n);
  const auto labels = static_cast<std::size_t>(layout.label_count());
  const auto transitions = static_cast<std::size_t>(layout.time_steps - 1);
  Census c;
  c[{GateKind::MCPhase, layout.bits_per_label}] += 2 * labels;
  c[{GateKind::MCPhase, 2 * layout.bits_per_label}] += transitions * labels * labels;
  return c;
}

ResourceReport estimate(const Census& census, const CostModel& model, int n) {
  validate(model);
  ResourceReport report;
  report.n = n;
  report.census = census;
  report.model = model;

  const auto log_term = static_cast<long long>(std::ceil(std::log2(1.0 / model.epsilon)));
  int transition_arity = -1;
  long long parallel_factor = 1;
  if (model.parallel_slots && n >= 3) {
    const RegisterLayout layout = make_layout(n);
    transition_arity = 2 * layout.bits_per_label;
    parallel_factor = std::max(1, layout.time_steps / 2);
  }

  long long serial_depth = 0;
  long long transition_depth = 0;
  for (const auto& [key, count] : census) {
    if (key.kind != GateKind::MCX && key.kind != GateKind::MCPhase) continue;
    const auto m = static_cast<long long>(count);
    const long long cx = m * model.mcx_cx.at(key.arity);
    report.cx_estimate += cx;
    report.t_estimate += m * model.mcx_t.at(key.arity);
    if (key.kind == GateKind::MCPhase) report.t_estimate += m * log_term;
    if (key.kind == GateKind::MCPhase && key.arity == transition_arity) {
      transition_depth += cx;
    } else {
      serial_depth += cx;
    }
  }
  report.depth_estimate =
      serial_depth + (transition_depth + parallel_factor - 1) / parallel_factor;
  return report;
}

const char* to_string(OracleBlock block) {
  switch (block) {
    case OracleBlock::Prep:
      return "prep";
    case OracleBlock::Validity:
      return "validity";
    case OracleBlock::Cost:
      return "cost";
  }
  return "?";
}

OracleBlock parse_oracle_block(const std::string& text) {
  if (text == "prep") return OracleBlock::Prep;
  if (text == "validity") return OracleBlock::Validity;
  if (text == "cost") return OracleBlock::Cost;
  throw std::invalid_argument("unknown oracle block \"" + text + "\"");
}

std::size_t block_gate_count(int n, OracleBlock block) {
  const RegisterLayout layout = make_layout(n);
  switch (block) {
    case OracleBlock::Prep:
      return uniform_prep(layout).size();
    case OracleBlock::Validity:
      return validity_oracle(layout).size();
    case OracleBlock::Cost: {
      // Costs do not matter once zero-angle gates are kept.
      const auto zero = TspInstance::create(
          std::vector<std::vector<double>>(static_cast<std::size_t>(n),
                                           std::vector<double>(static_cast<std::size_t>(n), 0.0)),
          n - 1);
      return cost_oracle(zero, layout, EncodingConfig{1.0, true}).size();
    }
  }
  return 0;
}

double log_log_slope(std::span<const double> xs, std::span<const double> ys, double* intercept) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("log-log fit needs matching samples, at least two");
  }
  const auto m = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0 && ys[i] > 0.0)) throw std::invalid_argument("log-log fit needs positive data");
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("log-log fit needs distinct abscissae");
  const double slope = (m * sxy - sx * sy) / denom;
  if (intercept != nullptr) *intercept = (sy - slope * sx) / m;
  return slope;
}

ScalingFit scaling_fit(std::span<const int> ns, OracleBlock block) {
  if (ns.size() < 5) throw std::invalid_argument("scaling fit needs at least five values of n");
  ScalingFit fit;
  std::vector<double> steps;
  for (const int n : ns) {
    if (n < 4) throw std::invalid_argument("scaling fit needs n >= 4, got " + std::to_string(n));
    fit.ns.push_back(n);
    steps.push_back(static_cast<double>(n - 1));
    fit.counts.push_back(static_cast<double>(block_gate_count(n, block)));
  }
  fit.exponent = log_log_slope(steps, fit.counts, &fit.intercept);
  return fit;
}

}  // namespace qtsp
