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

#include "qtsp/amplify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtsp/encoding.hpp"

namespace qtsp {

const char* to_string(AmplifyMode mode) {
  return mode == AmplifyMode::Exact ? "exact" : "standard";
}

AmplifyMode parse_amplify_mode(const std::string& text) {
  if (text == "standard") return AmplifyMode::Standard;
  if (text == "exact") return AmplifyMode::Exact;
  throw std::invalid_argument("unknown amplification mode \"" + text + "\"");
}

double success_probability(int n) {
  if (n < 3) throw std::invalid_argument("success probability needs n >= 3");
  const RegisterLayout layout = make_layout(n);
  const int exponent = layout.route_qubit_count();
  if (n > 170) {
    return std::exp(std::lgamma(static_cast<double>(n)) - exponent * std::numbers::ln2);
  }
  double factorial = 1.0;
  for (int k = 2; k < n; ++k) factorial *= k;
  return std::ldexp(factorial, -exponent);
}

double stirling_estimate(int n) {
  if (n < 3) throw std::invalid_argument("Stirling estimate needs n >= 3");
  const double m = n - 1;
  return std::sqrt(2.0 * std::numbers::pi * m) * std::exp(-m);
}

double label_space_fraction(int n) {
  if (n < 3) throw std::invalid_argument("label fraction needs n >= 3");
  const double m = n - 1;
  double fraction = 1.0;
  for (int k = 1; k < n; ++k) fraction *= k / m;
  return fraction;
}

Circuit grover_iteration(const RegisterLayout& layout, double phase_angle) {
  const Circuit prep = uniform_prep(layout);
  Circuit c = validity_phase_oracle(layout, phase_angle);
  c.append(inverse(prep));
  std::vector<Control> all_zero;
  for (const Qubit q : layout.route_qubits()) all_zero.push_back({q, false});
  c.append(Gate::pattern_phase(std::move(all_zero), phase_angle));
  c.append(prep);
  return c;
}

AmplificationSchedule make_schedule(double p, AmplifyMode mode) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("success probability must lie in (0, 1), got " + std::to_string(p));
  }
  AmplificationSchedule s;
  s.p = p;
  s.theta = std::asin(std::sqrt(p));
  s.mode = mode;
  const double pi = std::numbers::pi;

  if (mode == AmplifyMode::Standard) {
    // round(pi/(4 theta) - 1/2) with halves rounded up.
    s.iterations = std::max(0, static_cast<int>(std::floor(pi / (4.0 * s.theta) + 1e-12)));
    s.phase_angle = pi;
    const double amp = std::sin((2.0 * s.iterations + 1.0) * s.theta);
    s.predicted_success = amp * amp;
    return s;
  }

  // Smallest J with (2J + 1) theta >= pi/2; the shared angle then shrinks the
  // per-iteration rotation so that J steps end exactly on the valid subspace.
  const double needed = (pi / (2.0 * s.theta) - 1.0) / 2.0;
  s.iterations = std::max(1, static_cast<int>(std::ceil(needed - 1e-12)));
  const double ratio = std::sin(pi / (4.0 * s.iterations + 2.0)) / std::sin(s.theta);
  s.phase_angle = 2.0 * std::asin(std::min(1.0, ratio));
  s.predicted_success = 1.0;
  return s;
}

AmplifyResult amplify_valid(const TspInstance& instance, AmplifyMode mode,
                            const AmplifyOptions& options) {
  const RegisterLayout layout = make_layout(instance.n());
  if (layout.total_qubits() > options.ceiling) {
    throw std::invalid_argument("n = " + std::to_string(instance.n()) + " needs " +
                                std::to_string(layout.total_qubits()) +
                                " qubits, above the ceiling of " + std::to_string(options.ceiling));
  }
  AmplificationSchedule schedule = make_schedule(success_probability(instance.n()), mode);
  if (options.iterations_override >= 0) {
    schedule.iterations = options.iterations_override;
    if (mode == AmplifyMode::Standard) {
      const double amp = std::sin((2.0 * schedule.iterations + 1.0) * schedule.theta);
      schedule.predicted_success = amp * amp;
    }
  }

  Circuit iteration = grover_iteration(layout, schedule.phase_angle);
  if (options.interleave_cost_phase) {
    iteration.append(cost_oracle(instance, layout, default_config(instance)));
  }

  StateVector state(layout.total_qubits(), options.ceiling);
  run_inplace(state, uniform_prep(layout));
  for (int j = 0; j < schedule.iterations; ++j) run_inplace(state, iteration);

  const int shift = layout.route_qubit_count();
  const std::size_t patterns = std::size_t{1} << shift;
  std::vector<char> valid(patterns);
  std::size_t valid_count = 0;
  for (std::size_t r = 0; r < patterns; ++r) {
    const auto labels = decode_basis_index(layout, r);
    valid[r] = is_permutation_of_labels(labels, instance.n()) ? 1 : 0;
    valid_count += static_cast<std::size_t>(valid[r]);
  }

  std::vector<double> pattern_probability(patterns, 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) pattern_probability[i & (patterns - 1)] += std::norm(amps[i]);

  AmplifyResult result{std::move(state), schedule};
  const auto& final_amps = result.state.amplitudes();
  double first_phase = 0.0;
  bool have_first = false;
  for (std::size_t r = 0; r < patterns; ++r) {
    if (!valid[r]) continue;
    result.achieved += pattern_probability[r];
    const double phase = std::arg(final_amps[r]);
    if (!have_first) {
      first_phase = phase;
      have_first = true;
    } else {
      const double diff = std::remainder(phase - first_phase, 2.0 * std::numbers::pi);
      result.phase_spread = std::max(result.phase_spread, std::abs(diff));
    }
  }
  const double per_tour = result.achieved / static_cast<double>(valid_count);
  for (std::size_t r = 0; r < patterns; ++r) {
    if (valid[r]) {
      result.uniformity_deviation =
          std::max(result.uniformity_deviation, std::abs(pattern_probability[r] - per_tour));
    }
  }
  result.ancilla_excitation = ancilla_excitation(result.state, layout);
  return result;
}

}  // namespace qtsp
