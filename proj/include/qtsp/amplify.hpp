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
 * @file amplify.hpp
 * @brief Amplitude amplification of the uniform route superposition onto the
 * valid-tour subspace.
 *
 * The success probability of the prepared state is known in closed form, so
 * besides the usual Grover schedule an exact schedule is available: J
 * iterations whose oracle and diffusion share an adjusted phase angle,
 * chosen so that J iterations land on the valid subspace with probability 1.
 */

#include <string>

#include "qtsp/circuit.hpp"
#include "qtsp/instance.hpp"
#include "qtsp/sim.hpp"

namespace qtsp {

enum class AmplifyMode { Standard, Exact };

const char* to_string(AmplifyMode mode);
AmplifyMode parse_amplify_mode(const std::string& text);

struct AmplificationSchedule {
  double p = 0.0;
  double theta = 0.0;
  int iterations = 0;
  AmplifyMode mode = AmplifyMode::Standard;
  double phase_angle = 0.0;
  double predicted_success = 0.0;

  friend bool operator==(const AmplificationSchedule&, const AmplificationSchedule&) = default;
};

/// (n-1)! / 2^{bT}: weight of the valid tours in the uniform route state.
double success_probability(int n);
/// Stirling form of (n-1)!/(n-1)^{n-1}.
double stirling_estimate(int n);
/// (n-1)!/(n-1)^{n-1}, the fraction when every slot holds exactly n-1 labels.
double label_space_fraction(int n);

/// Valid-phase oracle at @p phase_angle, then reflection-with-phase about the
/// uniform route state. Ancillas start and end in |0>.
Circuit grover_iteration(const RegisterLayout& layout, double phase_angle);

AmplificationSchedule make_schedule(double p, AmplifyMode mode);

struct AmplifyOptions {
  int ceiling = kDefaultQubitCeiling;
  /// Apply the cost oracle after every iteration. Composition hook only.
  bool interleave_cost_phase = false;
  /// Overrides the schedule's iteration count when >= 0.
  int iterations_override = -1;
};

struct AmplifyResult {
  StateVector state;
  AmplificationSchedule schedule;
  /// Probability on route patterns that are valid tours.
  double achieved = 0.0;
  /// Largest |P(valid pattern) - achieved/(n-1)!|.
  double uniformity_deviation = 0.0;
  /// Largest phase difference between any valid pattern and the first one.
  double phase_spread = 0.0;
  /// Probability that any ancilla is not |0>.
  double ancilla_excitation = 0.0;
};

AmplifyResult amplify_valid(const TspInstance& instance, AmplifyMode mode,
                            const AmplifyOptions& options = {});

}  // namespace qtsp
