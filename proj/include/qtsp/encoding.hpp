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
 * @file encoding.hpp
 * @brief Circuit builders for the time-register route encoding and the
 * classical mirror of what they compute.
 */

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qtsp/circuit.hpp"
#include "qtsp/instance.hpp"

namespace qtsp {

using BasisIndex = std::uint64_t;

struct EncodingConfig {
  /// Phase normalization; the oracle applies cost / lambda radians.
  double lambda = 1.0;
  /// Keep MCPhase gates whose angle is exactly zero (count-faithful form).
  bool include_zero_angle_gates = false;
};

/// Tight bound when the instance is small enough to enumerate, loose otherwise.
EncodingConfig default_config(const TspInstance& instance, bool include_zero_angle_gates = false);
EncodingConfig config_for(const TspInstance& instance, LambdaMode mode,
                          bool include_zero_angle_gates = false);

struct TourRecord {
  std::vector<Label> labels;
  bool valid = false;
  /// In-range edge contributions only; equals tour_cost for valid records.
  double cost = 0.0;
  /// Applied phase in radians, cost / lambda.
  double phase = 0.0;
};

/// Hadamard on every route qubit.
Circuit uniform_prep(const RegisterLayout& layout);

/**
 * |x>|0..0>|0> -> |x>|p_0(x)..p_{n-2}(x)>|v(x)>, with p_i the parity of the
 * occurrences of label i and v the AND of all parities. The parity ancillas
 * are left computed.
 */
Circuit validity_oracle(const RegisterLayout& layout);

/// Compute, phase @p angle on the flag, uncompute: |x> -> e^{i angle v(x)}|x>.
Circuit validity_phase_oracle(const RegisterLayout& layout,
                              double angle = std::numbers::pi);

/**
 * Diagonal phase e^{i L(x)/lambda} built from one pattern phase per start
 * label, per ordered label pair on each adjacent slot pair, and per return
 * label. Out-of-range labels pick up no phase.
 */
Circuit cost_oracle(const TspInstance& instance, const RegisterLayout& layout,
                    const EncodingConfig& config);

/// Uniform preparation followed by the validity and cost oracles.
Circuit encoding_pipeline(const TspInstance& instance, const RegisterLayout& layout,
                          const EncodingConfig& config);

std::vector<Label> decode_basis_index(const RegisterLayout& layout, BasisIndex index);
BasisIndex encode_labels(const RegisterLayout& layout, std::span<const Label> labels);

/// Classical evaluation of what the validity and cost oracles apply to |labels>.
TourRecord classify(const TspInstance& instance, std::span<const Label> labels,
                    const EncodingConfig& config);

}  // namespace qtsp
