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
 * @file resources.hpp
 * @brief Gate censuses, closed-form count predictions and a parameterized
 * decomposition cost model.
 *
 * The cost model turns a census of multi-controlled gates into CX, T and
 * depth estimates with linear-in-arity coefficients. The default
 * coefficients are illustrative; the estimates are model outputs.
 */

#include <span>
#include <string>
#include <vector>

#include "qtsp/circuit.hpp"

namespace qtsp {

/// slope * k + offset for a gate with k controls.
struct Affine {
  long long slope = 0;
  long long offset = 0;

  [[nodiscard]] long long at(long long k) const { return slope * k + offset; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

struct CostModel {
  Affine mcx_cx{6, 0};
  Affine mcx_t{4, 0};
  /// Synthesis precision of arbitrary phases; each MCPhase adds ceil(log2(1/eps)) T.
  double epsilon = 1e-3;
  /// Spread transition gates over floor(T/2) disjoint slot pairs in the depth estimate.
  bool parallel_slots = false;

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

/// Throws std::invalid_argument on negative coefficients or eps outside (0, 1).
void validate(const CostModel& model);

struct ResourceReport {
  int n = 0;
  Census census;
  long long cx_estimate = 0;
  long long t_estimate = 0;
  long long depth_estimate = 0;
  CostModel model;

  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

Census predicted_validity_counts(int n);
/// Count with zero-angle gates kept.
Census predicted_cost_counts(int n);

/**
 * Applies @p model to @p census. When @p n is given and the model enables
 * slot parallelism, MCPhase gates of arity 2b are treated as transition gates
 * and their serial CX depth is divided by floor(T/2).
 */
ResourceReport estimate(const Census& census, const CostModel& model, int n = 0);

enum class OracleBlock { Prep, Validity, Cost };

const char* to_string(OracleBlock block);
OracleBlock parse_oracle_block(const std::string& text);

/// Gates in the constructed block for n cities (cost oracle with zero-angle gates).
std::size_t block_gate_count(int n, OracleBlock block);

struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
  std::vector<int> ns;
  std::vector<double> counts;
};

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> xs, std::span<const double> ys,
                     double* intercept = nullptr);

/**
 * Fits count ~ T^k over the constructed circuits, with T = n - 1 time steps.
 * Needs at least five points, all n >= 4.
 */
ScalingFit scaling_fit(std::span<const int> ns, OracleBlock block);

}  // namespace qtsp
