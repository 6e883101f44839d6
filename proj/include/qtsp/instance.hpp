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
 * @file instance.hpp
 * @brief Classical TSP model: instance ingestion, tour costs and brute-force
 * optima.
 *
 * Everything the quantum circuits compute is checked against the functions in
 * this header. Cities are relabeled at construction so that the fixed start
 * city is always the last index, n - 1; the remaining cities 0..n-2 are the
 * labels that appear in a route.
 */

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qtsp {

using Label = int;

/// Largest city count accepted by the factorial enumerations.
inline constexpr int kDefaultBruteForceGuard = 12;

class TspInstance {
public:
  /**
   * Validates and normalizes a directed cost matrix.
   *
   * The diagonal is forced to zero. If @p start is not the last city, the
   * start is swapped with city n - 1 and the permutation is kept so results
   * can be reported in the caller's labels.
   */
  static TspInstance create(std::vector<std::vector<double>> cost, int start);

  [[nodiscard]] int n() const { return n_; }
  /// Internal start city; always n - 1.
  [[nodiscard]] int start() const { return n_ - 1; }
  [[nodiscard]] double cost(int from, int to) const {
    return cost_[static_cast<std::size_t>(from) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(to)];
  }
  [[nodiscard]] double max_edge() const;

  /// Label in the input document for internal city @p city.
  [[nodiscard]] int original_label(int city) const {
    return original_[static_cast<std::size_t>(city)];
  }
  [[nodiscard]] int original_start() const { return original_label(n_ - 1); }
  [[nodiscard]] bool relabeled() const { return original_start() != n_ - 1; }

  /// Cost matrix in internal labels, row-major (from, to).
  [[nodiscard]] std::vector<std::vector<double>> matrix() const;

  friend bool operator==(const TspInstance&, const TspInstance&) = default;

private:
  TspInstance() = default;

  int n_ = 0;
  std::vector<double> cost_;
  std::vector<int> original_;
};

/// A visiting order of the non-start cities; a permutation of 0..n-2.
struct Tour {
  std::vector<Label> order;

  friend bool operator==(const Tour&, const Tour&) = default;
  friend auto operator<=>(const Tour&, const Tour&) = default;
};

struct TourOptimum {
  Tour tour;
  double cost = 0.0;
};

enum class LambdaMode { Loose, Tight };

/// Parses the JSON form `{"n": .., "start": .., "cost": [[..], ..]}`.
TspInstance parse_instance_json(std::string_view document);
/// Parses n rows of n comma-separated reals; the start is the last city.
TspInstance parse_instance_csv(std::string_view document);
/// Dispatches on the first non-blank character: `{` is JSON, anything else CSV.
TspInstance parse_instance(std::string_view document);
TspInstance load_instance(const std::string& path);

/// The 5-city directed instance used as the reference example.
TspInstance figure_instance();

/// Uniform random costs in [0, 1) with two decimals, deterministic in @p seed.
TspInstance random_instance(int n, unsigned long long seed);

/**
 * Cost of a label sequence of length n - 1 with labels in 0..n-2, including
 * the edges leaving and returning to the start. The sequence need not be a
 * permutation.
 */
double tour_cost(const TspInstance& instance, std::span<const Label> order);
inline double tour_cost(const TspInstance& instance, const Tour& tour) {
  return tour_cost(instance, std::span<const Label>(tour.order));
}

[[nodiscard]] bool is_permutation_of_labels(std::span<const Label> labels, int n);

/// Minimum-cost tour; ties go to the lexicographically smallest order.
TourOptimum brute_force_optimum(const TspInstance& instance,
                                int guard = kDefaultBruteForceGuard);
double longest_tour_cost(const TspInstance& instance,
                         int guard = kDefaultBruteForceGuard);

/**
 * Upper bound on the tour length used to normalize phases. Loose is the
 * largest edge times n; tight is the longest tour. Returns 1 when every cost
 * is zero.
 */
double lambda_bound(const TspInstance& instance, LambdaMode mode,
                    int guard = kDefaultBruteForceGuard);

/// Renders an order with the start city before and after, in input labels.
std::string format_tour(const TspInstance& instance, std::span<const Label> order);

}  // namespace qtsp
