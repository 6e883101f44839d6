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

#include "qtsp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qtsp {

namespace {

void check_matrix(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  if (n < 3) {
    throw std::invalid_argument("instance needs at least 3 cities, got " +
                                std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cost[i].size() != n) {
      throw std::invalid_argument("cost matrix is not square: row " + std::to_string(i) +
                                  " has " + std::to_string(cost[i].size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double c = cost[i][j];
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("cost[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "] must be finite and nonnegative");
      }
    }
  }
}

// Tracks object keys per nesting level so repeated keys can be rejected;
// nlohmann::json silently keeps the last value otherwise.
class DuplicateKeyGuard {
public:
  bool operator()(int /*depth*/, nlohmann::json::parse_event_t event, nlohmann::json& parsed) {
    using Event = nlohmann::json::parse_event_t;
    switch (event) {
      case Event::object_start:
        keys_.emplace_back();
        break;
      case Event::object_end:
        if (!keys_.empty()) keys_.pop_back();
        break;
      case Event::key: {
        const auto key = parsed.get<std::string>();
        if (!keys_.empty() && !keys_.back().insert(key).second) {
          throw std::invalid_argument("duplicate field \"" + key + "\" in instance document");
        }
        break;
      }
      default:
        break;
    }
    return true;
  }

private:
  std::vector<std::set<std::string>> keys_;
};

template <typename Visit>
void for_each_permutation(int labels, Visit&& visit) {
  std::vector<Label> order(static_cast<std::size_t>(labels));
  std::iota(order.begin(), order.end(), 0);
  do {
    visit(std::span<const Label>(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

void check_guard(const TspInstance& instance, int guard) {
  if (instance.n() > guard) {
    throw std::invalid_argument("n = " + std::to_string(instance.n()) +
                                " exceeds the brute-force guard of " + std::to_string(guard));
  }
}

}  // namespace

TspInstance TspInstance::create(std::vector<std::vector<double>> cost, int start) {
  check_matrix(cost);
  const int n = static_cast<int>(cost.size());
  if (start < 0 || start >= n) {
    throw std::invalid_argument("start city " + std::to_string(start) + " is not in 0.." +
                                std::to_string(n - 1));
  }

  TspInstance out;
  out.n_ = n;
  out.original_.resize(static_cast<std::size_t>(n));
  std::iota(out.original_.begin(), out.original_.end(), 0);
  std::swap(out.original_[static_cast<std::size_t>(start)], out.original_.back());

  out.cost_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto from = static_cast<std::size_t>(out.original_[static_cast<std::size_t>(i)]);
      const auto to = static_cast<std::size_t>(out.original_[static_cast<std::size_t>(j)]);
      out.cost_[static_cast<std::size_t>(i * n + j)] = cost[from][to];
    }
  }
  return out;
}

double TspInstance::max_edge() const {
  return *std::max_element(cost_.begin(), cost_.end());
}

std::vector<std::vector<double>> TspInstance::matrix() const {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    out[static_cast<std::size_t>(i)].assign(cost_.begin() + i * n_, cost_.begin() + (i + 1) * n_);
  }
  return out;
}

TspInstance parse_instance_json(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document, DuplicateKeyGuard{});
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("instance JSON must be an object");
  for (const char* field : {"n", "start", "cost"}) {
    if (!doc.contains(field)) {
      throw std::invalid_argument(std::string("instance JSON is missing field \"") + field + "\"");
    }
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "start" && key != "cost") {
      throw std::invalid_argument("unknown field \"" + key + "\" in instance JSON");
    }
  }
  if (!doc["n"].is_number_integer() || !doc["start"].is_number_integer()) {
    throw std::invalid_argument("\"n\" and \"start\" must be integers");
  }
  const auto& rows = doc["cost"];
  if (!rows.is_array()) throw std::invalid_argument("\"cost\" must be an array of rows");

  std::vector<std::vector<double>> cost;
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("\"cost\" rows must be arrays");
    auto& out = cost.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number()) throw std::invalid_argument("cost entries must be numbers");
      out.push_back(v.get<double>());
    }
  }
  const auto n = doc["n"].get<long long>();
  if (n != static_cast<long long>(cost.size())) {
    throw std::invalid_argument("\"n\" = " + std::to_string(n) + " but the cost matrix has " +
                                std::to_string(cost.size()) + " rows");
  }
  return TspInstance::create(std::move(cost), doc["start"].get<int>());
}

TspInstance parse_instance_csv(std::string_view document) {
  std::vector<std::vector<double>> cost;
  std::istringstream lines{std::string(document)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto& row = cost.emplace_back();
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto first = cell.find_first_not_of(" \t\r");
      const auto last = cell.find_last_not_of(" \t\r");
      if (first == std::string::npos) throw std::invalid_argument("empty CSV cell");
      const std::string token = cell.substr(first, last - first + 1);
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("CSV cell \"" + token + "\" is not a number");
      }
      if (used != token.size()) {
        throw std::invalid_argument("CSV cell \"" + token + "\" is not a number");
      }
      row.push_back(value);
    }
  }
  const int start = static_cast<int>(cost.size()) - 1;
  return TspInstance::create(std::move(cost), start);
}

TspInstance parse_instance(std::string_view document) {
  const auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && document[first] == '{') {
    return parse_instance_json(document);
  }
  return parse_instance_csv(document);
}

TspInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

TspInstance figure_instance() {
  return TspInstance::create({{0.00, 0.95, 0.73, 0.60, 0.16},
                              {0.16, 0.00, 0.87, 0.60, 0.71},
                              {0.02, 0.97, 0.00, 0.21, 0.18},
                              {0.18, 0.30, 0.53, 0.00, 0.29},
                              {0.61, 0.14, 0.29, 0.37, 0.00}},
                             4);
}

TspInstance random_instance(int n, unsigned long long seed) {
  if (n < 3) throw std::invalid_argument("instance needs at least 3 cities");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> cost(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // 53-bit mantissa draw; std::uniform_real_distribution is not
      // reproducible across standard libraries.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::floor(u * 100.0) / 100.0;
    }
  }
  return TspInstance::create(std::move(cost), n - 1);
}

double tour_cost(const TspInstance& instance, std::span<const Label> order) {
  const int n = instance.n();
  if (static_cast<int>(order.size()) != n - 1) {
    throw std::invalid_argument("tour has " + std::to_string(order.size()) +
                                " labels, expected " + std::to_string(n - 1));
  }
  for (const Label x : order) {
    if (x < 0 || x > n - 2) {
      throw std::invalid_argument("label " + std::to_string(x) + " is not in 0.." +
                                  std::to_string(n - 2));
    }
  }
  const int start = instance.start();
  double total = instance.cost(start, order.front());
  for (std::size_t t = 0; t + 1 < order.size(); ++t) total += instance.cost(order[t], order[t + 1]);
  total += instance.cost(order.back(), start);
  return total;
}

bool is_permutation_of_labels(std::span<const Label> labels, int n) {
  if (static_cast<int>(labels.size()) != n - 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n - 1), false);
  for (const Label x : labels) {
    if (x < 0 || x > n - 2 || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

TourOptimum brute_force_optimum(const TspInstance& instance, int guard) {
  check_guard(instance, guard);
  TourOptimum best;
  best.cost = std::numeric_limits<double>::infinity();
  // next_permutation walks in lexicographic order, so a strict comparison
  // keeps the smallest order among equal costs.
  for_each_permutation(instance.n() - 1, [&](std::span<const Label> order) {
    const double c = tour_cost(instance, order);
    if (c < best.cost) {
      best.cost = c;
      best.tour.order.assign(order.begin(), order.end());
    }
  });
  return best;
}

double longest_tour_cost(const TspInstance& instance, int guard) {
  check_guard(instance, guard);
  double longest = 0.0;
  for_each_permutation(instance.n() - 1, [&](std::span<const Label> order) {
    longest = std::max(longest, tour_cost(instance, order));
  });
  return longest;
}

double lambda_bound(const TspInstance& instance, LambdaMode mode, int guard) {
  const double bound = mode == LambdaMode::Loose
                           ? instance.max_edge() * static_cast<double>(instance.n())
                           : longest_tour_cost(instance, guard);
  return bound > 0.0 ? bound : 1.0;
}

std::string format_tour(const TspInstance& instance, std::span<const Label> order) {
  const int n = instance.n();
  std::string out = "[" + std::to_string(instance.original_start());
  for (const Label x : order) {
    out += ", ";
    out += std::to_string(x >= 0 && x < n - 1 ? instance.original_label(x) : x);
  }
  out += ", " + std::to_string(instance.original_start()) + "]";
  return out;
}

}  // namespace qtsp
