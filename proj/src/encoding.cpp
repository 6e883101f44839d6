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

#include "qtsp/encoding.hpp"

#include <stdexcept>
#include <string>

namespace qtsp {

EncodingConfig default_config(const TspInstance& instance, bool include_zero_angle_gates) {
  const LambdaMode mode =
      instance.n() <= kDefaultBruteForceGuard ? LambdaMode::Tight : LambdaMode::Loose;
  return config_for(instance, mode, include_zero_angle_gates);
}

EncodingConfig config_for(const TspInstance& instance, LambdaMode mode,
                          bool include_zero_angle_gates) {
  return EncodingConfig{lambda_bound(instance, mode), include_zero_angle_gates};
}

Circuit uniform_prep(const RegisterLayout& layout) {
  Circuit c(layout.total_qubits());
  for (const Qubit q : layout.route_qubits()) c.append(Gate::h(q));
  return c;
}

Circuit validity_oracle(const RegisterLayout& layout) {
  Circuit c(layout.total_qubits());
  for (int t = 0; t < layout.time_steps; ++t) {
    for (int label = 0; label < layout.label_count(); ++label) {
      c.append(Gate::mcx(layout.parity_qubit(label), layout.label_controls(t, label)));
    }
  }
  std::vector<Control> all_odd;
  for (const Qubit q : layout.parity_qubits()) all_odd.push_back({q, true});
  c.append(Gate::mcx(layout.flag_qubit(), std::move(all_odd)));
  return c;
}

Circuit validity_phase_oracle(const RegisterLayout& layout, double angle) {
  const Circuit compute = validity_oracle(layout);
  Circuit c = compute;
  c.append(Gate::mcphase(layout.flag_qubit(), {}, angle));
  c.append(inverse(compute));
  return c;
}

Circuit cost_oracle(const TspInstance& instance, const RegisterLayout& layout,
                    const EncodingConfig& config) {
  if (!(config.lambda > 0.0)) {
    throw std::invalid_argument("lambda must be positive, got " + std::to_string(config.lambda));
  }
  if (instance.n() != layout.n) {
    throw std::invalid_argument("layout is for n = " + std::to_string(layout.n) +
                                ", instance has n = " + std::to_string(instance.n()));
  }
  Circuit c(layout.total_qubits());
  const auto emit = [&](std::vector<Control> controls, double edge) {
    const double angle = edge / config.lambda;
    if (angle == 0.0 && !config.include_zero_angle_gates) return;
    c.append(Gate::pattern_phase(std::move(controls), angle));
  };

  const int labels = layout.label_count();
  const int start = instance.start();
  const int last = layout.time_steps - 1;

  for (int i = 0; i < labels; ++i) emit(layout.label_controls(0, i), instance.cost(start, i));

  for (int t = 0; t < last; ++t) {
    for (int i = 0; i < labels; ++i) {
      for (int j = 0; j < labels; ++j) {
        auto controls = layout.label_controls(t, i);
        const auto next = layout.label_controls(t + 1, j);
        controls.insert(controls.end(), next.begin(), next.end());
        emit(std::move(controls), instance.cost(i, j));
      }
    }
  }

  for (int i = 0; i < labels; ++i) emit(layout.label_controls(last, i), instance.cost(i, start));
  return c;
}

Circuit encoding_pipeline(const TspInstance& instance, const RegisterLayout& layout,
                          const EncodingConfig& config) {
  Circuit c = uniform_prep(layout);
  c.append(validity_oracle(layout));
  c.append(cost_oracle(instance, layout, config));
  return c;
}

std::vector<Label> decode_basis_index(const RegisterLayout& layout, BasisIndex index) {
  const int bits = layout.route_qubit_count();
  if (bits < 64 && index >> bits != 0) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " exceeds the route register of " + std::to_string(bits) + " qubits");
  }
  const BasisIndex mask = (BasisIndex{1} << layout.bits_per_label) - 1;
  std::vector<Label> labels(static_cast<std::size_t>(layout.time_steps));
  for (int t = 0; t < layout.time_steps; ++t) {
    labels[static_cast<std::size_t>(t)] =
        static_cast<Label>((index >> (t * layout.bits_per_label)) & mask);
  }
  return labels;
}

BasisIndex encode_labels(const RegisterLayout& layout, std::span<const Label> labels) {
  if (static_cast<int>(labels.size()) != layout.time_steps) {
    throw std::invalid_argument("expected " + std::to_string(layout.time_steps) + " labels, got " +
                                std::to_string(labels.size()));
  }
  BasisIndex index = 0;
  for (int t = 0; t < layout.time_steps; ++t) {
    const Label x = labels[static_cast<std::size_t>(t)];
    if (x < 0 || x >= (1 << layout.bits_per_label)) {
      throw std::out_of_range("label " + std::to_string(x) + " does not fit in " +
                              std::to_string(layout.bits_per_label) + " bits");
    }
    index |= static_cast<BasisIndex>(x) << (t * layout.bits_per_label);
  }
  return index;
}

TourRecord classify(const TspInstance& instance, std::span<const Label> labels,
                    const EncodingConfig& config) {
  const int n = instance.n();
  const auto in_range = [n](Label x) { return x >= 0 && x < n - 1; };
  TourRecord record;
  record.labels.assign(labels.begin(), labels.end());
  record.valid = is_permutation_of_labels(labels, n);
  if (labels.empty()) return record;

  const int start = instance.start();
  double cost = 0.0;
  if (in_range(labels.front())) cost += instance.cost(start, labels.front());
  for (std::size_t t = 0; t + 1 < labels.size(); ++t) {
    if (in_range(labels[t]) && in_range(labels[t + 1])) cost += instance.cost(labels[t], labels[t + 1]);
  }
  if (in_range(labels.back())) cost += instance.cost(labels.back(), start);
  record.cost = cost;
  record.phase = cost / config.lambda;
  return record;
}

}  // namespace qtsp
