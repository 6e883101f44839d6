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
 * @file circuit.hpp
 * @brief Gate-level circuit representation with per-control polarities.
 */

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qtsp {

using Qubit = int;

/// Marks an MCPhase gate that applies its phase on the control pattern alone.
inline constexpr Qubit kNoTarget = -1;

enum class GateKind { H, X, MCX, MCPhase };

[[nodiscard]] const char* to_string(GateKind kind);

struct Control {
  Qubit qubit = 0;
  /// Required value of the control qubit: true for |1>, false for |0>.
  bool polarity = true;

  friend bool operator==(const Control&, const Control&) = default;
};

/**
 * A single-target gate.
 *
 * MCX flips the target when every control holds its polarity. MCPhase
 * multiplies the amplitude by e^{i angle} when every control holds its
 * polarity and the target is |1>. An MCPhase without a target (kNoTarget)
 * is a phase on the control pattern itself, i.e. a multi-controlled global
 * phase; it must have at least one control.
 */
struct Gate {
  GateKind kind = GateKind::H;
  Qubit target = 0;
  std::vector<Control> controls;
  double angle = 0.0;

  static Gate h(Qubit target) { return {GateKind::H, target, {}, 0.0}; }
  static Gate x(Qubit target) { return {GateKind::X, target, {}, 0.0}; }
  static Gate mcx(Qubit target, std::vector<Control> controls) {
    return {GateKind::MCX, target, std::move(controls), 0.0};
  }
  static Gate mcphase(Qubit target, std::vector<Control> controls, double angle) {
    return {GateKind::MCPhase, target, std::move(controls), angle};
  }
  static Gate pattern_phase(std::vector<Control> controls, double angle) {
    return {GateKind::MCPhase, kNoTarget, std::move(controls), angle};
  }

  [[nodiscard]] bool has_target() const { return target != kNoTarget; }
  [[nodiscard]] int arity() const { return static_cast<int>(controls.size()); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws std::invalid_argument if the gate breaks its structural invariants
/// or touches a qubit >= num_qubits.
void validate_gate(const Gate& gate, int num_qubits);

class Circuit {
public:
  Circuit() = default;
  explicit Circuit(int num_qubits);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }

  Circuit& append(Gate gate);
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

Circuit compose(const Circuit& first, const Circuit& second);
Circuit inverse(const Circuit& circuit);

/// Rewrites 0-polarity controls as X conjugations around an all-|1> gate.
Circuit lower_polarities(const Circuit& circuit);

struct GateKey {
  GateKind kind = GateKind::H;
  int arity = 0;

  friend bool operator==(const GateKey&, const GateKey&) = default;
  friend auto operator<=>(const GateKey&, const GateKey&) = default;
};

using Census = std::map<GateKey, std::size_t>;

Census gate_census(const Circuit& circuit);
Census operator+(Census lhs, const Census& rhs);

/// One gate per line: `KIND target [+c -c ...] angle`; a missing target is `*`.
std::string dump(const Circuit& circuit);
std::string dump(const Gate& gate);

/**
 * Qubit assignment for the route encoding.
 *
 * Slot t (0-based) holds bits [t*b, (t+1)*b), bit 0 being the least
 * significant bit of the label. The n - 1 parity ancillas follow the route
 * register, then the flag.
 */
struct RegisterLayout {
  int n = 0;
  int time_steps = 0;
  int bits_per_label = 0;

  [[nodiscard]] int route_qubit_count() const { return time_steps * bits_per_label; }
  [[nodiscard]] int label_count() const { return n - 1; }
  [[nodiscard]] int total_qubits() const { return route_qubit_count() + label_count() + 1; }

  [[nodiscard]] Qubit route_qubit(int slot, int bit) const { return slot * bits_per_label + bit; }
  [[nodiscard]] Qubit parity_qubit(int label) const { return route_qubit_count() + label; }
  [[nodiscard]] Qubit flag_qubit() const { return route_qubit_count() + label_count(); }

  [[nodiscard]] std::vector<Qubit> route_qubits() const;
  [[nodiscard]] std::vector<Qubit> parity_qubits() const;

  /// Controls matching slot @p slot against the binary encoding of @p label.
  [[nodiscard]] std::vector<Control> label_controls(int slot, int label) const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

/// Smallest b with 2^b >= labels.
int bits_for_labels(int labels);

RegisterLayout make_layout(int n);

}  // namespace qtsp
