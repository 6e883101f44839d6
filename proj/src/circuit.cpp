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

#include "qtsp/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace qtsp {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::MCX:
      return "MCX";
    case GateKind::MCPhase:
      return "MCPHASE";
  }
  return "?";
}

void validate_gate(const Gate& gate, int num_qubits) {
  const auto in_range = [num_qubits](Qubit q) { return q >= 0 && q < num_qubits; };
  if (gate.has_target() && !in_range(gate.target)) {
    throw std::invalid_argument("gate target " + std::to_string(gate.target) +
                                " out of range for " + std::to_string(num_qubits) + " qubits");
  }
  if (!gate.has_target() && gate.kind != GateKind::MCPhase) {
    throw std::invalid_argument(std::string(to_string(gate.kind)) + " gate needs a target");
  }
  if (!gate.has_target() && gate.controls.empty()) {
    throw std::invalid_argument("a target-free MCPHASE needs at least one control");
  }
  if ((gate.kind == GateKind::H || gate.kind == GateKind::X) && !gate.controls.empty()) {
    throw std::invalid_argument("H and X gates take no controls");
  }
  std::unordered_set<Qubit> seen;
  for (const Control& c : gate.controls) {
    if (!in_range(c.qubit)) {
      throw std::invalid_argument("control " + std::to_string(c.qubit) + " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
    }
    if (c.qubit == gate.target || !seen.insert(c.qubit).second) {
      throw std::invalid_argument("control qubit " + std::to_string(c.qubit) +
                                  " repeats the target or another control");
    }
  }
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw std::invalid_argument("negative qubit count");
}

Circuit& Circuit::append(Gate gate) {
  validate_gate(gate, num_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("cannot join circuits on " + std::to_string(num_qubits_) +
                                " and " + std::to_string(other.num_qubits_) + " qubits");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit compose(const Circuit& first, const Circuit& second) {
  Circuit out = first;
  out.append(second);
  return out;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::MCPhase) g.angle = -g.angle;
    out.append(std::move(g));
  }
  return out;
}

Circuit lower_polarities(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const Gate& gate : circuit.gates()) {
    std::vector<Qubit> flipped;
    Gate positive = gate;
    for (Control& c : positive.controls) {
      if (!c.polarity) {
        flipped.push_back(c.qubit);
        c.polarity = true;
      }
    }
    for (const Qubit q : flipped) out.append(Gate::x(q));
    out.append(std::move(positive));
    for (const Qubit q : flipped) out.append(Gate::x(q));
  }
  return out;
}

Census gate_census(const Circuit& circuit) {
  Census census;
  for (const Gate& g : circuit.gates()) ++census[GateKey{g.kind, g.arity()}];
  return census;
}

Census operator+(Census lhs, const Census& rhs) {
  for (const auto& [key, count] : rhs) lhs[key] += count;
  return lhs;
}

std::string dump(const Gate& gate) {
  std::string line = to_string(gate.kind);
  line += ' ';
  line += gate.has_target() ? std::to_string(gate.target) : std::string("*");
  line += " [";
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    if (i > 0) line += ' ';
    line += gate.controls[i].polarity ? '+' : '-';
    line += std::to_string(gate.controls[i].qubit);
  }
  char angle[40];
  std::snprintf(angle, sizeof angle, "] %.17g", gate.angle);
  line += angle;
  return line;
}

std::string dump(const Circuit& circuit) {
  std::string out;
  for (const Gate& g : circuit.gates()) {
    out += dump(g);
    out += '\n';
  }
  return out;
}

std::vector<Qubit> RegisterLayout::route_qubits() const {
  std::vector<Qubit> out(static_cast<std::size_t>(route_qubit_count()));
  for (int q = 0; q < route_qubit_count(); ++q) out[static_cast<std::size_t>(q)] = q;
  return out;
}

std::vector<Qubit> RegisterLayout::parity_qubits() const {
  std::vector<Qubit> out;
  for (int i = 0; i < label_count(); ++i) out.push_back(parity_qubit(i));
  return out;
}

std::vector<Control> RegisterLayout::label_controls(int slot, int label) const {
  std::vector<Control> out;
  out.reserve(static_cast<std::size_t>(bits_per_label));
  for (int k = 0; k < bits_per_label; ++k) {
    out.push_back({route_qubit(slot, k), ((label >> k) & 1) != 0});
  }
  return out;
}

int bits_for_labels(int labels) {
  int b = 0;
  while ((1LL << b) < labels) ++b;
  return b;
}

RegisterLayout make_layout(int n) {
  if (n < 3) throw std::invalid_argument("layout needs n >= 3, got " + std::to_string(n));
  return RegisterLayout{n, n - 1, bits_for_labels(n - 1)};
}

}  // namespace qtsp
