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

#include "qtsp/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtsp {

namespace {

using Index = std::uint64_t;

// Fixed bit positions of a gate and the values they must hold.
struct Pattern {
  std::vector<int> positions;  // ascending
  Index mask = 0;
  Index value = 0;
};

Pattern control_pattern(const Gate& gate, bool include_target) {
  Pattern p;
  for (const Control& c : gate.controls) {
    p.positions.push_back(c.qubit);
    p.mask |= Index{1} << c.qubit;
    if (c.polarity) p.value |= Index{1} << c.qubit;
  }
  if (include_target) {
    p.positions.push_back(gate.target);
    p.mask |= Index{1} << gate.target;
  }
  std::sort(p.positions.begin(), p.positions.end());
  return p;
}

// Spreads the bits of k over the positions not in p.positions.
inline Index insert_zero_bits(Index k, const std::vector<int>& positions) {
  for (const int pos : positions) {
    const Index low = k & ((Index{1} << pos) - 1);
    k = ((k >> pos) << (pos + 1)) | low;
  }
  return k;
}

template <typename Kernel>
void for_each_match(int num_qubits, const Pattern& p, Kernel&& kernel) {
  const Index count = Index{1} << (num_qubits - static_cast<int>(p.positions.size()));
  for (Index k = 0; k < count; ++k) kernel(insert_zero_bits(k, p.positions) | p.value);
}

void check_qubits(const StateVector& state, const Gate& gate) {
  validate_gate(gate, state.num_qubits());
}

}  // namespace

StateVector::StateVector(int num_qubits, int ceiling) : num_qubits_(num_qubits) {
  if (ceiling > 62) throw std::invalid_argument("qubit ceiling must be at most 62");
  if (num_qubits < 1 || num_qubits > ceiling) {
    throw std::invalid_argument("qubit count " + std::to_string(num_qubits) + " not in 1.." +
                                std::to_string(ceiling));
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > 62 ||
      amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count does not match 2^" + std::to_string(num_qubits));
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amplitudes_) total += std::norm(a);
  return total;
}

StateVector init_state(int num_qubits, int ceiling) { return StateVector(num_qubits, ceiling); }

void apply_gate_inplace(StateVector& state, const Gate& gate) {
  check_qubits(state, gate);
  auto amps = state.amplitudes();
  const int q = state.num_qubits();

  switch (gate.kind) {
    case GateKind::H: {
      const Index bit = Index{1} << gate.target;
      const double s = std::numbers::sqrt2 / 2.0;
      for_each_match(q, control_pattern(gate, true), [&](Index i0) {
        const Amplitude a = amps[i0];
        const Amplitude b = amps[i0 | bit];
        amps[i0] = s * (a + b);
        amps[i0 | bit] = s * (a - b);
      });
      break;
    }
    case GateKind::X:
    case GateKind::MCX: {
      const Index bit = Index{1} << gate.target;
      for_each_match(q, control_pattern(gate, true),
                     [&](Index i0) { std::swap(amps[i0], amps[i0 | bit]); });
      break;
    }
    case GateKind::MCPhase: {
      const Amplitude phase = std::polar(1.0, gate.angle);
      const bool targeted = gate.has_target();
      const Index bit = targeted ? Index{1} << gate.target : 0;
      for_each_match(q, control_pattern(gate, targeted),
                     [&](Index i) { amps[i | bit] *= phase; });
      break;
    }
  }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  apply_gate_inplace(state, gate);
  return state;
}

void run_inplace(StateVector& state, const Circuit& circuit) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("circuit acts on " + std::to_string(circuit.num_qubits()) +
                                " qubits, state has " + std::to_string(state.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) apply_gate_inplace(state, g);
}

StateVector run(StateVector state, const Circuit& circuit) {
  run_inplace(state, circuit);
  return state;
}

double subspace_probability(const StateVector& state, Qubit qubit, int value) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range");
  }
  const Index want = value != 0 ? 1 : 0;
  double total = 0.0;
  const auto amps = state.amplitudes();
  for (Index i = 0; i < amps.size(); ++i) {
    if (((i >> qubit) & 1U) == want) total += std::norm(amps[i]);
  }
  return total;
}

double ancilla_excitation(const StateVector& state, const RegisterLayout& layout) {
  if (state.num_qubits() != layout.total_qubits()) {
    throw std::invalid_argument("state does not match the register layout");
  }
  const int shift = layout.route_qubit_count();
  double total = 0.0;
  const auto amps = state.amplitudes();
  for (Index i = 0; i < amps.size(); ++i) {
    if ((i >> shift) != 0) total += std::norm(amps[i]);
  }
  return total;
}

BasisIndex execute_classical(const Circuit& circuit, BasisIndex input) {
  BasisIndex state = input;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::H) {
      throw std::invalid_argument("H does not map basis states to basis states");
    }
    if (g.kind == GateKind::MCPhase) continue;
    const Pattern p = control_pattern(g, false);
    if ((state & p.mask) == p.value) state ^= BasisIndex{1} << g.target;
  }
  return state;
}

std::vector<RouteEntry> route_marginals(const StateVector& state, const RegisterLayout& layout,
                                        double tolerance) {
  if (state.num_qubits() != layout.total_qubits()) {
    throw std::invalid_argument("state does not match the register layout");
  }
  const int shift = layout.route_qubit_count();
  const Index route_mask = (Index{1} << shift) - 1;
  std::vector<RouteEntry> table(std::size_t{1} << shift);
  for (Index r = 0; r < table.size(); ++r) table[r].route = r;

  const auto amps = state.amplitudes();
  for (Index i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) <= tolerance) continue;
    RouteEntry& e = table[i & route_mask];
    if (e.branches++ == 0) {
      e.amplitude = amps[i];
      e.ancillas = i >> shift;
    }
  }
  return table;
}

void write_csv(const StateVector& state, std::ostream& out) {
  char line[96];
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", i, amps[i].real(), amps[i].imag());
    out << line;
  }
}

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  static_assert(std::endian::native == std::endian::little, "little-endian host assumed");
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
T get_le(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof value);
  if (!in) throw std::runtime_error("truncated statevector stream");
  return value;
}

}  // namespace

void write_binary(const StateVector& state, std::ostream& out) {
  put_le<std::int32_t>(out, state.num_qubits());
  for (const Amplitude& a : state.amplitudes()) {
    put_le<double>(out, a.real());
    put_le<double>(out, a.imag());
  }
}

StateVector read_binary(std::istream& in) {
  const auto q = get_le<std::int32_t>(in);
  if (q < 1 || q > kDefaultQubitCeiling) {
    throw std::runtime_error("statevector stream declares " + std::to_string(q) + " qubits");
  }
  std::vector<Amplitude> amps(std::size_t{1} << q);
  for (Amplitude& a : amps) {
    const double re = get_le<double>(in);
    const double im = get_le<double>(in);
    a = {re, im};
  }
  return StateVector(q, std::move(amps));
}

}  // namespace qtsp
