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
 * @file sim.hpp
 * @brief Dense statevector execution of the gate IR.
 *
 * Basis index bit k is the value of qubit k.
 */

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qtsp/circuit.hpp"
#include "qtsp/encoding.hpp"

namespace qtsp {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultQubitCeiling = 24;

class StateVector {
public:
  /// |0...0> on @p num_qubits qubits; 1 <= num_qubits <= ceiling.
  explicit StateVector(int num_qubits, int ceiling = kDefaultQubitCeiling);
  /// Takes ownership of 2^num_qubits amplitudes. The norm is not checked.
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::size_t dimension() const { return amplitudes_.size(); }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  [[nodiscard]] std::span<Amplitude> amplitudes() { return amplitudes_; }
  [[nodiscard]] const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
  [[nodiscard]] Amplitude& operator[](std::size_t i) { return amplitudes_[i]; }

  [[nodiscard]] double norm_squared() const;

private:
  int num_qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

StateVector init_state(int num_qubits, int ceiling = kDefaultQubitCeiling);

void apply_gate_inplace(StateVector& state, const Gate& gate);
StateVector apply_gate(StateVector state, const Gate& gate);

void run_inplace(StateVector& state, const Circuit& circuit);
StateVector run(StateVector state, const Circuit& circuit);

/// Probability that @p qubit reads @p value (0 or 1).
double subspace_probability(const StateVector& state, Qubit qubit, int value);

/// Total probability on basis states whose ancilla part (parities and flag) is not all zero.
double ancilla_excitation(const StateVector& state, const RegisterLayout& layout);

/**
 * Maps a basis state through a circuit of X, MCX and MCPhase gates, ignoring
 * phases. Throws std::invalid_argument on H.
 */
BasisIndex execute_classical(const Circuit& circuit, BasisIndex input);

struct RouteEntry {
  BasisIndex route = 0;
  /// Amplitude of the first ancilla branch above tolerance, 0 if none.
  Amplitude amplitude{0.0, 0.0};
  /// Ancilla value of that branch: parity i at bit i, flag at bit n - 1.
  std::uint64_t ancillas = 0;
  /// Number of ancilla branches above tolerance; more than one means the
  /// ancillas are entangled with this route pattern.
  int branches = 0;

  [[nodiscard]] bool flag(const RegisterLayout& layout) const {
    return ((ancillas >> layout.label_count()) & 1U) != 0;
  }
  [[nodiscard]] bool parity(int label) const { return ((ancillas >> label) & 1U) != 0; }
};

/// One entry per route basis pattern, indexed by the route bits.
std::vector<RouteEntry> route_marginals(const StateVector& state, const RegisterLayout& layout,
                                        double tolerance = 1e-12);

/// `index,re,im` per line with 17 significant digits.
void write_csv(const StateVector& state, std::ostream& out);
/// Little-endian: int32 qubit count, then interleaved float64 (re, im).
void write_binary(const StateVector& state, std::ostream& out);
StateVector read_binary(std::istream& in);

}  // namespace qtsp
