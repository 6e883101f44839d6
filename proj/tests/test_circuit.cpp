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

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qtsp/circuit.hpp"

namespace qtsp {
namespace {

TEST(Circuit, ValidateRejectsBrokenGates) {
  EXPECT_THROW(validate_gate(Gate::h(3), 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(Gate::mcx(0, {{0, true}}), 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(Gate::mcx(0, {{1, true}, {1, false}}), 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(Gate::pattern_phase({}, 0.5), 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(Gate::mcx(kNoTarget, {{1, true}}), 3), std::invalid_argument);
  EXPECT_THROW(validate_gate({GateKind::H, 0, {{1, true}}, 0.0}, 3), std::invalid_argument);
  EXPECT_NO_THROW(validate_gate(Gate::pattern_phase({{0, false}, {2, true}}, 0.5), 3));
  Circuit c(2);
  EXPECT_THROW(c.append(Gate::x(2)), std::invalid_argument);
}

TEST(Circuit, InverseReversesAndNegates) {
  Circuit c(3);
  c.append(Gate::h(0)).append(Gate::mcphase(1, {{0, true}}, 0.25)).append(Gate::mcx(2, {{1, false}}));
  const Circuit inv = inverse(c);
  ASSERT_EQ(inv.size(), 3U);
  EXPECT_EQ(inv.gates()[0], c.gates()[2]);
  EXPECT_EQ(inv.gates()[1].angle, -0.25);
  EXPECT_EQ(inv.gates()[2], c.gates()[0]);
}

TEST(Circuit, LoweredPolaritiesAreEquivalent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int q = 2 + trial % 4;
    const Circuit c = oracle::random_circuit(q, 6, rng);
    const Circuit low = lower_polarities(c);
    for (const Gate& g : low.gates()) {
      for (const Control& ctl : g.controls) EXPECT_TRUE(ctl.polarity);
    }
    std::vector<oracle::Complex> a = oracle::random_state(q, rng);
    std::vector<oracle::Complex> b = a;
    for (const Gate& g : c.gates()) a = oracle::apply(oracle::gate_matrix(g, q), a);
    for (const Gate& g : low.gates()) b = oracle::apply(oracle::gate_matrix(g, q), b);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-12);
  }
}

TEST(Circuit, CensusKeysByKindAndArity) {
  Circuit c(4);
  c.append(Gate::h(0)).append(Gate::h(1)).append(Gate::mcx(3, {{0, true}, {1, false}}));
  c.append(Gate::pattern_phase({{0, true}, {1, true}}, 0.1));
  const Census census = gate_census(c);
  EXPECT_EQ(census.at({GateKind::H, 0}), 2U);
  EXPECT_EQ(census.at({GateKind::MCX, 2}), 1U);
  EXPECT_EQ(census.at({GateKind::MCPhase, 2}), 1U);
  const Census doubled = census + census;
  EXPECT_EQ(doubled.at({GateKind::H, 0}), 4U);
}

TEST(Circuit, DumpFormat) {
  EXPECT_EQ(dump(Gate::mcx(2, {{0, true}, {1, false}})), "MCX 2 [+0 -1] 0");
  EXPECT_EQ(dump(Gate::pattern_phase({{3, false}}, 0.5)), "MCPHASE * [-3] 0.5");
}

TEST(Layout, QubitAssignment) {
  for (int n = 3; n <= 14; ++n) {
    const RegisterLayout l = make_layout(n);
    int b = 0;
    while ((1 << b) < n - 1) ++b;
    EXPECT_EQ(l.bits_per_label, b);
    EXPECT_EQ(l.time_steps, n - 1);
    EXPECT_EQ(l.total_qubits(), (n - 1) * b + n);
    EXPECT_EQ(l.flag_qubit(), l.total_qubits() - 1);
    for (int label = 0; label < n - 1; ++label) {
      const auto ctl = l.label_controls(n - 2, label);
      ASSERT_EQ(static_cast<int>(ctl.size()), b);
      for (int k = 0; k < b; ++k) {
        EXPECT_EQ(ctl[static_cast<std::size_t>(k)].qubit, (n - 2) * b + k);
        EXPECT_EQ(ctl[static_cast<std::size_t>(k)].polarity, ((label >> k) & 1) != 0);
      }
    }
  }
  EXPECT_THROW(make_layout(2), std::invalid_argument);
  EXPECT_EQ(make_layout(5).total_qubits(), 13);
}

}  // namespace
}  // namespace qtsp
