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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "qtsp/amplify.hpp"
#include "qtsp/commands.hpp"
#include "qtsp/encoding.hpp"
#include "qtsp/resources.hpp"
#include "qtsp/sim.hpp"

using namespace qtsp;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Outcome figure_reproduction() {
  const TspInstance inst = figure_instance();
  const FigureComparison cmp = compare_figure(inst, lambda_bound(inst, LambdaMode::Tight), 0.005);
  std::string missed;
  for (const FigureRowResult& r : cmp.rows) {
    if (!r.matched) missed += " " + r.tour + fmt("=%.4f(table %.2f)", r.phi, r.row.expected_phi);
  }
  return {cmp.passed(), fmt("%zu/25 rows within 0.005, max deviation %.4f, optimum %s cost %.17g%s",
                            cmp.matched, cmp.max_deviation, cmp.optimum_tour.c_str(), cmp.optimum.cost,
                            missed.empty() ? "" : ("; off:" + missed).c_str())};
}

Outcome validity_correctness() {
  std::size_t mismatches = 0;
  std::string counts;
  for (int n = 3; n <= 6; ++n) {
    const RegisterLayout l = make_layout(n);
    StateVector s = run(init_state(l.total_qubits()), uniform_prep(l));
    run_inplace(s, validity_oracle(l));
    const auto entries = route_marginals(s, l);
    for (const RouteEntry& e : entries) {
      const bool want = oracle::valid_by_counting(oracle::split_route(e.route, l.time_steps, l.bits_per_label), n);
      if (e.branches != 1 || e.flag(l) != want) ++mismatches;
    }
    counts += fmt(" n=%d:%zu", n, entries.size());
  }
  // Sampled patterns at n = 6 through the reversible circuit, all valid tours included.
  const RegisterLayout l = make_layout(6);
  const Circuit c = validity_oracle(l);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<BasisIndex> draw(0, (BasisIndex{1} << l.route_qubit_count()) - 1);
  std::vector<BasisIndex> samples;
  oracle::enumerate_permutations(5, [&](const std::vector<Label>& p) { samples.push_back(encode_labels(l, p)); });
  const std::size_t valid_included = samples.size();
  while (samples.size() < 100000) samples.push_back(draw(rng));
  for (const BasisIndex r : samples) {
    const BasisIndex out = execute_classical(c, r);
    const bool want = oracle::valid_by_counting(oracle::split_route(r, l.time_steps, l.bits_per_label), 6);
    if ((((out >> l.flag_qubit()) & 1U) != 0) != want) ++mismatches;
  }
  return {mismatches == 0, fmt("exhaustive%s; n=6 sampled %zu incl. %zu valid; %zu mismatches", counts.c_str(),
                               samples.size(), valid_included, mismatches)};
}

Outcome cost_phase_correctness() {
  double worst = 0.0;
  bool ok = true;
  for (int n = 3; n <= 5; ++n) {
    for (const TspInstance& inst : {random_instance(n, 31 + n), n == 5 ? figure_instance() : random_instance(n, 7)}) {
      for (const LambdaMode mode : {LambdaMode::Loose, LambdaMode::Tight}) {
        const SimulationCheck check = simulate_and_check(inst, config_for(inst, mode));
        worst = std::max(worst, check.max_phase_error);
        ok = ok && check.max_phase_error < 1e-9 && check.entangled_patterns == 0;
      }
    }
  }
  return {ok, fmt("max phase error %.3e over n=3..5, loose and tight", worst)};
}

Outcome count_formulas() {
  bool ok = true;
  for (int n = 3; n <= 14; ++n) {
    const RegisterLayout l = make_layout(n);
    const int b = l.bits_per_label;
    Census want_v;
    want_v[{GateKind::MCX, b}] += static_cast<std::size_t>((n - 1) * (n - 1));
    want_v[{GateKind::MCX, n - 1}] += 1;
    Census want_c;
    want_c[{GateKind::MCPhase, b}] += static_cast<std::size_t>(2 * (n - 1));
    want_c[{GateKind::MCPhase, 2 * b}] += static_cast<std::size_t>((n - 2) * (n - 1) * (n - 1));
    const auto zero = TspInstance::create(std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)), n - 1);
    ok = ok && gate_census(validity_oracle(l)) == want_v && predicted_validity_counts(n) == want_v;
    ok = ok && gate_census(cost_oracle(zero, l, {1.0, true})) == want_c && predicted_cost_counts(n) == want_c;
  }
  Census v5 = gate_census(validity_oracle(make_layout(5)));
  Census c5 = gate_census(cost_oracle(figure_instance(), make_layout(5), {3.42, true}));
  const bool five = v5.at({GateKind::MCX, 2}) == 16 && v5.at({GateKind::MCX, 4}) == 1 &&
                    c5.at({GateKind::MCPhase, 2}) == 8 && c5.at({GateKind::MCPhase, 4}) == 48;
  return {ok && five, fmt("n=3..14 %s; n=5 validity %zu+%zu, cost %zu+%zu", ok ? "exact" : "MISMATCH",
                          v5[{GateKind::MCX, 2}], v5[{GateKind::MCX, 4}], c5[{GateKind::MCPhase, 2}],
                          c5[{GateKind::MCPhase, 4}])};
}

Outcome scaling() {
  std::vector<int> ns;
  for (int n = 6; n <= 14; ++n) ns.push_back(n);
  const double kc = scaling_fit(ns, OracleBlock::Cost).exponent;
  const double kv = scaling_fit(ns, OracleBlock::Validity).exponent;
  return {std::abs(kc - 3.0) <= 0.3 && std::abs(kv - 2.0) <= 0.2,
          fmt("cost exponent %.4f, validity exponent %.4f (log count vs log(n-1), n=6..14)", kc, kv)};
}

Outcome success_probability_check() {
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 6; ++n) {
    const double counted = static_cast<double>(oracle::count_valid_patterns(n)) /
                           std::ldexp(1.0, make_layout(n).route_qubit_count());
    ok = ok && success_probability(n) == counted;
    detail += fmt("p(%d)=%.10g ", n, counted);
  }
  double worst = 0.0;
  for (int n = 3; n <= 12; ++n) {
    const double ratio = factorial(n - 1) / std::pow(n - 1, n - 1);
    worst = std::max(worst, std::abs(stirling_estimate(n) / ratio - 1.0));
  }
  ok = ok && worst < 0.1;
  return {ok, detail + fmt("; Stirling worst relative error %.4f", worst)};
}

Outcome grover_analytics() {
  double worst = 0.0;
  for (int n = 3; n <= 5; ++n) {
    const RegisterLayout l = make_layout(n);
    const double p = success_probability(n);
    const double theta = std::asin(std::sqrt(p));
    StateVector s = run(init_state(l.total_qubits()), uniform_prep(l));
    const Circuit step = grover_iteration(l, std::numbers::pi);
    for (int j = 0; j <= 6; ++j) {
      if (j > 0) run_inplace(s, step);
      double valid = 0.0;
      for (BasisIndex r = 0; r < (BasisIndex{1} << l.route_qubit_count()); ++r) {
        if (oracle::valid_by_counting(oracle::split_route(r, l.time_steps, l.bits_per_label), n)) valid += std::norm(s[r]);
      }
      worst = std::max(worst, std::abs(valid - std::pow(std::sin((2 * j + 1) * theta), 2)));
    }
  }
  return {worst < 1e-9, fmt("max |P_valid - sin^2((2j+1)theta)| = %.3e, n=3..5, j=0..6", worst)};
}

Outcome exact_amplification() {
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 5; ++n) {
    const RegisterLayout l = make_layout(n);
    const AmplifyResult r = amplify_valid(random_instance(n, 3), AmplifyMode::Exact);
    double valid = 0.0;
    double dirty = 0.0;
    std::vector<double> probs;
    for (BasisIndex i = 0; i < r.state.dimension(); ++i) {
      const double pr = std::norm(r.state[i]);
      if ((i >> l.route_qubit_count()) != 0) {
        dirty += pr;
      } else if (oracle::valid_by_counting(oracle::split_route(i, l.time_steps, l.bits_per_label), n)) {
        valid += pr;
        probs.push_back(pr);
      }
    }
    double spread = 0.0;
    for (const double pr : probs) spread = std::max(spread, std::abs(pr - valid / factorial(n - 1)));
    ok = ok && valid >= 1.0 - 1e-9 && spread < 1e-9 && dirty < 1e-12;
    detail += fmt("n=%d J=%d P=%.12f ", n, r.schedule.iterations, valid);
  }
  int last = 0;
  bool growth = true;
  for (int n = 3; n <= 10; ++n) {
    const double p = success_probability(n);
    const int j = make_schedule(p, AmplifyMode::Exact).iterations;
    const double scaled = j * std::sqrt(p);
    growth = growth && j >= last && scaled > 0.5 && scaled < 1.3;
    last = j;
  }
  detail += growth ? "; J*sqrt(p) bounded for n=3..10" : "; J*sqrt(p) out of band";
  return {ok && growth, detail};
}

Outcome simulator_equivalence() {
  std::mt19937_64 rng(9);
  double gate_err = 0.0;
  double trip_err = 0.0;
  for (int q = 1; q <= 6; ++q) {
    for (int trial = 0; trial < 50; ++trial) {
      const Gate g = oracle::random_gate(q, rng);
      const auto v = oracle::random_state(q, rng);
      const auto want = oracle::apply(oracle::gate_matrix(g, q), v);
      const StateVector got = apply_gate(StateVector(q, v), g);
      for (std::size_t i = 0; i < want.size(); ++i) gate_err = std::max(gate_err, std::abs(got[i] - want[i]));
    }
    const Circuit c = oracle::random_circuit(q, 40, rng);
    const auto v = oracle::random_state(q, rng);
    const StateVector back = run(run(StateVector(q, v), c), inverse(c));
    for (std::size_t i = 0; i < v.size(); ++i) trip_err = std::max(trip_err, std::abs(back[i] - v[i]));
  }
  return {gate_err < 1e-12 && trip_err < 1e-9,
          fmt("max gate error %.3e, round-trip error %.3e", gate_err, trip_err)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "figure reproduction", 5.0, figure_reproduction},
      {2, "validity oracle correctness", 120.0, validity_correctness},
      {3, "cost oracle phase correctness", 0.0, cost_phase_correctness},
      {4, "count formulas", 0.0, count_formulas},
      {5, "scaling exponents", 0.0, scaling},
      {6, "success probability", 0.0, success_probability_check},
      {7, "Grover analytics", 0.0, grover_analytics},
      {8, "exact amplification", 0.0, exact_amplification},
      {9, "simulator oracle equivalence", 0.0, simulator_equivalence},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail += fmt("; over the %.0f s budget", c.budget_s);
    }
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
