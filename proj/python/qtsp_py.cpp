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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtsp/amplify.hpp"
#include "qtsp/commands.hpp"
#include "qtsp/encoding.hpp"
#include "qtsp/instance.hpp"
#include "qtsp/resources.hpp"
#include "qtsp/sim.hpp"

namespace py = pybind11;
using namespace qtsp;

namespace {

py::dict census_dict(const Census& census) {
  py::dict out;
  for (const auto& [key, count] : census) out[py::make_tuple(to_string(key.kind), key.arity)] = count;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qtsp, m) {
  m.doc() = "Brute-force quantum TSP encoding: oracles, simulation and resource counts";

  py::enum_<LambdaMode>(m, "LambdaMode").value("Loose", LambdaMode::Loose).value("Tight", LambdaMode::Tight);
  py::enum_<AmplifyMode>(m, "AmplifyMode")
      .value("Standard", AmplifyMode::Standard)
      .value("Exact", AmplifyMode::Exact);

  py::class_<TspInstance>(m, "TspInstance")
      .def_static("create", &TspInstance::create, py::arg("cost"), py::arg("start"))
      .def_static("parse", [](const std::string& text) { return parse_instance(text); })
      .def_static("load", &load_instance)
      .def_static("figure", &figure_instance)
      .def_static("random", &random_instance, py::arg("n"), py::arg("seed"))
      .def_property_readonly("n", &TspInstance::n)
      .def_property_readonly("original_start", &TspInstance::original_start)
      .def("cost", &TspInstance::cost)
      .def("matrix", &TspInstance::matrix)
      .def("original_label", &TspInstance::original_label)
      .def("__repr__", [](const TspInstance& t) {
        return "<TspInstance n=" + std::to_string(t.n()) + " start=" + std::to_string(t.original_start()) + ">";
      });

  m.def("tour_cost", [](const TspInstance& t, const std::vector<Label>& order) { return tour_cost(t, order); });
  m.def("format_tour", [](const TspInstance& t, const std::vector<Label>& order) { return format_tour(t, order); });
  m.def(
      "brute_force_optimum",
      [](const TspInstance& t) {
        const TourOptimum best = brute_force_optimum(t);
        return py::make_tuple(best.tour.order, best.cost);
      },
      "(order, cost) of the cheapest tour, ties broken lexicographically");
  m.def("lambda_bound", [](const TspInstance& t, LambdaMode mode) { return lambda_bound(t, mode); });

  py::class_<RegisterLayout>(m, "RegisterLayout")
      .def(py::init(&make_layout), py::arg("n"))
      .def_readonly("n", &RegisterLayout::n)
      .def_readonly("time_steps", &RegisterLayout::time_steps)
      .def_readonly("bits_per_label", &RegisterLayout::bits_per_label)
      .def_property_readonly("total_qubits", &RegisterLayout::total_qubits)
      .def_property_readonly("route_qubits", &RegisterLayout::route_qubit_count)
      .def_property_readonly("flag_qubit", &RegisterLayout::flag_qubit);

  m.def("validity_census", [](int n) { return census_dict(gate_census(validity_oracle(make_layout(n)))); });
  m.def(
      "cost_census",
      [](const TspInstance& t, double lambda, bool include_zero_angle_gates) {
        return census_dict(gate_census(cost_oracle(t, make_layout(t.n()), {lambda, include_zero_angle_gates})));
      },
      py::arg("instance"), py::arg("lambda_"), py::arg("include_zero_angle_gates") = true);
  m.def("predicted_validity_counts", [](int n) { return census_dict(predicted_validity_counts(n)); });
  m.def("predicted_cost_counts", [](int n) { return census_dict(predicted_cost_counts(n)); });

  m.def(
      "classify",
      [](const TspInstance& t, const std::vector<Label>& labels, double lambda) {
        const TourRecord r = classify(t, labels, {lambda, false});
        return py::make_tuple(r.valid, r.cost, r.phase);
      },
      "(valid, cost, phase) that the oracles apply to a route pattern");

  m.def(
      "encoded_state",
      [](const TspInstance& t, double lambda) {
        const RegisterLayout l = make_layout(t.n());
        const StateVector s = run(init_state(l.total_qubits()), encoding_pipeline(t, l, {lambda, false}));
        return std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
      },
      "Amplitudes after preparation, validity oracle and cost oracle; qubit k is bit k");

  py::class_<SimulationCheck>(m, "SimulationCheck")
      .def_readonly("patterns", &SimulationCheck::patterns)
      .def_readonly("max_phase_error", &SimulationCheck::max_phase_error)
      .def_readonly("validity_mismatches", &SimulationCheck::validity_mismatches)
      .def_readonly("parity_mismatches", &SimulationCheck::parity_mismatches)
      .def_property_readonly("passed", &SimulationCheck::passed);
  m.def(
      "simulate_and_check",
      [](const TspInstance& t, LambdaMode mode) { return simulate_and_check(t, config_for(t, mode)); },
      py::arg("instance"), py::arg("mode") = LambdaMode::Tight);

  m.def("success_probability", &success_probability);
  m.def("stirling_estimate", &stirling_estimate);

  py::class_<AmplificationSchedule>(m, "AmplificationSchedule")
      .def_readonly("p", &AmplificationSchedule::p)
      .def_readonly("theta", &AmplificationSchedule::theta)
      .def_readonly("iterations", &AmplificationSchedule::iterations)
      .def_readonly("phase_angle", &AmplificationSchedule::phase_angle)
      .def_readonly("predicted_success", &AmplificationSchedule::predicted_success);
  m.def("make_schedule", &make_schedule, py::arg("p"), py::arg("mode"));
  m.def(
      "amplify",
      [](const TspInstance& t, AmplifyMode mode) {
        const AmplifyResult r = amplify_valid(t, mode);
        py::dict out;
        out["schedule"] = r.schedule;
        out["achieved"] = r.achieved;
        out["uniformity_deviation"] = r.uniformity_deviation;
        out["ancilla_excitation"] = r.ancilla_excitation;
        return out;
      },
      py::arg("instance"), py::arg("mode") = AmplifyMode::Exact);

  m.def(
      "scaling_exponent",
      [](const std::vector<int>& ns, const std::string& block) {
        return scaling_fit(ns, parse_oracle_block(block)).exponent;
      },
      py::arg("ns"), py::arg("block"));

  m.def(
      "run_command",
      [](const std::string& command, const std::string& instance, const std::string& lambda) {
        RunConfig c;
        c.command = command;
        c.instance = instance;
        c.lambda = lambda;
        c.format = OutputFormat::Json;
        if (command == "resources") c.n_range = std::pair{6, 14};
        const CommandOutput out = run_command(c);
        return py::make_tuple(out.exit_code, out.text);
      },
      py::arg("command"), py::arg("instance") = kFigureInstanceName, py::arg("lambda_") = "tight",
      "Runs a CLI command with JSON output; returns (exit_code, text)");
}
