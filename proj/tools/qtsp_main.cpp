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

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qtsp/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Time-register quantum encoding of the travelling salesperson problem"};
  app.require_subcommand(1);

  qtsp::RunConfig config;
  std::string mode = "exact";
  std::string format = "table";
  std::string n_range;
  int n = 0;

  const auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", config.instance,
                    "instance file (JSON or CSV), builtin:figure1, or random:<n>")
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "seed for random:<n> instances")->capture_default_str();
  };
  const auto add_lambda = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", config.lambda, "phase scale: loose, tight or a positive value")
        ->capture_default_str();
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
  };
  const auto add_ceiling = [&](CLI::App* cmd) {
    cmd->add_option("--ceiling", config.ceiling, "largest simulated qubit count")
        ->check(CLI::Range(1, qtsp::kDefaultQubitCeiling))
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "brute-force optimal tour");
  add_instance(solve);
  add_format(solve);

  auto* tours = app.add_subcommand("tours", "classified tour table");
  add_instance(tours);
  add_lambda(tours);
  add_format(tours);
  tours->add_flag("--include-invalid", config.include_invalid, "list every invalid route pattern too");

  auto* simulate = app.add_subcommand("simulate", "statevector check of the encoding pipeline");
  add_instance(simulate);
  add_lambda(simulate);
  add_format(simulate);
  add_ceiling(simulate);

  auto* amplify = app.add_subcommand("amplify", "amplify the valid-tour subspace");
  add_instance(amplify);
  add_format(amplify);
  add_ceiling(amplify);
  amplify->add_option("--mode", mode, "standard or exact")
      ->check(CLI::IsMember({"standard", "exact"}))
      ->capture_default_str();

  auto* resources = app.add_subcommand("resources", "gate censuses, cost-model estimates, scaling fits");
  add_instance(resources);
  add_lambda(resources);
  add_format(resources);
  resources->add_option("--n", n, "city count (overrides --instance)")->check(CLI::Range(3, 64));
  resources->add_option("--n-range", n_range, "fit scaling exponents over n = a..b");
  resources->add_option("--cx-a", config.model.mcx_cx.slope, "CX per control")->capture_default_str();
  resources->add_option("--cx-c", config.model.mcx_cx.offset, "CX per gate")->capture_default_str();
  resources->add_option("--t-a", config.model.mcx_t.slope, "T per control")->capture_default_str();
  resources->add_option("--t-c", config.model.mcx_t.offset, "T per gate")->capture_default_str();
  resources->add_option("--epsilon", config.model.epsilon, "phase synthesis precision")
      ->capture_default_str();
  resources->add_flag("--parallel-slots", config.model.parallel_slots,
                      "spread transition gates over disjoint slot pairs in the depth estimate");

  auto* figure = app.add_subcommand("reproduce-figure", "compare against the 5-city reference table");
  add_instance(figure);
  add_lambda(figure);
  add_format(figure);
  figure->add_option("--tolerance", config.tolerance, "allowed |phi - table| per row")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    config.command = app.get_subcommands().front()->get_name();
    config.format = qtsp::parse_output_format(format);
    config.mode = qtsp::parse_amplify_mode(mode);
    if (n > 0) config.n = n;
    if (!n_range.empty()) config.n_range = qtsp::parse_n_range(n_range);
    const qtsp::CommandOutput out = qtsp::run_command(config);
    std::cout << out.text;
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
