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

#include <cmath>
#include <fstream>
#include <set>

#include "oracles.hpp"
#include "qtsp/commands.hpp"

namespace qtsp {
namespace {

RunConfig config_for_command(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

TEST(Figure, TableCoversEveryTourOnce) {
  std::set<std::vector<Label>> seen;
  std::size_t invalid = 0;
  for (const FigureRow& row : figure_table()) {
    if (row.expected_valid) {
      EXPECT_TRUE(oracle::valid_by_counting(row.labels, 5));
      seen.insert(row.labels);
    } else {
      EXPECT_FALSE(oracle::valid_by_counting(row.labels, 5));
      ++invalid;
    }
  }
  EXPECT_EQ(seen.size(), 24U);
  EXPECT_EQ(invalid, 1U);
}

TEST(Figure, TightLambdaRowsAgreeToWeightRounding) {
  const TspInstance inst = figure_instance();
  const auto m = inst.matrix();
  const FigureComparison cmp = compare_figure(inst, lambda_bound(inst, LambdaMode::Tight));
  EXPECT_NEAR(cmp.lambda, 3.42, 1e-12);
  ASSERT_EQ(cmp.rows.size(), 25U);
  std::vector<std::string> missed;
  for (const FigureRowResult& r : cmp.rows) {
    double expect = 0.0;
    if (r.row.expected_valid) {
      expect = oracle::raw_tour_cost(m, 4, r.row.labels) / 3.42;
    } else {
      expect = (m[4][3] + 2 * m[3][3] + m[3][2] + m[2][4]) / 3.42;
    }
    EXPECT_NEAR(r.phi, expect, 1e-12) << r.tour;
    // Five rounded weights can move phi by up to 5 * 0.005 / 3.42.
    EXPECT_NEAR(r.phi, r.row.expected_phi, 0.0075) << r.tour;
    if (!r.matched) missed.push_back(r.tour);
  }
  EXPECT_EQ(cmp.matched, 22U);
  EXPECT_EQ(missed, (std::vector<std::string>{"[4, 2, 1, 3, 0, 4]", "[4, 2, 3, 0, 1, 4]",
                                              "[4, 3, 3, 3, 2, 4]"}));
  EXPECT_TRUE(cmp.optimum_matches());
  EXPECT_TRUE(cmp.simulation.passed());
  EXPECT_FALSE(cmp.passed());
}

TEST(Figure, NoSingleLambdaMatchesEveryRow) {
  const TspInstance inst = figure_instance();
  for (double lambda = 3.30; lambda <= 3.55; lambda += 0.0005) {
    EXPECT_LT(compare_figure(inst, lambda).matched, 25U) << lambda;
  }
}

TEST(Figure, PerturbedInstanceFails) {
  auto m = figure_instance().matrix();
  m[4][2] = 0.60;
  const FigureComparison cmp = compare_figure(TspInstance::create(m, 4), 3.42, 0.01);
  EXPECT_FALSE(cmp.optimum_matches());
  EXPECT_FALSE(cmp.passed());
  EXPECT_TRUE(compare_figure(figure_instance(), 3.42, 0.01).passed());
}

TEST(Figure, LooseLambdaRescalesPhi) {
  RunConfig c = config_for_command("reproduce-figure");
  c.lambda = "loose";
  c.format = OutputFormat::Json;
  const auto out = nlohmann::json::parse(run_command(c).text);
  EXPECT_NEAR(out["lambda"].get<double>(), 4.85, 1e-12);
  EXPECT_NEAR(out["phi_scale"].get<double>(), 3.42 / 4.85, 1e-12);
  for (const auto& row : out["rows"]) {
    if (row["valid"] == 1) {
      EXPECT_NEAR(row["phi"].get<double>() * 4.85 / 3.42, row["expected_phi"].get<double>(), 0.0075);
    }
  }
}

TEST(Commands, SimulateChecksRandomSixCityInstance) {
  const TspInstance inst = random_instance(6, 7);
  for (const LambdaMode mode : {LambdaMode::Loose, LambdaMode::Tight}) {
    const SimulationCheck check = simulate_and_check(inst, config_for(inst, mode));
    EXPECT_EQ(check.patterns, 32768U);
    EXPECT_TRUE(check.passed());
  }
  EXPECT_THROW(simulate_and_check(inst, config_for(inst, LambdaMode::Tight), 20), std::invalid_argument);
}

TEST(Commands, OutputIsDeterministic) {
  for (const std::string cmd : {"solve", "tours", "amplify", "resources", "reproduce-figure"}) {
    RunConfig c = config_for_command(cmd);
    c.format = OutputFormat::Json;
    EXPECT_EQ(run_command(c).text, run_command(c).text) << cmd;
  }
  RunConfig c = config_for_command("tours");
  c.instance = "random:6";
  c.seed = 99;
  c.format = OutputFormat::Csv;
  EXPECT_EQ(run_command(c).text, run_command(c).text);
}

TEST(Commands, ToursCsv) {
  RunConfig c = config_for_command("tours");
  c.format = OutputFormat::Csv;
  const std::string text = run_command(c).text;
  EXPECT_EQ(text.rfind("tour,cost,phi,valid\n\"[4, 2, 3, 1, 0, 4]\",1.12,", 0), 0U) << text;
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 25);
  c.include_invalid = true;
  const std::string all = run_command(c).text;
  EXPECT_EQ(std::count(all.begin(), all.end(), '\n'), 257);
}

TEST(Commands, TourTableJsonRoundTrip) {
  const TspInstance inst = figure_instance();
  const TourTable t = build_tour_table(inst, config_for(inst, LambdaMode::Tight));
  EXPECT_EQ(t.rows.size(), 24U);
  EXPECT_EQ(t.invalid_omitted, 232U);
  const nlohmann::json j = t;
  EXPECT_EQ(j.get<TourTable>(), t);
}

TEST(Commands, ReportJsonRoundTrips) {
  CostModel model;
  model.mcx_cx = {3, 7};
  model.epsilon = 1e-5;
  model.parallel_slots = true;
  const ResourceReport r = estimate(predicted_validity_counts(7) + predicted_cost_counts(7), model, 7);
  const nlohmann::json j = r;
  EXPECT_EQ(nlohmann::json::parse(j.dump()).get<ResourceReport>(), r);

  const AmplifyResult a = amplify_valid(figure_instance(), AmplifyMode::Exact);
  const ScheduleReport s{a.schedule, a.achieved, a.uniformity_deviation, a.ancilla_excitation};
  const nlohmann::json js = s;
  EXPECT_EQ(nlohmann::json::parse(js.dump()).get<ScheduleReport>(), s);
}

TEST(Commands, ResourcesJson) {
  RunConfig c = config_for_command("resources");
  c.n = 5;
  c.n_range = std::pair{6, 14};
  c.format = OutputFormat::Json;
  const CommandOutput out = run_command(c);
  EXPECT_EQ(out.exit_code, 0);
  const auto j = nlohmann::json::parse(out.text);
  EXPECT_TRUE(j["blocks"]["validity"]["match"].get<bool>());
  EXPECT_TRUE(j["blocks"]["cost"]["match"].get<bool>());
  EXPECT_EQ(j["cx_estimate"].get<long long>(), 1464);
  EXPECT_EQ(j["t_estimate"].get<long long>(), 1536);
  EXPECT_EQ(j["scaling"]["abscissa"], "n-1");
}

TEST(Commands, InstanceFromFile) {
  const std::string path = std::string(QTSP_TEST_TMPDIR) + "/figure.json";
  {
    std::ofstream f(path);
    f << R"({"n": 5, "start": 4, "cost": [[0, 0.95, 0.73, 0.60, 0.16], [0.16, 0, 0.87, 0.60, 0.71],
            [0.02, 0.97, 0, 0.21, 0.18], [0.18, 0.30, 0.53, 0, 0.29], [0.61, 0.14, 0.29, 0.37, 0]]})";
  }
  RunConfig c = config_for_command("solve");
  c.instance = path;
  c.format = OutputFormat::Json;
  const auto j = nlohmann::json::parse(run_command(c).text);
  EXPECT_EQ(j["tour"], "[4, 2, 3, 1, 0, 4]");
  EXPECT_NEAR(j["cost"].get<double>(), 1.12, 1e-12);
}

TEST(Commands, RejectsBadArguments) {
  const TspInstance inst = figure_instance();
  EXPECT_THROW(resolve_lambda(inst, "-1"), std::invalid_argument);
  EXPECT_THROW(resolve_lambda(inst, "3.4x"), std::invalid_argument);
  EXPECT_DOUBLE_EQ(resolve_lambda(inst, "2.5"), 2.5);
  EXPECT_THROW(parse_n_range("9..6"), std::invalid_argument);
  EXPECT_EQ(parse_n_range("6..14"), (std::pair{6, 14}));
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
  RunConfig c = config_for_command("frobnicate");
  EXPECT_THROW(run_command(c), std::invalid_argument);
  c = config_for_command("amplify");
  c.format = OutputFormat::Csv;
  EXPECT_THROW(run_command(c), std::invalid_argument);
}

}  // namespace
}  // namespace qtsp
