// Copyright 2026 The zeno-lab Authors
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

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "zeno/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Zeno product formula laboratory"};
  app.require_subcommand(1);

  std::string config;
  auto* run = app.add_subcommand("run", "Run an experiment config and write the report");
  run->add_option("config", config, "Experiment config (JSON)")->required();

  auto* rates = app.add_subcommand("rates", "Fit convergence rates for an experiment config");
  rates->add_option("config", config, "Experiment config (JSON)")->required();

  std::string suite;
  std::uint64_t seed = 1;
  int trials = 20;
  auto* verify = app.add_subcommand("verify", "Run an inequality and oracle suite");
  verify->add_option("suite", suite, "chernoff, trotter, lemmas, spectral or counting")->required();
  verify->add_option("--seed", seed, "Suite seed");
  verify->add_option("--trials", trials, "Random trials per check");
  std::string verify_csv;
  verify->add_option("--csv", verify_csv, "Also write every checked inequality to this CSV file");

  std::string matrix;
  std::string center = "0";
  double radius = 1.0;
  auto* spectral = app.add_subcommand("spectral", "Spectral projection inside a circle");
  spectral->add_option("matrix", matrix, "Matrix file (JSON rows, cols, re, im)")->required();
  spectral->add_option("--center", center, "Circle center, e.g. 1+0.5i");
  spectral->add_option("--radius", radius, "Circle radius");

  long long n = 0;
  auto* counting = app.add_subcommand("counting", "Table of transition counts N(j, n, k)");
  counting->add_option("--n", n, "String length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : zeno::cli::kValidation;
  }

  using namespace zeno::cli;
  if (*run) return cmd_run(config, std::cout, std::cerr);
  if (*rates) return cmd_rates(config, std::cout, std::cerr);
  if (*verify) {
    std::optional<std::string> csv;
    if (!verify_csv.empty()) csv = verify_csv;
    return cmd_verify(suite, seed, trials, std::cout, std::cerr, csv);
  }
  if (*spectral) return cmd_spectral(matrix, center, radius, std::cout, std::cerr);
  if (*counting) return cmd_counting(n, std::cout, std::cerr);
  return kValidation;
}
