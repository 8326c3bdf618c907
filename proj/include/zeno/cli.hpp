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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeno/matrix.hpp"
#include "zeno/quantum.hpp"
#include "zeno/report.hpp"
#include "zeno/scenarios.hpp"
#include "zeno/zeno.hpp"

namespace zeno::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kNumerical = 3, kViolated = 4 };

struct OutputSpec {
  std::optional<std::string> path;  // stdout when absent
  std::string format = "csv";
};

struct ExperimentConfig {
  ScenarioSpec scenario;
  std::vector<double> t_values;  // ascending, distinct
  std::vector<long long> n_grid;
  std::optional<NormKind> norm_kind;
  BoundKind bound = BoundKind::none;
  std::uint64_t seed = 1;
  OutputSpec output;
  std::optional<std::pair<long long, long long>> window;
  std::optional<double> delta_tilde;
};

// Throws InvalidInput naming the offending key.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

std::vector<long long> geometric_grid(long long start, long long stop, double factor);

struct ReportRow {
  long long n = 0;
  double t = 0.0;
  double error = 0.0;
  std::optional<double> bound;
  std::optional<double> slack;
  std::vector<std::string> flags;
};

struct FitRecord {
  double t = 0.0;
  std::optional<RateFit> fit;
  std::string note;  // why the fit is missing
};

struct RunResult {
  std::string label;
  std::string norm;
  std::vector<ReportRow> rows;  // ordered by n, then t
  std::vector<FitRecord> fits;  // one per t
};

RunResult run_experiment(const ExperimentConfig& cfg);

// Shortest round-trip decimal form.
std::string format_double(double v);
std::string format_csv(const RunResult& r);
std::string format_json(const ExperimentConfig& cfg, const RunResult& r);
std::string fit_json(const RateFit& f);

int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err);
int cmd_rates(const std::string& config_path, std::ostream& out, std::ostream& err);

inline const std::vector<std::string> kVerifySuites = {"chernoff", "trotter", "lemmas",
                                                       "spectral", "counting"};
// Summary line per check on out; with csv_path every checked inequality is
// also written as a row suite,check,trial_seed,lhs,rhs,slack,witness.
int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, std::ostream& out,
               std::ostream& err, const std::optional<std::string>& csv_path = std::nullopt);

// "a+bi", "a-bi", "a", "bi", "-i" and friends.
cplx parse_complex(const std::string& text);
// JSON {rows, cols, re, im} with row-major flat arrays.
ComplexMatrix parse_matrix_json(const std::string& json_text);
ComplexMatrix load_matrix_file(const std::string& path);
std::string matrix_json(const ComplexMatrix& m);

int cmd_spectral(const std::string& matrix_path, const std::string& center, double radius,
                 std::ostream& out, std::ostream& err);
int cmd_counting(long long n, std::ostream& out, std::ostream& err);

// Maps the exception hierarchy onto exit codes.
int exit_code_for_current_exception(std::ostream& err, const std::string& op);

}  // namespace zeno::cli
