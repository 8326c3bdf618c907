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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zeno {

// One checked inequality lhs <= rhs.
struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  std::string witness;
};

InequalityReport make_report(double lhs, double rhs, std::string witness);

struct ErrorEntry {
  long long n = 0;
  double error = 0.0;
  std::optional<double> bound;
  std::vector<std::string> flags;
};

struct ErrorSeries {
  std::vector<ErrorEntry> entries;  // n strictly increasing
  double t = 0.0;
  std::string instance_label;
};

inline constexpr double kFitErrorFloor = 1e-12;

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::pair<long long, long long> window{0, 0};  // smallest and largest n used
  int points = 0;
};

// Least squares on (log n, log error) over entries with n in the window
// and error above the floor. Throws TooFewPoints below four points.
RateFit rate_fit(const ErrorSeries& series, std::pair<long long, long long> window);
RateFit rate_fit(const ErrorSeries& series);

}  // namespace zeno
