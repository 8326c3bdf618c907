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

#include "zeno/report.hpp"

#include <cmath>
#include <limits>

#include "zeno/error.hpp"

namespace zeno {

InequalityReport make_report(double lhs, double rhs, std::string witness) {
  return {lhs, rhs, rhs - lhs, std::move(witness)};
}

RateFit rate_fit(const ErrorSeries& series, std::pair<long long, long long> window) {
  if (window.first > window.second) throw InvalidInput("rate_fit: empty window");
  std::vector<double> xs;
  std::vector<double> ys;
  long long used_min = 0;
  long long used_max = 0;
  for (const auto& e : series.entries) {
    if (e.n < window.first || e.n > window.second) continue;
    if (!(e.error > kFitErrorFloor) || !std::isfinite(e.error)) continue;
    if (xs.empty()) used_min = e.n;
    used_max = e.n;
    xs.push_back(std::log(static_cast<double>(e.n)));
    ys.push_back(std::log(e.error));
  }
  if (xs.size() < 4) {
    const bool whole = window.first == std::numeric_limits<long long>::min() &&
                       window.second == std::numeric_limits<long long>::max();
    const std::string where = whole ? "the series"
                                    : "window [" + std::to_string(window.first) + ", " +
                                          std::to_string(window.second) + "]";
    throw TooFewPoints("rate_fit: " + std::to_string(xs.size()) + " usable points in " + where +
                       " (need 4 with error above 1e-12)");
  }
  const double m = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw TooFewPoints("rate_fit: all points share one n");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.window = {used_min, used_max};
  fit.points = static_cast<int>(xs.size());
  return fit;
}

RateFit rate_fit(const ErrorSeries& series) {
  return rate_fit(series, {std::numeric_limits<long long>::min(),
                           std::numeric_limits<long long>::max()});
}

}  // namespace zeno
