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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zeno/cli.hpp"
#include "zeno/error.hpp"

namespace zeno::cli {
namespace {

using nlohmann::json;

constexpr long long kMaxN = 1LL << 30;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw InvalidInput("config: unknown key '" + it.key() + "' in " + where);
    }
  }
}

double finite_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw InvalidInput("config: '" + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InvalidInput("config: '" + key + "' must be finite");
  return d;
}

long long positive_integer(const json& v, const std::string& key) {
  if (v.is_number_integer()) {
    const long long n = v.get<long long>();
    if (n < 1 || n > kMaxN) {
      throw InvalidInput("config: '" + key + "' entries must lie in [1, 2^30]");
    }
    return n;
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && d >= 1.0 && d <= static_cast<double>(kMaxN)) {
      return static_cast<long long>(d);
    }
  }
  throw InvalidInput("config: '" + key + "' entries must be integers in [1, 2^30]");
}

ScenarioSpec parse_scenario(const json& v) {
  if (!v.is_object()) throw InvalidInput("config: 'scenario' must be an object");
  reject_unknown(v, {"name", "parameters"}, "scenario");
  if (!v.contains("name") || !v["name"].is_string()) {
    throw InvalidInput("config: 'scenario.name' must be a string");
  }
  ScenarioSpec spec;
  spec.name = v["name"].get<std::string>();
  if (v.contains("parameters")) {
    const json& p = v["parameters"];
    if (!p.is_object()) throw InvalidInput("config: 'scenario.parameters' must be an object");
    for (auto it = p.begin(); it != p.end(); ++it) {
      spec.parameters[it.key()] = finite_number(it.value(), "scenario.parameters." + it.key());
    }
  }
  return spec;
}

std::vector<double> parse_t(const json& v) {
  std::vector<double> ts;
  if (v.is_array()) {
    if (v.empty()) throw InvalidInput("config: 't' list is empty");
    for (const json& e : v) ts.push_back(finite_number(e, "t"));
  } else {
    ts.push_back(finite_number(v, "t"));
  }
  for (double t : ts) {
    if (t < 0.0) throw InvalidInput("config: 't' must be >= 0");
  }
  std::sort(ts.begin(), ts.end());
  if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) {
    throw InvalidInput("config: 't' contains duplicates");
  }
  return ts;
}

std::vector<long long> parse_grid(const json& v) {
  if (v.is_array()) {
    if (v.empty()) throw InvalidInput("config: 'n_grid' is empty");
    std::vector<long long> grid;
    for (const json& e : v) {
      const long long n = positive_integer(e, "n_grid");
      if (!grid.empty() && n <= grid.back()) {
        throw InvalidInput("config: 'n_grid' must be strictly increasing");
      }
      grid.push_back(n);
    }
    return grid;
  }
  if (v.is_object()) {
    reject_unknown(v, {"start", "stop", "factor"}, "n_grid");
    for (const char* k : {"start", "stop", "factor"}) {
      if (!v.contains(k)) throw InvalidInput(std::string("config: 'n_grid.") + k + "' missing");
    }
    return geometric_grid(positive_integer(v["start"], "n_grid.start"),
                          positive_integer(v["stop"], "n_grid.stop"),
                          finite_number(v["factor"], "n_grid.factor"));
  }
  throw InvalidInput("config: 'n_grid' must be a list or {start, stop, factor}");
}

OutputSpec parse_output(const json& v) {
  if (!v.is_object()) throw InvalidInput("config: 'output' must be an object");
  reject_unknown(v, {"path", "format"}, "output");
  OutputSpec out;
  if (v.contains("path")) {
    if (!v["path"].is_string() || v["path"].get<std::string>().empty()) {
      throw InvalidInput("config: 'output.path' must be a non-empty string");
    }
    out.path = v["path"].get<std::string>();
  }
  if (v.contains("format")) {
    if (!v["format"].is_string()) throw InvalidInput("config: 'output.format' must be a string");
    out.format = v["format"].get<std::string>();
    if (out.format != "csv" && out.format != "json") {
      throw InvalidInput("config: 'output.format' must be csv or json");
    }
  }
  return out;
}

}  // namespace

std::vector<long long> geometric_grid(long long start, long long stop, double factor) {
  if (start < 1 || stop < start || stop > kMaxN) {
    throw InvalidInput("n_grid: need 1 <= start <= stop <= 2^30");
  }
  if (!(factor > 1.0) || !std::isfinite(factor)) {
    throw InvalidInput("n_grid: factor must be > 1");
  }
  std::vector<long long> grid;
  for (int k = 0;; ++k) {
    const double v = static_cast<double>(start) * std::pow(factor, k);
    if (v > static_cast<double>(stop) + 0.5) break;
    const long long n = std::llround(v);
    if (grid.empty() || n > grid.back()) grid.push_back(n);
  }
  return grid;
}

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("config: top level must be an object");
  reject_unknown(doc,
                 {"scenario", "t", "n_grid", "norm_kind", "bound", "seed", "output", "window",
                  "delta_tilde"},
                 "config");

  ExperimentConfig cfg;
  if (!doc.contains("scenario")) throw InvalidInput("config: 'scenario' missing");
  cfg.scenario = parse_scenario(doc["scenario"]);
  cfg.t_values = doc.contains("t") ? parse_t(doc["t"]) : std::vector<double>{1.0};
  cfg.n_grid = doc.contains("n_grid") ? parse_grid(doc["n_grid"]) : geometric_grid(16, 1024, 2.0);

  if (doc.contains("norm_kind")) {
    if (!doc["norm_kind"].is_string()) throw InvalidInput("config: 'norm_kind' must be a string");
    cfg.norm_kind = parse_norm_kind(doc["norm_kind"].get<std::string>());
  }
  if (doc.contains("bound")) {
    if (!doc["bound"].is_string()) throw InvalidInput("config: 'bound' must be a string");
    cfg.bound = parse_bound_kind(doc["bound"].get<std::string>());
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      throw InvalidInput("config: 'seed' must be a non-negative integer");
    }
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  cfg.scenario.seed = cfg.seed;
  if (doc.contains("output")) cfg.output = parse_output(doc["output"]);
  if (doc.contains("window")) {
    const json& w = doc["window"];
    if (!w.is_array() || w.size() != 2) throw InvalidInput("config: 'window' must be [n_min, n_max]");
    const long long a = positive_integer(w[0], "window");
    const long long b = positive_integer(w[1], "window");
    if (a > b) throw InvalidInput("config: 'window' needs n_min <= n_max");
    cfg.window = std::make_pair(a, b);
  }
  if (doc.contains("delta_tilde")) {
    const double d = finite_number(doc["delta_tilde"], "delta_tilde");
    if (!(d > 0.0 && d < 1.0)) throw InvalidInput("config: 'delta_tilde' must lie in (0, 1)");
    if (cfg.bound != BoundKind::uniform) {
      throw InvalidInput("config: 'delta_tilde' only applies to bound = uniform");
    }
    cfg.delta_tilde = d;
  }

  validate_scenario(cfg.scenario);
  const ScenarioOutput kind = scenario_output(cfg.scenario.name);
  if (kind == ScenarioOutput::synthetic && cfg.bound != BoundKind::none) {
    throw InvalidInput("config: scenario '" + cfg.scenario.name + "' only supports bound = none");
  }
  if (kind == ScenarioOutput::trotter_pair && cfg.norm_kind &&
      *cfg.norm_kind != NormKind::spectral_superop) {
    throw InvalidInput("config: scenario '" + cfg.scenario.name +
                       "' is measured in the spectral-superop norm only");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace zeno::cli
