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
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zeno/chernoff.hpp"
#include "zeno/cli.hpp"
#include "zeno/error.hpp"

namespace zeno::cli {
namespace {

using nlohmann::json;

GeneratorSpec scaled(const GeneratorSpec& g, double t) {
  return make_explicit_generator(t * g.superoperator);
}

std::vector<ErrorSeries> compute_series(const ExperimentConfig& cfg, RunResult& out) {
  const ScenarioSpec& spec = cfg.scenario;
  std::vector<ErrorSeries> all;
  switch (scenario_output(spec.name)) {
    case ScenarioOutput::zeno_instance: {
      SeriesOptions opt;
      opt.delta_tilde = cfg.delta_tilde;
      for (double t : cfg.t_values) {
        const ZenoInstance inst = build_scenario_instance(spec, t, cfg.norm_kind);
        out.label = inst.label;
        out.norm = to_string(inst.norm_kind);
        all.push_back(zeno_error_series(inst, cfg.n_grid, cfg.bound, opt));
      }
      break;
    }
    case ScenarioOutput::trotter_pair: {
      const auto [l1, l2] = build_scenario_trotter(spec);
      out.label = spec.name;
      out.norm = to_string(NormKind::spectral_superop);
      for (double t : cfg.t_values) {
        ErrorSeries s = trotter_rate(scaled(l1, t), scaled(l2, t), cfg.n_grid);
        s.t = t;
        if (cfg.bound == BoundKind::none) {
          for (ErrorEntry& e : s.entries) e.bound.reset();
        }
        all.push_back(std::move(s));
      }
      break;
    }
    case ScenarioOutput::synthetic: {
      out.label = spec.name;
      out.norm = "none";
      for (double t : cfg.t_values) {
        ErrorSeries s = build_scenario_synthetic(spec, cfg.n_grid);
        s.t = t;
        all.push_back(std::move(s));
      }
      break;
    }
  }
  return all;
}

json fit_to_json(const RateFit& f) {
  return json{{"slope", f.slope},
              {"intercept", f.intercept},
              {"r_squared", f.r_squared},
              {"window", json::array({f.window.first, f.window.second})},
              {"points", f.points}};
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string fits_summary(const RunResult& r) {
  json arr = json::array();
  for (const FitRecord& f : r.fits) {
    json j{{"t", f.t}, {"fit", f.fit ? fit_to_json(*f.fit) : json(nullptr)}};
    if (!f.note.empty()) j["note"] = f.note;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidInput("cannot open output file '" + path + "'");
  f << text;
  f.flush();
  if (!f) throw InvalidInput("failed writing output file '" + path + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  RunResult out;
  const std::vector<ErrorSeries> all = compute_series(cfg, out);
  for (const ErrorSeries& s : all) {
    for (const ErrorEntry& e : s.entries) {
      ReportRow row;
      row.n = e.n;
      row.t = s.t;
      row.error = e.error;
      row.bound = e.bound;
      if (e.bound) row.slack = *e.bound - e.error;
      row.flags = e.flags;
      out.rows.push_back(std::move(row));
    }
    FitRecord fr;
    fr.t = s.t;
    try {
      fr.fit = cfg.window ? rate_fit(s, *cfg.window) : rate_fit(s);
    } catch (const TooFewPoints& e) {
      fr.note = e.what();
    }
    out.fits.push_back(std::move(fr));
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return a.n != b.n ? a.n < b.n : a.t < b.t;
  });
  return out;
}

std::string format_csv(const RunResult& r) {
  std::string s = "n,t,error,bound,slack,flags\n";
  for (const ReportRow& row : r.rows) {
    s += std::to_string(row.n);
    s += ',' + format_double(row.t);
    s += ',' + format_double(row.error);
    s += ',';
    if (row.bound) s += format_double(*row.bound);
    s += ',';
    if (row.slack) s += format_double(*row.slack);
    s += ',';
    for (std::size_t i = 0; i < row.flags.size(); ++i) {
      if (i) s += ';';
      s += row.flags[i];
    }
    s += '\n';
  }
  return s;
}

std::string format_json(const ExperimentConfig& cfg, const RunResult& r) {
  json rows = json::array();
  for (const ReportRow& row : r.rows) {
    rows.push_back(json{{"n", row.n},
                        {"t", row.t},
                        {"error", row.error},
                        {"bound", optional_number(row.bound)},
                        {"slack", optional_number(row.slack)},
                        {"flags", row.flags}});
  }
  json doc{{"scenario", cfg.scenario.name},
           {"instance", r.label},
           {"norm_kind", r.norm},
           {"bound", to_string(cfg.bound)},
           {"seed", cfg.seed},
           {"rows", std::move(rows)},
           {"fits", json::parse(fits_summary(r))}};
  return doc.dump(2) + "\n";
}

std::string fit_json(const RateFit& f) { return fit_to_json(f).dump(); }

int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (...) {
    return exit_code_for_current_exception(err, "run: " + config_path);
  }
  try {
    const RunResult r = run_experiment(cfg);
    const std::string report = cfg.output.format == "json" ? format_json(cfg, r) : format_csv(r);
    // Everything is computed before anything is written.
    if (cfg.output.path) {
      write_file(*cfg.output.path, report);
      out << fits_summary(r) << "\n";
    } else {
      out << report;
      err << fits_summary(r) << "\n";
    }
    return kOk;
  } catch (...) {
    return exit_code_for_current_exception(err, "run[" + cfg.scenario.name + "]");
  }
}

int cmd_rates(const std::string& config_path, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (...) {
    return exit_code_for_current_exception(err, "rates: " + config_path);
  }
  try {
    // Rates only need the error column.
    cfg.bound = BoundKind::none;
    cfg.delta_tilde.reset();
    RunResult r;
    const std::vector<ErrorSeries> all = compute_series(cfg, r);
    json arr = json::array();
    for (const ErrorSeries& s : all) {
      const RateFit f = cfg.window ? rate_fit(s, *cfg.window) : rate_fit(s);
      json j = fit_to_json(f);
      if (all.size() > 1) j["t"] = s.t;
      arr.push_back(std::move(j));
    }
    out << (arr.size() == 1 ? arr.front().dump() : arr.dump()) << "\n";
    return kOk;
  } catch (...) {
    return exit_code_for_current_exception(err, "rates[" + cfg.scenario.name + "]");
  }
}

int exit_code_for_current_exception(std::ostream& err, const std::string& op) {
  try {
    throw;
  } catch (const InvalidInput& e) {
    err << "zeno " << op << ": invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const ResourceLimit& e) {
    err << "zeno " << op << ": resource limit: " << e.what() << "\n";
    return kValidation;
  } catch (const NumericalFailure& e) {
    err << "zeno " << op << ": numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "zeno " << op << ": error: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace zeno::cli
