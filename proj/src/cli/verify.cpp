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
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "zeno/chernoff.hpp"
#include "zeno/cli.hpp"
#include "zeno/counting.hpp"
#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/random.hpp"
#include "zeno/spectral.hpp"

namespace zeno::cli {
namespace {

constexpr double kInequalitySlack = -1e-9;
constexpr double kPerturbationSlack = -1e-8;
constexpr int kMaxTrials = 100000;

// Tally of one named check across trials; the first violation is kept.
class Check {
 public:
  Check(std::string name, double min_slack) : name_(std::move(name)), threshold_(min_slack) {}

  void add(const InequalityReport& r, std::uint64_t seed) {
    ++cases_;
    rows_.push_back({seed, r});
    worst_ = std::min(worst_, r.slack);
    if (!(r.slack >= threshold_) && !violated_) {
      violated_ = true;
      std::ostringstream os;
      os.precision(17);
      os << r.witness << " lhs=" << r.lhs << " rhs=" << r.rhs << " slack=" << r.slack
         << " trial_seed=" << seed;
      witness_ = os.str();
    }
  }

  // An oracle match: |difference| <= tol.
  void match(double difference, double tol, const std::string& what, std::uint64_t seed) {
    add(make_report(difference, tol, what), seed);
  }

  bool violated() const { return violated_; }

  void write_rows(const std::string& suite, std::ostream& csv) const {
    for (const auto& [seed, r] : rows_) {
      csv << suite << ',' << name_ << ',' << seed << ',' << format_double(r.lhs) << ','
          << format_double(r.rhs) << ',' << format_double(r.slack) << ",\"" << r.witness << "\"\n";
    }
  }

  void print(const std::string& suite, std::uint64_t seed, std::ostream& out) const {
    out << suite << "/" << name_ << ": " << cases_ << " cases, min slack ";
    out.precision(6);
    out << (cases_ ? worst_ : 0.0) << (violated_ ? " VIOLATED" : " ok") << "\n";
    if (violated_) out << "  witness: " << witness_ << " (suite seed " << seed << ")\n";
  }

 private:
  std::string name_;
  double threshold_;
  int cases_ = 0;
  double worst_ = std::numeric_limits<double>::infinity();
  bool violated_ = false;
  std::string witness_;
  std::vector<std::pair<std::uint64_t, InequalityReport>> rows_;
};

using Suite = std::function<std::vector<Check>(std::uint64_t seed, int trials)>;

template <typename Body>
void for_trials(std::uint64_t seed, int trials, Body&& body) {
  Rng master(seed);
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = master.next_seed();
    try {
      body(s);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw NumericalFailure(std::string(e.what()) + " (trial seed " + std::to_string(s) + ")");
    }
  }
}

std::string describe_trial(const char* what, std::size_t d, long long n) {
  return std::string(what) + " dim=" + std::to_string(d) + " n=" + std::to_string(n);
}

std::vector<Check> chernoff_suite(std::uint64_t seed, int trials) {
  Check sqrt_n("sqrt_n", kInequalitySlack);
  Check modified("modified", kInequalitySlack);
  Check approx("approx_modified", kInequalitySlack);
  for_trials(seed, trials, [&](std::uint64_t s) {
    Rng rng(s);
    const std::size_t d = static_cast<std::size_t>(rng.integer(2, 8));
    const long long n = rng.integer(1, 256);
    const ComplexMatrix c = random_contraction(d, rng.uniform(0.05, 1.0), rng);
    const ComplexMatrix x = random_unit_vector(d, rng);
    sqrt_n.add(chernoff_sqrt_n(c, n, x), s);
    modified.add(chernoff_modified(c, n, x), s);

    // P(t) = e^{tX} P e^{-tX} with X anti-Hermitian, so ||P(t) - P|| <= 2t||X||.
    // C(t) = U(t) P e^{tK} P U(t)^H with K dissipative, so ||C(t) - P(t)|| <= t||K||.
    const std::size_t rank = static_cast<std::size_t>(rng.integer(1, static_cast<long long>(d) - 1));
    const ComplexMatrix p = random_projector(d, rank, rng);
    ComplexMatrix x_gen = random_hermitian(d, rng);
    x_gen *= cplx(0.0, rng.uniform(0.0, 2.0) / std::max(operator_norm(x_gen), 1e-300));
    const ComplexMatrix k = random_dissipative(d, rng.uniform(0.0, 2.0), rng);
    const double v = 2.0 * operator_norm(x_gen);
    const double w = operator_norm(k);
    MatrixPath p_map = [&](double t) {
      return matrix_exp(t * x_gen) * p * matrix_exp(-t * x_gen);
    };
    MatrixPath c_map = [&](double t) {
      const ComplexMatrix u = matrix_exp(t * x_gen);
      return u * p * matrix_exp(t * k) * p * u.adjoint();
    };
    approx.add(chernoff_approx_modified(c_map, p_map, p, v, w, n), s);
  });
  return {sqrt_n, modified, approx};
}

std::vector<Check> trotter_suite(std::uint64_t seed, int trials) {
  Check product("product_formula", kInequalitySlack);
  Check envelope("envelope", kInequalitySlack);
  Check qubit_rate("qubit_noncommuting_slope", 0.0);
  Check qubit_commuting("qubit_commuting_exact", 0.0);
  const std::vector<long long> grid = {1, 2, 4, 8, 16, 32, 64, 128, 256};
  for_trials(seed, trials, [&](std::uint64_t s) {
    Rng rng(s);
    const std::size_t d = static_cast<std::size_t>(rng.integer(2, 8));
    const ComplexMatrix a = random_dissipative(d, rng.uniform(0.1, 2.0), rng);
    const ComplexMatrix b = random_dissipative(d, rng.uniform(0.1, 2.0), rng);
    const double t = rng.uniform(0.1, 2.0);
    const long long n = rng.integer(1, 256);
    MatrixPath f = [&](double h) { return matrix_exp(h * a) * matrix_exp(h * b); };
    product.add(product_formula_bound(f, a + b, t, n), s);
    const ErrorSeries series =
        trotter_rate(make_explicit_generator(t * a), make_explicit_generator(t * b), grid);
    for (const ErrorEntry& e : series.entries) {
      envelope.add(make_report(e.error, *e.bound, describe_trial("trotter_envelope", d, e.n)), s);
    }
  });

  std::vector<long long> rate_grid;
  for (long long n = 16; n <= 1024; n *= 2) rate_grid.push_back(n);
  const auto [x1, x2] = trotter_qubit_pair(false);
  const RateFit fit = rate_fit(trotter_rate(x1, x2, rate_grid));
  qubit_rate.match(std::abs(fit.slope + 1.0), 0.15,
                   "noncommuting qubit pair slope=" + format_double(fit.slope), seed);
  const auto [c1, c2] = trotter_qubit_pair(true);
  const ErrorSeries comm = trotter_rate(c1, c2, rate_grid);
  for (const ErrorEntry& e : comm.entries) {
    qubit_commuting.match(e.error, 1e-12, describe_trial("commuting qubit pair", 4, e.n), seed);
  }
  return {product, envelope, qubit_rate, qubit_commuting};
}

std::vector<Check> lemmas_suite(std::uint64_t seed, int trials) {
  Check l54("lemma54_operator", kInequalitySlack);
  Check l54v("lemma54_vector", kInequalitySlack);
  Check l55("lemma55", kInequalitySlack);
  Check l56("lemma56", kInequalitySlack);
  Check tele("telescoping", kInequalitySlack);
  Check sum("bound_sum_dominates", kInequalitySlack);
  Check thm1("thm1_domination", kInequalitySlack);
  Check optimal("optimality_lemma54", kInequalitySlack);
  for_trials(seed, trials, [&](std::uint64_t s) {
    Rng rng(s);
    RandomInstanceOptions opt;
    opt.dim = static_cast<std::size_t>(rng.integer(2, 6));
    opt.rank = static_cast<std::size_t>(rng.integer(1, static_cast<long long>(opt.dim) - 1));
    opt.delta = rng.uniform(0.0, 0.9);
    opt.l_norm = rng.uniform(0.1, 2.0);
    opt.t = rng.uniform(0.25, 2.0);
    const std::uint64_t inst_seed = rng.next_seed();
    const ZenoInstance inst = rng.uniform() < 0.25 ? random_closed_instance(opt, inst_seed)
                                                   : random_gapped_instance(opt, inst_seed);
    const long long n = rng.integer(1, 256);
    const ComplexMatrix x = random_unit_vector(opt.dim, rng);
    const ZenoConstants k = zeno_condition_constants(inst);
    const LemmaSplit split = check_lemma_split(inst, k, n, x);
    l54v.add(split.lemma54, s);
    l55.add(split.lemma55, s);
    l56.add(split.lemma56, s);
    const double lhs_sum = split.lemma54.lhs + split.lemma55.lhs + split.lemma56.lhs;
    tele.add(make_report(split.total_error, lhs_sum, describe_trial("telescoping", opt.dim, n)), s);
    sum.add(make_report(split.total_error, split.bound_sum, describe_trial("bound_sum", opt.dim, n)),
            s);
    l54.add(check_lemma_54(inst, n), s);
    const ErrorSeries series = zeno_error_series(inst, {n}, BoundKind::thm1);
    const ErrorEntry& e = series.entries.front();
    thm1.add(make_report(e.error, *e.bound, describe_trial(inst.label.c_str(), opt.dim, n)), s);
  });
  const ZenoInstance opt_inst = build_optimality_example(0.5, 1.0);
  for (long long n = 1; n <= 64; ++n) optimal.add(check_lemma_54(opt_inst, n), seed);
  return {l54, l54v, l55, l56, tele, sum, thm1, optimal};
}

// A = S D S^{-1} with eigenvalues at least 1 apart and cond(S) <= 3.
struct Diagonalizable {
  ComplexMatrix a, s, s_inv;
  std::vector<cplx> lambda;
};

Diagonalizable random_diagonalizable(std::size_t d, Rng& rng) {
  Diagonalizable out;
  for (std::size_t k = 0; k < d; ++k) {
    out.lambda.emplace_back(static_cast<double>(k) - 0.5 * static_cast<double>(d),
                            rng.uniform(-0.3, 0.3));
  }
  ComplexMatrix g = random_gaussian(d, d, rng);
  g *= 0.5 / operator_norm(g);
  out.s = ComplexMatrix::identity(d) + g;
  out.s_inv = inverse(out.s);
  out.a = out.s * ComplexMatrix::diagonal(out.lambda) * out.s_inv;
  return out;
}

std::vector<Check> spectral_suite(std::uint64_t seed, int trials) {
  Check projection("projection_vs_eigendecomposition", 0.0);
  Check jordan("jordan_quasinilpotent", 0.0);
  Check routes("quasinilpotent_routes", 0.0);
  Check cptp("cptp_peripheral_nilpotents", 0.0);
  Check zeroth("perturbed_zeroth_order", kPerturbationSlack);
  Check first("perturbed_first_order", kPerturbationSlack);
  for_trials(seed, trials, [&](std::uint64_t s) {
    Rng rng(s);
    {
      const std::size_t d = static_cast<std::size_t>(rng.integer(3, 8));
      const Diagonalizable m = random_diagonalizable(d, rng);
      const std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long long>(d) - 1));
      const Contour c{m.lambda[j], 0.45, 64};
      const ComplexMatrix exact = m.s * ComplexMatrix::unit(d, j, j) * m.s_inv;
      projection.match(operator_norm(spectral_projection(m.a, c) - exact), 1e-10,
                       describe_trial("projection", d, 0), s);
    }
    {
      // lambda I + N on a block of size b, plus a separated diagonal part.
      const std::size_t b = static_cast<std::size_t>(rng.integer(2, 4));
      const std::size_t d = b + static_cast<std::size_t>(rng.integer(0, 2));
      const cplx lambda(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      ComplexMatrix j = ComplexMatrix::zero(d, d);
      ComplexMatrix nil = ComplexMatrix::zero(d, d);
      for (std::size_t i = 0; i < d; ++i) j(i, i) = i < b ? lambda : lambda + 2.0 + static_cast<double>(i);
      for (std::size_t i = 0; i + 1 < b; ++i) nil(i, i + 1) = 1.0;
      j += nil;
      const ComplexMatrix u = random_unitary(d, rng);
      const ComplexMatrix a = u * j * u.adjoint();
      const Contour c{lambda, 0.75, 64};
      const ComplexMatrix n_contour = quasinilpotent(a, lambda, c);
      jordan.match(operator_norm(n_contour - u * nil * u.adjoint()), 1e-10,
                   describe_trial("jordan", d, 0), s);
      ComplexMatrix n_alg = a * spectral_projection(a, c);
      n_alg.add_scaled(-lambda, spectral_projection(a, c));
      routes.match(operator_norm(n_contour - n_alg), 1e-10, describe_trial("routes", d, 0), s);
    }
    {
      const std::size_t d = static_cast<std::size_t>(rng.integer(2, 5));
      const std::size_t env = static_cast<std::size_t>(rng.integer(1, 3));
      const ComplexMatrix m = random_stinespring_channel(d, env, rng);
      ClassifyOptions opt;
      opt.contraction = ContractionCheck::cptp;
      opt.n_max = 16;
      const PeripheralSpectrum sp = classify_power_convergence(m, opt);
      for (std::size_t q = 0; q < sp.eigenvalues.size(); ++q) {
        cptp.match(sp.nilpotent_norms[q], 1e-8, describe_trial("cptp nilpotent", d, 0), s);
        const ComplexMatrix nq = quasinilpotent(m, sp.eigenvalues[q], sp.contours[q]);
        cptp.match(operator_norm(nq), 1e-8, describe_trial("cptp nilpotent contour", d, 0), s);
      }
    }
    {
      const std::size_t d = static_cast<std::size_t>(rng.integer(3, 6));
      const Diagonalizable m = random_diagonalizable(d, rng);
      const std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long long>(d) - 1));
      const Contour c{m.lambda[j], 0.45, 64};
      const ComplexMatrix b0 = random_contraction(d, rng.uniform(0.1, 1.0), rng);
      const ComplexMatrix b1 = random_contraction(d, rng.uniform(0.1, 1.0), rng);
      MatrixPath b_map = [&](double u) {
        const double e = std::exp(-u);
        return e * b0 + (1.0 - e) * b1;
      };
      const double b_sup = operator_norm(b0) + operator_norm(b1);
      const double eps = semicontinuity_epsilon(m.a, c, b_sup).epsilon;
      const double t = rng.uniform(0.05, 1.0) * eps;
      const PerturbedProjectionCheck chk = check_perturbed_projection(m.a, b_map, b_sup, t, c);
      zeroth.add(chk.zeroth_order, s);
      first.add(chk.first_order, s);
    }
  });
  return {projection, jordan, routes, cptp, zeroth, first};
}

std::vector<Check> counting_suite(std::uint64_t seed, int) {
  Check oracle("closed_form_vs_brute_force", 0.0);
  Check rows("row_sums", 0.0);
  for (long long n = 1; n <= 14; ++n) {
    for (long long k = 0; k <= n; ++k) {
      std::uint64_t total = 0;
      for (long long j = 0; j <= n; ++j) {
        const std::uint64_t cf = counting_closed_form(j, n, k);
        const std::uint64_t bf = counting_brute_force(j, n, k);
        total += bf;
        const std::string what = "N(" + std::to_string(j) + "," + std::to_string(n) + "," +
                                 std::to_string(k) + ") closed=" + std::to_string(cf) +
                                 " brute=" + std::to_string(bf);
        oracle.match(cf == bf ? 0.0 : 1.0, 0.0, what, seed);
      }
      const std::uint64_t c = binomial(n, k);
      rows.match(total == c ? 0.0 : 1.0, 0.0,
                 "sum_j N(j," + std::to_string(n) + "," + std::to_string(k) + ")=" +
                     std::to_string(total) + " C=" + std::to_string(c),
                 seed);
    }
  }
  return {oracle, rows};
}

Suite lookup_suite(const std::string& name) {
  if (name == "chernoff") return chernoff_suite;
  if (name == "trotter") return trotter_suite;
  if (name == "lemmas") return lemmas_suite;
  if (name == "spectral") return spectral_suite;
  if (name == "counting") return counting_suite;
  throw InvalidInput("unknown verify suite '" + name +
                     "' (expected chernoff, trotter, lemmas, spectral or counting)");
}

}  // namespace

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, std::ostream& out,
               std::ostream& err, const std::optional<std::string>& csv_path) {
  try {
    const Suite run = lookup_suite(suite);
    if (trials < 1 || trials > kMaxTrials) {
      throw InvalidInput("verify: trials must lie in [1, " + std::to_string(kMaxTrials) + "]");
    }
    const std::vector<Check> checks = run(seed, trials);
    if (csv_path) {
      std::ofstream csv(*csv_path, std::ios::binary | std::ios::trunc);
      if (!csv) throw InvalidInput("verify: cannot open '" + *csv_path + "'");
      csv << "suite,check,trial_seed,lhs,rhs,slack,witness\n";
      for (const Check& c : checks) c.write_rows(suite, csv);
      if (!csv.flush()) throw InvalidInput("verify: failed writing '" + *csv_path + "'");
    }
    bool violated = false;
    for (const Check& c : checks) {
      c.print(suite, seed, out);
      violated = violated || c.violated();
    }
    return violated ? kViolated : kOk;
  } catch (...) {
    return exit_code_for_current_exception(err, "verify " + suite + " (seed " +
                                                    std::to_string(seed) + ")");
  }
}

}  // namespace zeno::cli
