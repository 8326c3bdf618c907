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

#include "zeno/zeno.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/parallel.hpp"

namespace zeno {

namespace {

constexpr int kEbtildeSamples = 64;
constexpr int kLeakageSamples = 16;
constexpr double kUnitEigenTol = 1e-8;

cplx cpow(cplx z, long long n) {
  cplx result = 1.0;
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

double ipow(double x, long long n) {
  double result = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

bool negligible(const ComplexMatrix& a, double scale) {
  return frobenius_norm(a) <= 1e-14 * std::max(1.0, scale);
}

void check_instance_shapes(const ComplexMatrix& m, const GeneratorSpec& g, double t) {
  if (m.empty() || !m.is_square()) throw InvalidInput("zeno instance: m must be square");
  if (!same_shape(m, g.superoperator)) {
    throw InvalidInput("zeno instance: m and the generator act on different spaces");
  }
  if (!std::isfinite(t) || t < 0.0) throw InvalidInput("zeno instance: t must be finite and >= 0");
}

std::string describe(const ZenoInstance& inst, long long n) {
  std::ostringstream os;
  os << (inst.label.empty() ? "instance" : inst.label) << " dim=" << inst.m.rows()
     << " t=" << inst.t << " n=" << n;
  return os.str();
}

ComplexMatrix main_projection(const ZenoInstance& inst) {
  return inst.spectrum.projections.size() == 1 ? inst.spectrum.projections.front()
                                               : inst.spectrum.p_sigma;
}

void require_vector(const ZenoInstance& inst, const ComplexMatrix& x, const char* op) {
  if (x.cols() != 1 || x.rows() != inst.m.rows()) {
    throw InvalidInput(std::string(op) + ": x must be a column of matching dimension");
  }
  if (inst.norm_kind != NormKind::spectral_superop) {
    throw InvalidInput(std::string(op) +
                       ": vector-level checks need the spectral-superop norm");
  }
}

void validate_grid(const std::vector<long long>& n_grid) {
  if (n_grid.empty()) throw InvalidInput("zeno_error_series: empty n grid");
  long long prev = 0;
  for (long long n : n_grid) {
    if (n <= prev) {
      throw InvalidInput("zeno_error_series: n grid must be strictly increasing and >= 1");
    }
    prev = n;
  }
}

// Matrices shared by the three split terms at a given n.
struct SplitPieces {
  ComplexMatrix zeno;       // (M e^{tL/n})^n
  ComplexMatrix projected;  // (P e^{tL/n} P)^n
  ComplexMatrix chernoff;   // e^{nP(e^{tL/n} - 1)P} P
  ComplexMatrix limit;      // e^{tPLP} P
  ComplexMatrix tlp;        // t L P
};

SplitPieces split_pieces(const ZenoInstance& inst, const ComplexMatrix& p, long long n) {
  const double nn = static_cast<double>(n);
  const ComplexMatrix e = evolve(inst.generator, inst.t / nn);
  const ComplexMatrix& l = inst.generator.superoperator;
  SplitPieces out;
  out.zeno = matrix_power(inst.m * e, n);
  out.projected = matrix_power(p * e * p, n);
  ComplexMatrix g = p * (e - ComplexMatrix::identity(e.rows())) * p;
  out.chernoff = matrix_exp(nn * g) * p;
  out.limit = matrix_exp(inst.t * (p * l * p)) * p;
  out.tlp = inst.t * (l * p);
  return out;
}

double lemma54_rhs(double delta, double tb, long long n) {
  const double nn = static_cast<double>(n);
  const double dn = ipow(delta, n);
  return dn + tb / nn + (1.0 / nn) * tb * (2.0 + tb) * (delta - dn) / (1.0 - delta) *
                            std::exp(2.0 * tb);
}

}  // namespace

ClassifyOptions default_classify_options(NormKind kind) {
  ClassifyOptions opt;
  opt.contraction = kind == NormKind::spectral_superop ? ContractionCheck::spectral_norm
                                                        : ContractionCheck::cptp;
  opt.c_tilde_norm = kind;
  return opt;
}

ZenoInstance make_zeno_instance(const ComplexMatrix& m, const GeneratorSpec& g, double t,
                                NormKind kind, std::string label,
                                std::optional<ClassifyOptions> classify) {
  check_instance_shapes(m, g, t);
  const ClassifyOptions opt = classify ? *classify : default_classify_options(kind);
  PeripheralSpectrum s = classify_power_convergence(m, opt);
  return make_zeno_instance(m, g, std::move(s), t, kind, std::move(label));
}

ZenoInstance make_zeno_instance(const ComplexMatrix& m, const GeneratorSpec& g,
                                PeripheralSpectrum spectrum, double t, NormKind kind,
                                std::string label) {
  check_instance_shapes(m, g, t);
  if (spectrum.projections.empty() ||
      spectrum.projections.size() != spectrum.eigenvalues.size()) {
    throw InvalidInput("zeno instance: spectrum has no peripheral projections");
  }
  for (const auto& p : spectrum.projections) {
    if (!same_shape(p, m)) throw InvalidInput("zeno instance: projection shape mismatch");
  }
  if (kind == NormKind::spectral_superop) {
    const double norm = operator_norm(m);
    if (norm > 1.0 + 1e-9) {
      throw InvalidInput("zeno instance: ||m|| = " + std::to_string(norm) + " exceeds 1");
    }
  } else if (!is_cptp(m, 1e-9)) {
    throw InvalidInput("zeno instance: m is not CPTP, so not a trace-norm contraction");
  }
  ZenoInstance inst;
  inst.m = m;
  inst.generator = g;
  inst.spectrum = std::move(spectrum);
  inst.t = t;
  inst.norm_kind = kind;
  inst.label = std::move(label);
  if (!g.certificate.passed) inst.flags.push_back("non-contractive-generator");
  return inst;
}

double instance_norm(const ZenoInstance& inst, const ComplexMatrix& a) {
  if (frobenius_norm(a) == 0.0) return 0.0;
  return induced_norm(a, inst.norm_kind, inst.sampled);
}

ComplexMatrix zeno_product(const ZenoInstance& inst, long long n) {
  if (n < 1) throw InvalidInput("zeno_product: n must be >= 1");
  const ComplexMatrix step = inst.m * evolve(inst.generator, inst.t / static_cast<double>(n));
  return matrix_power(step, n);
}

ComplexMatrix zeno_limit(const ZenoInstance& inst, long long n) {
  if (inst.spectrum.projections.empty()) {
    throw InvalidInput("zeno_limit: empty peripheral spectrum");
  }
  if (n < 0) throw InvalidInput("zeno_limit: n must be >= 0");
  const ComplexMatrix& l = inst.generator.superoperator;
  ComplexMatrix out = ComplexMatrix::zero(inst.m.rows(), inst.m.cols());
  for (std::size_t j = 0; j < inst.spectrum.projections.size(); ++j) {
    const ComplexMatrix& pj = inst.spectrum.projections[j];
    const ComplexMatrix term = matrix_exp(inst.t * (pj * l * pj)) * pj;
    out.add_scaled(cpow(inst.spectrum.eigenvalues[j], n), term);
  }
  return out;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::none: return "none";
    case BoundKind::thm1: return "thm1";
    case BoundKind::uniform: return "uniform";
  }
  return "none";
}

BoundKind parse_bound_kind(const std::string& name) {
  if (name == "none") return BoundKind::none;
  if (name == "thm1") return BoundKind::thm1;
  if (name == "uniform") return BoundKind::uniform;
  throw InvalidInput("unknown bound kind '" + name + "' (expected none, thm1 or uniform)");
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::thm1_explicit: return "thm1-explicit";
    case CertificateKind::closed_system: return "closed-system";
    case CertificateKind::uniform_power: return "uniform-power";
  }
  return "thm1-explicit";
}

namespace {

void require_finite_params(const BoundParams& p, const char* op) {
  const double vals[] = {p.t, p.norm_l, p.c_p, p.e_btilde, p.delta, p.c_tilde, p.b};
  for (double v : vals) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidInput(std::string(op) + ": parameters must be finite and >= 0");
    }
  }
  if (p.n < 1) throw InvalidInput(std::string(op) + ": n must be >= 1");
}

double quadratic_coefficient(const BoundParams& p) {
  return (p.c_p + (1.0 + p.e_btilde) * (1.0 + p.c_p * p.c_p)) / 2.0;
}

}  // namespace

double evaluate_bound_thm1(const BoundParams& p) {
  require_finite_params(p, "evaluate_bound_thm1");
  if (p.delta >= 1.0) throw InvalidInput("evaluate_bound_thm1: delta must be < 1");
  const double nn = static_cast<double>(p.n);
  const double tl = p.t * p.norm_l;
  return p.c_p * tl / nn + quadratic_coefficient(p) * tl * tl / nn + ipow(p.delta, p.n) +
         (2.0 * p.delta / (1.0 - p.delta)) * std::exp(3.0 * tl * p.c_p) / nn;
}

double evaluate_bound_uniform(const BoundParams& p) {
  require_finite_params(p, "evaluate_bound_uniform");
  if (!std::isfinite(p.delta_tilde) || !(p.delta < p.delta_tilde) || !(p.delta_tilde < 1.0)) {
    throw InvalidInput("evaluate_bound_uniform: need delta < delta_tilde < 1");
  }
  const double nn = static_cast<double>(p.n);
  const double tl = p.t * p.norm_l;
  const double gap = p.delta_tilde - p.delta;
  // The explicit constant is derived for c_tilde > 1.
  const double ct = std::max(p.c_tilde, 1.0);
  return p.c_p * tl / nn + quadratic_coefficient(p) * tl * tl / nn +
         (2.0 * ct / gap) * ipow(p.delta_tilde, p.n) +
         (2.0 * p.delta_tilde / (1.0 - p.delta_tilde)) * std::exp(6.0 * p.c_p * ct * tl / gap) /
             nn;
}

double evaluate_bound_closed_system(double t, double norm_h, long long n) {
  if (!std::isfinite(t) || t < 0.0 || !std::isfinite(norm_h) || norm_h < 0.0 || n < 1) {
    throw InvalidInput("evaluate_bound_closed_system: bad arguments");
  }
  return (t * norm_h + 2.5 * t * t * norm_h * norm_h) / static_cast<double>(n);
}

ZenoConstants bound_inputs(const ZenoInstance& inst) {
  ZenoConstants k;
  k.p = main_projection(inst);
  const ComplexMatrix& l = inst.generator.superoperator;
  const std::size_t dim = inst.m.rows();
  k.c_p = instance_norm(inst, ComplexMatrix::identity(dim) - k.p);
  k.norm_l = instance_norm(inst, l);
  const ComplexMatrix plp = k.p * l * k.p;
  const double p_norm = instance_norm(inst, k.p);
  if (negligible(plp, frobenius_norm(l))) {
    k.e_btilde = std::max(1.0, p_norm);
    return k;
  }
  std::vector<double> vals(kEbtildeSamples);
  parallel_for(vals.size(), [&](std::size_t i) {
    const double s = inst.t * static_cast<double>(i) / (kEbtildeSamples - 1);
    const ComplexMatrix e = matrix_exp(s * plp);
    vals[i] = std::max(instance_norm(inst, e), instance_norm(inst, e * k.p));
  });
  k.e_btilde = *std::max_element(vals.begin(), vals.end());
  return k;
}

ZenoConstants zeno_condition_constants(const ZenoInstance& inst) {
  ZenoConstants k = bound_inputs(inst);
  const ComplexMatrix& l = inst.generator.superoperator;
  const std::size_t dim = inst.m.rows();
  if (inst.spectrum.projections.size() > 1) {
    k.b = std::max(instance_norm(inst, inst.m * l), instance_norm(inst, l * k.p));
    return k;
  }
  const ComplexMatrix q = ComplexMatrix::identity(dim) - k.p;
  double b = std::max(instance_norm(inst, k.p * l * q), instance_norm(inst, q * l * k.p));
  if (inst.t > 0.0) {
    // Leakage ratios ||P e^{sL} Q|| / s on a geometric grid in (0, t].
    std::vector<double> ratios(kLeakageSamples);
    const double lo = 1e-4 * inst.t;
    parallel_for(ratios.size(), [&](std::size_t i) {
      const double f = static_cast<double>(i) / (kLeakageSamples - 1);
      const double s = lo * std::pow(inst.t / lo, f);
      const ComplexMatrix e = evolve(inst.generator, s);
      const ComplexMatrix a = k.p * e * q;
      const ComplexMatrix c = q * e * k.p;
      double r = 0.0;
      if (!negligible(a, 1.0)) r = std::max(r, instance_norm(inst, a) / s);
      if (!negligible(c, 1.0)) r = std::max(r, instance_norm(inst, c) / s);
      ratios[i] = r;
    });
    for (double r : ratios) b = std::max(b, r);
  }
  k.b = b;
  return k;
}

void require_thm1_hypotheses(const ZenoInstance& inst, const char* op) {
  const auto& s = inst.spectrum;
  if (s.eigenvalues.size() != 1 || std::abs(s.eigenvalues.front() - 1.0) > kUnitEigenTol) {
    throw InvalidInput(std::string(op) +
                       ": needs a single peripheral eigenvalue equal to 1");
  }
  if (!(s.delta < 1.0)) throw InvalidInput(std::string(op) + ": delta must be < 1");
  if (s.c_tilde > 1.0 + 1e-9) {
    throw InvalidInput(std::string(op) + ": ||M^n - P|| <= delta^n fails (c_tilde = " +
                       std::to_string(s.c_tilde) + ")");
  }
}

ErrorSeries zeno_error_series(const ZenoInstance& inst, const std::vector<long long>& n_grid,
                              BoundKind bound, const SeriesOptions& opt) {
  validate_grid(n_grid);
  ErrorSeries series;
  series.t = inst.t;
  series.instance_label = inst.label;
  series.entries.resize(n_grid.size());

  BoundParams base;
  double epsilon = std::numeric_limits<double>::infinity();
  if (bound != BoundKind::none) {
    if (bound == BoundKind::thm1) {
      require_thm1_hypotheses(inst, "zeno_error_series(thm1)");
    } else {
      const auto& s = inst.spectrum;
      if (s.eigenvalues.size() != 1 || std::abs(s.eigenvalues.front() - 1.0) > kUnitEigenTol) {
        throw InvalidInput("zeno_error_series(uniform): needs a single peripheral eigenvalue 1");
      }
    }
    const ZenoConstants k = bound_inputs(inst);
    base.t = inst.t;
    base.norm_l = k.norm_l;
    base.c_p = k.c_p;
    base.e_btilde = k.e_btilde;
    base.delta = inst.spectrum.delta;
    base.c_tilde = inst.spectrum.c_tilde;
    if (bound == BoundKind::uniform) {
      base.delta_tilde = opt.delta_tilde ? *opt.delta_tilde : (1.0 + base.delta) / 2.0;
      if (!(base.delta < base.delta_tilde && base.delta_tilde < 1.0)) {
        throw InvalidInput("zeno_error_series(uniform): need delta < delta_tilde < 1");
      }
      const ComplexMatrix m_perp =
          (ComplexMatrix::identity(inst.m.rows()) - k.p) * inst.m;
      base.b = instance_norm(inst, m_perp * inst.generator.superoperator);
      epsilon = semicontinuity_epsilon(m_perp, Contour{0.0, base.delta_tilde, 64}, base.b).epsilon;
    }
  }

  parallel_for(n_grid.size(), [&](std::size_t i) {
    const long long n = n_grid[i];
    ErrorEntry& e = series.entries[i];
    e.n = n;
    e.error = instance_norm(inst, zeno_product(inst, n) - zeno_limit(inst, n));
    e.flags = inst.flags;
    if (bound == BoundKind::none) return;
    BoundParams p = base;
    p.n = n;
    e.bound = bound == BoundKind::thm1 ? evaluate_bound_thm1(p) : evaluate_bound_uniform(p);
    if (bound == BoundKind::uniform && inst.t / static_cast<double>(n) > epsilon) {
      e.flags.push_back("epsilon-exceeded");
    }
  });
  for (const auto& e : series.entries) {
    if (!std::isfinite(e.error)) {
      throw NumericalFailure("zeno_error_series: non-finite error at n = " + std::to_string(e.n));
    }
  }
  return series;
}

InequalityReport check_lemma_54(const ZenoInstance& inst, long long n) {
  if (n < 1) throw InvalidInput("check_lemma_54: n must be >= 1");
  require_thm1_hypotheses(inst, "check_lemma_54");
  const ZenoConstants k = zeno_condition_constants(inst);
  const double nn = static_cast<double>(n);
  const ComplexMatrix e = evolve(inst.generator, inst.t / nn);
  const double lhs = instance_norm(inst, matrix_power(inst.m * e, n) -
                                             matrix_power(k.p * e * k.p, n));
  return make_report(lhs, lemma54_rhs(inst.spectrum.delta, inst.t * k.b, n),
                     "projection term " + describe(inst, n));
}

LemmaSplit check_lemma_split(const ZenoInstance& inst, const ZenoConstants& k, long long n,
                             const ComplexMatrix& x) {
  if (n < 1) throw InvalidInput("check_lemma_split: n must be >= 1");
  require_thm1_hypotheses(inst, "check_lemma_split");
  require_vector(inst, x, "check_lemma_split");
  const SplitPieces pc = split_pieces(inst, k.p, n);
  const double nn = static_cast<double>(n);
  const double tb = inst.t * k.b;
  const double xn = vector_norm(x);
  const ComplexMatrix lpx = pc.tlp * x;
  const double lpx_n = vector_norm(lpx);
  const double lp2x_n = vector_norm(pc.tlp * lpx);
  const std::string w = describe(inst, n);

  LemmaSplit out;
  out.lemma54 = make_report(vector_norm(pc.zeno * x - pc.projected * x),
                            lemma54_rhs(inst.spectrum.delta, tb, n) * xn, "projection term " + w);
  out.lemma55 = make_report(vector_norm(pc.projected * x - pc.chernoff * x),
                            (tb * tb * xn + tb * lpx_n + lp2x_n) / (2.0 * nn), "chernoff term " + w);
  out.lemma56 = make_report(vector_norm(pc.chernoff * x - pc.limit * x),
                            k.e_btilde * (tb * tb * xn + lp2x_n) / (2.0 * nn), "generator term " + w);
  out.total_error = vector_norm(pc.zeno * x - pc.limit * x);
  out.telescoping_gap =
      out.lemma54.lhs + out.lemma55.lhs + out.lemma56.lhs - out.total_error;
  out.bound_sum = out.lemma54.rhs + out.lemma55.rhs + out.lemma56.rhs;
  return out;
}

InequalityReport check_lemma_54_vector(const ZenoInstance& inst, long long n,
                                       const ComplexMatrix& x) {
  require_thm1_hypotheses(inst, "check_lemma_54");
  require_vector(inst, x, "check_lemma_54");
  return check_lemma_split(inst, zeno_condition_constants(inst), n, x).lemma54;
}

InequalityReport check_lemma_55(const ZenoInstance& inst, long long n, const ComplexMatrix& x) {
  require_thm1_hypotheses(inst, "check_lemma_55");
  require_vector(inst, x, "check_lemma_55");
  return check_lemma_split(inst, zeno_condition_constants(inst), n, x).lemma55;
}

InequalityReport check_lemma_56(const ZenoInstance& inst, long long n, const ComplexMatrix& x) {
  require_thm1_hypotheses(inst, "check_lemma_56");
  require_vector(inst, x, "check_lemma_56");
  return check_lemma_split(inst, zeno_condition_constants(inst), n, x).lemma56;
}

PeripheralSplit peripheral_split(const ZenoInstance& inst, long long n) {
  if (n < 1) throw InvalidInput("peripheral_split: n must be >= 1");
  const auto& spec = inst.spectrum;
  if (spec.projections.empty()) throw InvalidInput("peripheral_split: empty spectrum");
  const ComplexMatrix& l = inst.generator.superoperator;
  const ComplexMatrix& ps = spec.p_sigma;
  const double nn = static_cast<double>(n);
  const double s = inst.t / nn;

  PeripheralSplit out;
  out.b = std::max(operator_norm(inst.m * l), operator_norm(l * ps));
  const ComplexMatrix a = ps * inst.m;
  const double ps_norm = operator_norm(ps);
  const double b_sup = ps_norm * ps_norm * operator_norm(inst.m * l);
  out.epsilon = std::numeric_limits<double>::infinity();
  for (const auto& c : spec.contours) {
    out.epsilon = std::min(out.epsilon, semicontinuity_epsilon(a, c, b_sup).epsilon);
  }
  if (s > out.epsilon) {
    out.epsilon_exceeded = true;
    std::ostringstream os;
    os << "t/n = " << s << " exceeds the perturbation radius epsilon = " << out.epsilon
       << "; P_j(t/n) is computed anyway";
    out.warnings.push_back(os.str());
  }

  const ComplexMatrix e = evolve(inst.generator, s);
  const ComplexMatrix k = ps * inst.m * e * ps;
  const MatrixPath b_map = [&](double u) -> ComplexMatrix {
    if (u == 0.0) return ps * inst.m * l * ps;
    return (1.0 / u) * (ps * inst.m * evolve(inst.generator, u) * ps - a);
  };

  ComplexMatrix approx = ComplexMatrix::zero(a.rows(), a.cols());
  for (std::size_t j = 0; j < spec.projections.size(); ++j) {
    const ComplexMatrix pj = perturbed_projection(a, b_map, s, spec.contours[j]);
    const cplx lam = spec.eigenvalues[j];
    const ComplexMatrix cj = std::conj(lam) * (pj * k * pj);
    approx.add_scaled(cpow(lam, n), matrix_exp(nn * (cj - pj)) * pj);
  }
  const ComplexMatrix z = zeno_product(inst, n);
  const ComplexMatrix kn = matrix_power(k, n);
  const ComplexMatrix lim = zeno_limit(inst, n);
  out.term1 = instance_norm(inst, z - kn);
  out.term2 = instance_norm(inst, kn - approx);
  out.term3 = instance_norm(inst, approx - lim);
  out.total = instance_norm(inst, z - lim);
  return out;
}

}  // namespace zeno
