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

#include "zeno/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/random.hpp"

namespace zeno {

namespace {

constexpr double kEntropyFloor = 1e-14;

ComplexMatrix outer(const ComplexMatrix& u, std::size_t i, std::size_t j) {
  ComplexMatrix out(u.rows(), u.rows());
  for (std::size_t a = 0; a < u.rows(); ++a)
    for (std::size_t b = 0; b < u.rows(); ++b) out(a, b) = u(a, i) * std::conj(u(b, j));
  return out;
}

void require_density(const ComplexMatrix& sigma, const char* op) {
  if (sigma.empty() || !sigma.is_square()) {
    throw InvalidInput(std::string(op) + ": sigma must be square");
  }
  if (hermiticity_defect(sigma) > 1e-10) {
    throw InvalidInput(std::string(op) + ": sigma is not Hermitian");
  }
  if (std::abs(sigma.trace() - 1.0) > 1e-10) {
    throw InvalidInput(std::string(op) + ": sigma must have unit trace");
  }
  ComplexMatrix h = sigma + sigma.adjoint();
  h *= 0.5;
  if (eigh(h).values.front() < -1e-10) {
    throw InvalidInput(std::string(op) + ": sigma is not positive semidefinite");
  }
}

void require_random_options(const RandomInstanceOptions& opt, const char* op) {
  if (opt.dim < 2 || opt.rank < 1 || opt.rank >= opt.dim) {
    throw InvalidInput(std::string(op) + ": need 1 <= rank < dim");
  }
  if (!(opt.delta >= 0.0 && opt.delta < 1.0)) {
    throw InvalidInput(std::string(op) + ": delta must lie in [0, 1)");
  }
  if (!(opt.l_norm >= 0.0) || !std::isfinite(opt.l_norm) || !(opt.t >= 0.0)) {
    throw InvalidInput(std::string(op) + ": l_norm and t must be finite and >= 0");
  }
}

// Eigenvalues in the closed disk of radius delta with one on its boundary.
std::vector<cplx> inner_spectrum(std::size_t count, double delta, Rng& rng) {
  std::vector<cplx> mu(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = i == 0 ? delta : delta * std::sqrt(rng.uniform());
    mu[i] = std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
  }
  return mu;
}

}  // namespace

ZenoInstance build_optimality_example(double delta, double t) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidInput("build_optimality_example: delta must lie in (0, 1)");
  }
  if (!std::isfinite(t) || t < 0.0) throw InvalidInput("build_optimality_example: bad t");
  ComplexMatrix m = ComplexMatrix::diagonal({1.0, 0.0, delta});
  const ComplexMatrix l = ComplexMatrix::unit(3, 0, 1);
  const ComplexMatrix p = ComplexMatrix::unit(3, 0, 0);
  if (max_abs_entry(l * l) != 0.0 || max_abs_entry(l * p) != 0.0) {
    throw NumericalFailure("build_optimality_example: L^2 = 0 = LP fails");
  }
  // M L = L is what the closed form of the product uses.
  if (max_abs_entry(m * l - l) != 0.0) {
    throw NumericalFailure("build_optimality_example: ML = L fails");
  }
  ExplicitOptions eo;
  eo.require_contraction = false;
  const GeneratorSpec g = make_explicit_generator(l, eo);
  ZenoInstance inst = make_zeno_instance(m, g, t, NormKind::spectral_superop, "optimality");
  if (inst.spectrum.projections.size() != 1 ||
      max_abs_entry(inst.spectrum.projections.front() - p) > 1e-10) {
    throw NumericalFailure("build_optimality_example: classification did not find P = |1><1|");
  }
  ComplexMatrix mn = m;
  for (int n = 1; n <= 8; ++n) {
    if (n > 1) mn = mn * m;
    const double r = operator_norm(mn - p);
    if (std::abs(r - std::pow(delta, n)) > 1e-14) {
      throw NumericalFailure("build_optimality_example: ||M^n - P|| = delta^n fails");
    }
  }
  return inst;
}

ComplexMatrix replacement_superop(const ComplexMatrix& sigma) {
  return vec(sigma) * vec(ComplexMatrix::identity(sigma.rows())).adjoint();
}

ZenoInstance build_depolarizing(double p, const ComplexMatrix& sigma, const GeneratorSpec& g,
                                double t, NormKind kind) {
  if (!(p > 0.5 && p < 1.0)) throw InvalidInput("build_depolarizing: p must lie in (1/2, 1)");
  require_density(sigma, "build_depolarizing");
  const std::size_t d = sigma.rows();
  const std::size_t dd = d * d;
  if (g.superoperator.rows() != dd) {
    throw InvalidInput("build_depolarizing: generator does not act on d x d matrices");
  }
  const ComplexMatrix proj = replacement_superop(sigma);
  const ComplexMatrix id = ComplexMatrix::identity(dd);
  ComplexMatrix m = (1.0 - p) * id;
  m.add_scaled(p, proj);

  ClassifyOptions co;
  co.contraction = ContractionCheck::cptp;
  co.c_tilde_norm = NormKind::spectral_superop;
  co.n_max = 1;
  PeripheralSpectrum s = classify_power_convergence(m, co);
  if (s.projections.size() != 1 || max_abs_entry(s.projections.front() - proj) > 1e-9) {
    throw NumericalFailure("build_depolarizing: peripheral projection is not tr(.) sigma");
  }
  // Exact projection from the closed form; quadrature only confirmed it.
  s.projections.front() = proj;
  s.p_sigma = proj;
  s.delta = 2.0 * (1.0 - p);
  s.c_tilde_norm = kind;

  ZenoInstance inst = make_zeno_instance(m, g, s, t, kind, "depolarizing");
  const ComplexMatrix residual = id - proj;
  inst.spectrum.c_tilde = instance_norm(inst, residual) / 2.0;

  ComplexMatrix mn = m;
  double scale = 1.0;
  for (int n = 1; n <= 4; ++n) {
    if (n > 1) mn = mn * m;
    scale *= 1.0 - p;
    ComplexMatrix diff = mn - proj;
    diff.add_scaled(-scale, residual);
    if (frobenius_norm(diff) > 1e-10) {
      throw NumericalFailure("build_depolarizing: M^n - P = (1-p)^n (id - P) fails");
    }
  }
  if (kind == NormKind::hermitian_1to1_sampled &&
      instance_norm(inst, m - proj) > inst.spectrum.delta * (1.0 + 1e-9)) {
    throw NumericalFailure("build_depolarizing: ||M - P|| exceeds 2(1-p)");
  }
  return inst;
}

ZenoInstance build_random_cptp(std::size_t dim, std::size_t env_dim, std::uint64_t seed,
                               const GeneratorSpec& g, double t, NormKind kind) {
  if (dim < 2 || env_dim < 1) throw InvalidInput("build_random_cptp: need dim >= 2, env_dim >= 1");
  Rng rng(seed);
  const ComplexMatrix m = random_stinespring_channel(dim, env_dim, rng);
  ClassifyOptions co = default_classify_options(kind);
  co.contraction = ContractionCheck::cptp;
  const PeripheralSpectrum s = classify_power_convergence(m, co);
  bool has_one = false;
  for (const cplx& lam : s.eigenvalues) has_one = has_one || std::abs(lam - 1.0) <= 1e-8;
  if (!has_one) throw NumericalFailure("build_random_cptp: eigenvalue 1 missing");
  for (double nn : s.nilpotent_norms) {
    if (nn > 1e-8) {
      throw NumericalFailure("build_random_cptp: peripheral nilpotent part " +
                             std::to_string(nn));
    }
  }
  return make_zeno_instance(m, g, s, t, kind, "random-cptp");
}

std::optional<double> relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  ComplexMatrix r = rho + rho.adjoint();
  r *= 0.5;
  ComplexMatrix s = sigma + sigma.adjoint();
  s *= 0.5;
  const HermitianEigen er = eigh(r);
  const HermitianEigen es = eigh(s);
  double value = 0.0;
  for (double lam : er.values) {
    if (lam > kEntropyFloor) value += lam * std::log(lam);
  }
  const std::size_t d = rho.rows();
  for (std::size_t k = 0; k < d; ++k) {
    // <v_k| rho |v_k>
    cplx w = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        w += std::conj(es.vectors(i, k)) * r(i, j) * es.vectors(j, k);
    const double weight = w.real();
    const double mu = es.values[k];
    if (mu <= kEntropyFloor) {
      if (weight > 1e-12) return std::nullopt;
      continue;
    }
    value -= weight * std::log(mu);
  }
  return std::max(0.0, value);
}

SdpiEstimate build_sdpi_certificate(const ComplexMatrix& m, const ComplexMatrix& p, int states,
                                    std::uint64_t seed) {
  if (!same_shape(m, p) || !m.is_square()) {
    throw InvalidInput("build_sdpi_certificate: m and p must be square of equal size");
  }
  if (states < 1) throw InvalidInput("build_sdpi_certificate: need at least one sample");
  if (frobenius_norm(m * p - p * m) > 1e-9) {
    throw InvalidInput("build_sdpi_certificate: MP = PM fails");
  }
  const std::size_t d = superop_dim(m);
  Rng rng(seed);
  const int mixed = std::max(1, states / 4);
  SdpiEstimate out;
  double max_d = 0.0;
  for (int i = 0; i < states + mixed; ++i) {
    const ComplexMatrix rho = i < states ? random_pure_state(d, rng) : random_density(d, rng);
    const ComplexMatrix prho = apply_superop(p, rho);
    const auto den = relative_entropy(rho, prho);
    if (!den || *den <= 1e-12) {
      ++out.discarded;
      continue;
    }
    const auto num = relative_entropy(apply_superop(m, rho), apply_superop(m, prho));
    if (!num) {
      ++out.discarded;
      continue;
    }
    ++out.used;
    out.delta_hat = std::max(out.delta_hat, *num / *den);
    max_d = std::max(max_d, *den);
  }
  if (out.used == 0) throw EstimationFailure("build_sdpi_certificate: every sample was discarded");
  out.rate = std::sqrt(out.delta_hat);
  out.c_tilde = std::sqrt(2.0) * std::sqrt(max_d);
  return out;
}

ComplexMatrix oscillator_sigma() {
  ComplexMatrix s = ComplexMatrix::zero(3, 3);
  for (std::size_t i = 0; i < 3; ++i) s(i, i) = 1.0 / 3.0;
  s(0, 1) = 0.1;
  s(1, 0) = 0.1;
  return s;
}

ZenoInstance build_truncated_oscillator(std::size_t truncation, const ComplexMatrix& sigma,
                                        double p, double t) {
  if (truncation < 3) throw InvalidInput("build_truncated_oscillator: truncation must be >= 3");
  require_density(sigma, "build_truncated_oscillator");
  if (sigma.rows() > truncation) {
    throw InvalidInput("build_truncated_oscillator: sigma is supported beyond the truncation");
  }
  ComplexMatrix sig = ComplexMatrix::zero(truncation, truncation);
  for (std::size_t i = 0; i < sigma.rows(); ++i)
    for (std::size_t j = 0; j < sigma.cols(); ++j) sig(i, j) = sigma(i, j);
  std::vector<cplx> levels(truncation);
  for (std::size_t k = 0; k < truncation; ++k) levels[k] = static_cast<double>(k) + 0.5;
  const GeneratorSpec g =
      make_hamiltonian_generator(ComplexMatrix::diagonal(levels), Picture::density_matrix);
  ZenoInstance inst = build_depolarizing(p, sig, g, t, NormKind::hermitian_1to1_sampled);
  inst.label = "truncated-oscillator";
  inst.flags.push_back("truncated");

  const ComplexMatrix& proj = inst.spectrum.projections.front();
  const ComplexMatrix q = ComplexMatrix::identity(proj.rows()) - proj;
  const ComplexMatrix e = evolve(g, t);
  if (instance_norm(inst, proj * e * q) > 1e-10) {
    throw NumericalFailure("build_truncated_oscillator: P e^{tL} (1-P) does not vanish");
  }
  const double leak = instance_norm(inst, q * e * proj);
  const double l_sigma = trace_norm(unvec(g.superoperator * vec(sig), truncation));
  if (leak > t * l_sigma * (1.0 + 1e-9) + 1e-12) {
    throw NumericalFailure("build_truncated_oscillator: ||(1-P) e^{tL} P|| exceeds t ||L(sigma)||_1");
  }
  return inst;
}

ZenoInstance random_gapped_instance(const RandomInstanceOptions& opt, std::uint64_t seed) {
  require_random_options(opt, "random_gapped_instance");
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(opt.dim, rng);
  const std::vector<cplx> mu = inner_spectrum(opt.dim - opt.rank, opt.delta, rng);
  ComplexMatrix m = ComplexMatrix::zero(opt.dim, opt.dim);
  for (std::size_t i = 0; i < opt.dim; ++i) {
    const cplx w = i < opt.rank ? cplx(1.0) : mu[i - opt.rank];
    m.add_scaled(w, outer(u, i, i));
  }
  const GeneratorSpec g = make_explicit_generator(random_dissipative(opt.dim, opt.l_norm, rng));
  return make_zeno_instance(m, g, opt.t, NormKind::spectral_superop, "random-gapped");
}

ZenoInstance random_nonnormal_instance(const RandomInstanceOptions& opt, std::uint64_t seed) {
  require_random_options(opt, "random_nonnormal_instance");
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(opt.dim, rng);
  const std::size_t c = opt.dim - opt.rank;
  const std::vector<cplx> mu = inner_spectrum(c, opt.delta, rng);
  // T = D + s N with ||D|| <= delta and s chosen so ||T|| <= 1.
  ComplexMatrix t = ComplexMatrix::diagonal(mu);
  ComplexMatrix strict = ComplexMatrix::zero(c, c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) strict(i, j) = rng.complex_normal();
  const double sn = operator_norm(strict);
  if (sn > 0.0) t.add_scaled((1.0 - opt.delta) / sn, strict);
  ComplexMatrix m = ComplexMatrix::zero(opt.dim, opt.dim);
  for (std::size_t i = 0; i < opt.rank; ++i) m += outer(u, i, i);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (t(i, j) != 0.0) m.add_scaled(t(i, j), outer(u, opt.rank + i, opt.rank + j));
    }
  const GeneratorSpec g = make_explicit_generator(random_dissipative(opt.dim, opt.l_norm, rng));
  return make_zeno_instance(m, g, opt.t, NormKind::spectral_superop, "random-nonnormal");
}

ZenoInstance random_closed_instance(const RandomInstanceOptions& opt, std::uint64_t seed) {
  require_random_options(opt, "random_closed_instance");
  Rng rng(seed);
  const ComplexMatrix p = random_projector(opt.dim, opt.rank, rng);
  ComplexMatrix h = random_hermitian(opt.dim, rng);
  const double hn = operator_norm(h);
  if (hn > 0.0) h *= opt.l_norm / hn;
  const GeneratorSpec g = make_hamiltonian_generator(h, Picture::state_vector);
  return make_zeno_instance(p, g, opt.t, NormKind::spectral_superop, "closed-system");
}

ZenoInstance build_two_peripheral(double delta, double t, std::uint64_t seed) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InvalidInput("build_two_peripheral: delta must lie in [0, 1)");
  }
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(4, rng);
  ComplexMatrix m = outer(u, 0, 0) - outer(u, 1, 1);
  m.add_scaled(std::polar(delta, 2.0 * std::numbers::pi * rng.uniform()), outer(u, 2, 2));
  m.add_scaled(std::polar(0.5 * delta, 2.0 * std::numbers::pi * rng.uniform()), outer(u, 3, 3));
  const GeneratorSpec g = make_explicit_generator(random_dissipative(4, 1.0, rng));
  ZenoInstance inst = make_zeno_instance(m, g, t, NormKind::spectral_superop, "two-peripheral");
  if (inst.spectrum.eigenvalues.size() != 2) {
    throw NumericalFailure("build_two_peripheral: expected two peripheral eigenvalues");
  }
  return inst;
}

std::pair<GeneratorSpec, GeneratorSpec> trotter_qubit_pair(bool commuting, double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw InvalidInput("trotter_qubit_pair: gamma must be finite and >= 0");
  }
  ComplexMatrix sx = ComplexMatrix::zero(2, 2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const ComplexMatrix sz = ComplexMatrix::diagonal({1.0, -1.0});
  GeneratorSpec first = make_hamiltonian_generator(sz, Picture::density_matrix);
  if (!commuting) {
    return {make_hamiltonian_generator(sx, Picture::density_matrix), std::move(first)};
  }
  GeneratorSpec second =
      make_lindblad_generator(ComplexMatrix::zero(2, 2), {std::sqrt(gamma) * sz});
  return {std::move(first), std::move(second)};
}

ErrorSeries synthetic_power_series(double exponent, double scale,
                                   const std::vector<long long>& n_grid) {
  if (!std::isfinite(exponent) || !(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidInput("synthetic_power_series: need finite exponent and scale > 0");
  }
  ErrorSeries s;
  s.t = 1.0;
  s.instance_label = "synthetic-power";
  long long prev = 0;
  for (long long n : n_grid) {
    if (n <= prev) throw InvalidInput("synthetic_power_series: n grid must increase");
    prev = n;
    ErrorEntry e;
    e.n = n;
    e.error = scale * std::pow(static_cast<double>(n), -exponent);
    s.entries.push_back(std::move(e));
  }
  return s;
}

GeneratorSpec random_lindblad(std::size_t d, double h_norm, double gamma, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix h = random_hermitian(d, rng);
  const double hn = operator_norm(h);
  if (hn > 0.0) h *= h_norm / hn;
  ComplexMatrix v = random_gaussian(d, d, rng);
  const double vn = operator_norm(v);
  if (vn > 0.0) v *= std::sqrt(gamma) / vn;
  return make_lindblad_generator(h, {v});
}

namespace {

struct ParamSchema {
  std::string key;
  double fallback;
  bool required;
  bool integer;
  double lo;
  double hi;
  bool lo_open = false;
  bool hi_open = false;
};

struct ScenarioEntry {
  std::string name;
  ScenarioOutput output;
  NormKind norm;
  std::vector<ParamSchema> params;
};

const std::vector<ScenarioEntry>& registry() {
  static const std::vector<ScenarioEntry> entries = {
      {"optimality", ScenarioOutput::zeno_instance, NormKind::spectral_superop,
       {{"delta", 0.5, true, false, 0.0, 1.0, true, true}}},
      {"depolarizing", ScenarioOutput::zeno_instance, NormKind::hermitian_1to1_sampled,
       {{"p", 0.75, true, false, 0.5, 1.0, true, true},
        {"dimension", 2, false, true, 2, 8},
        {"h_norm", 1.0, false, false, 0.0, 1e3},
        {"gamma", 0.5, false, false, 0.0, 1e3}}},
      {"random-cptp", ScenarioOutput::zeno_instance, NormKind::hermitian_1to1_sampled,
       {{"dimension", 3, false, true, 2, 6},
        {"env_dim", 2, false, true, 1, 8},
        {"h_norm", 1.0, false, false, 0.0, 1e3},
        {"gamma", 0.5, false, false, 0.0, 1e3}}},
      {"truncated-oscillator", ScenarioOutput::zeno_instance, NormKind::hermitian_1to1_sampled,
       {{"truncation", 16, false, true, 3, 24}, {"p", 0.75, false, false, 0.5, 1.0, true, true}}},
      {"closed-system", ScenarioOutput::zeno_instance, NormKind::spectral_superop,
       {{"dimension", 4, false, true, 2, 64},
        {"rank", 2, false, true, 1, 63},
        {"h_norm", 1.0, false, false, 0.0, 1e3}}},
      {"random-gapped", ScenarioOutput::zeno_instance, NormKind::spectral_superop,
       {{"dimension", 4, false, true, 2, 64},
        {"rank", 1, false, true, 1, 63},
        {"delta", 0.5, false, false, 0.0, 1.0, false, true},
        {"l_norm", 1.0, false, false, 0.0, 1e3}}},
      {"random-nonnormal", ScenarioOutput::zeno_instance, NormKind::spectral_superop,
       {{"dimension", 4, false, true, 2, 64},
        {"rank", 1, false, true, 1, 63},
        {"delta", 0.5, false, false, 0.0, 1.0, false, true},
        {"l_norm", 1.0, false, false, 0.0, 1e3}}},
      {"two-peripheral", ScenarioOutput::zeno_instance, NormKind::spectral_superop,
       {{"delta", 0.5, false, false, 0.0, 1.0, false, true}}},
      {"trotter-qubit", ScenarioOutput::trotter_pair, NormKind::spectral_superop,
       {{"commuting", 0, false, true, 0, 1}, {"gamma", 0.5, false, false, 0.0, 1e3}}},
      {"synthetic-power", ScenarioOutput::synthetic, NormKind::spectral_superop,
       {{"exponent", 1.0, false, false, -10.0, 10.0}, {"scale", 1.0, false, false, 0.0, 1e12, true, false}}},
  };
  return entries;
}

const ScenarioEntry& lookup(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw InvalidInput("unknown scenario '" + name + "'");
}

double param(const ScenarioSpec& spec, const std::string& key) {
  const ScenarioEntry& e = lookup(spec.name);
  for (const auto& ps : e.params) {
    if (ps.key != key) continue;
    const auto it = spec.parameters.find(key);
    return it == spec.parameters.end() ? ps.fallback : it->second;
  }
  throw InvalidInput("scenario '" + spec.name + "' has no parameter '" + key + "'");
}

std::size_t iparam(const ScenarioSpec& spec, const std::string& key) {
  return static_cast<std::size_t>(param(spec, key));
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.push_back(e.name);
  return names;
}

ScenarioOutput scenario_output(const std::string& name) { return lookup(name).output; }

NormKind default_norm(const std::string& name) { return lookup(name).norm; }

void validate_scenario(const ScenarioSpec& spec) {
  const ScenarioEntry& e = lookup(spec.name);
  std::set<std::string> known;
  for (const auto& ps : e.params) known.insert(ps.key);
  for (const auto& [key, value] : spec.parameters) {
    if (!known.count(key)) {
      throw InvalidInput("scenario '" + spec.name + "': unknown parameter '" + key + "'");
    }
    if (!std::isfinite(value)) {
      throw InvalidInput("scenario '" + spec.name + "': parameter '" + key + "' is not finite");
    }
  }
  for (const auto& ps : e.params) {
    const auto it = spec.parameters.find(ps.key);
    if (it == spec.parameters.end()) {
      if (ps.required) {
        throw InvalidInput("scenario '" + spec.name + "': missing parameter '" + ps.key + "'");
      }
      continue;
    }
    const double v = it->second;
    if (ps.integer && v != std::floor(v)) {
      throw InvalidInput("scenario '" + spec.name + "': parameter '" + ps.key +
                         "' must be an integer");
    }
    const bool above = ps.lo_open ? v > ps.lo : v >= ps.lo;
    const bool below = ps.hi_open ? v < ps.hi : v <= ps.hi;
    const bool inside = above && below;
    if (!inside) {
      throw InvalidInput("scenario '" + spec.name + "': parameter '" + ps.key +
                         "' is out of range");
    }
  }
}

ZenoInstance build_scenario_instance(const ScenarioSpec& spec, double t,
                                     std::optional<NormKind> kind) {
  validate_scenario(spec);
  if (scenario_output(spec.name) != ScenarioOutput::zeno_instance) {
    throw InvalidInput("scenario '" + spec.name + "' does not define a Zeno instance");
  }
  const NormKind nk = kind ? *kind : default_norm(spec.name);
  const std::string& name = spec.name;
  ZenoInstance inst;
  if (name == "optimality") {
    inst = build_optimality_example(param(spec, "delta"), t);
  } else if (name == "depolarizing") {
    const std::size_t d = iparam(spec, "dimension");
    Rng rng(spec.seed);
    const ComplexMatrix sigma = random_density(d, rng);
    const GeneratorSpec g =
        random_lindblad(d, param(spec, "h_norm"), param(spec, "gamma"), rng.next_seed());
    inst = build_depolarizing(param(spec, "p"), sigma, g, t, nk);
  } else if (name == "random-cptp") {
    const std::size_t d = iparam(spec, "dimension");
    Rng rng(spec.seed);
    const std::uint64_t channel_seed = rng.next_seed();
    const GeneratorSpec g =
        random_lindblad(d, param(spec, "h_norm"), param(spec, "gamma"), rng.next_seed());
    inst = build_random_cptp(d, iparam(spec, "env_dim"), channel_seed, g, t, nk);
  } else if (name == "truncated-oscillator") {
    if (nk != NormKind::hermitian_1to1_sampled) {
      throw InvalidInput("truncated-oscillator is defined in the trace norm only");
    }
    inst = build_truncated_oscillator(iparam(spec, "truncation"), oscillator_sigma(),
                                      param(spec, "p"), t);
  } else if (name == "closed-system" || name == "random-gapped" || name == "random-nonnormal") {
    RandomInstanceOptions o;
    o.dim = iparam(spec, "dimension");
    o.rank = iparam(spec, "rank");
    o.t = t;
    if (name == "closed-system") {
      o.l_norm = param(spec, "h_norm");
      inst = random_closed_instance(o, spec.seed);
    } else {
      o.delta = param(spec, "delta");
      o.l_norm = param(spec, "l_norm");
      inst = name == "random-gapped" ? random_gapped_instance(o, spec.seed)
                                     : random_nonnormal_instance(o, spec.seed);
    }
  } else if (name == "two-peripheral") {
    inst = build_two_peripheral(param(spec, "delta"), t, spec.seed);
  }
  if (inst.norm_kind != nk) {
    throw InvalidInput("scenario '" + name + "' acts on vectors; the trace norm needs a channel");
  }
  return inst;
}

std::pair<GeneratorSpec, GeneratorSpec> build_scenario_trotter(const ScenarioSpec& spec) {
  validate_scenario(spec);
  if (scenario_output(spec.name) != ScenarioOutput::trotter_pair) {
    throw InvalidInput("scenario '" + spec.name + "' does not define a generator pair");
  }
  return trotter_qubit_pair(param(spec, "commuting") != 0.0, param(spec, "gamma"));
}

ErrorSeries build_scenario_synthetic(const ScenarioSpec& spec,
                                     const std::vector<long long>& n_grid) {
  validate_scenario(spec);
  if (scenario_output(spec.name) != ScenarioOutput::synthetic) {
    throw InvalidInput("scenario '" + spec.name + "' is not synthetic");
  }
  return synthetic_power_series(param(spec, "exponent"), param(spec, "scale"), n_grid);
}

}  // namespace zeno
