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

#include "zeno/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/parallel.hpp"

namespace zeno {

namespace {

std::string describe(const Contour& c) {
  std::ostringstream os;
  os.precision(6);
  os << "circle(center=" << c.center.real() << (c.center.imag() < 0 ? "" : "+")
     << c.center.imag() << "i, radius=" << c.radius << ")";
  return os.str();
}

cplx node_at(const Contour& c, long long k, long long n) {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return c.center + std::polar(c.radius, theta);
}

void require_separated(const ComplexMatrix& a, const Contour& c, const QuadratureOptions& opt) {
  for (const cplx& lam : eigenvalues(a)) {
    const double gap = std::abs(std::abs(lam - c.center) - c.radius);
    if (gap <= opt.separation * c.radius) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << lam.real() << (lam.imag() < 0 ? "" : "+") << lam.imag()
         << "i lies on " << describe(c);
      throw ContourThroughSpectrum(os.str());
    }
  }
}

ComplexMatrix resolvent_on_contour(const ComplexMatrix& a, cplx z, const Contour& c) {
  try {
    return resolvent(a, z);
  } catch (const ResolventSingular& e) {
    throw ContourThroughSpectrum(std::string(e.what()) + " on " + describe(c));
  }
}

}  // namespace

void validate_contour(const Contour& c) {
  if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
    throw InvalidInput("contour radius must be positive and finite");
  }
  if (!std::isfinite(c.center.real()) || !std::isfinite(c.center.imag())) {
    throw InvalidInput("contour center must be finite");
  }
  if (c.nodes < 8 || (c.nodes & (c.nodes - 1)) != 0) {
    throw InvalidInput("contour nodes must be a power of two >= 8, got " +
                       std::to_string(c.nodes));
  }
}

std::vector<cplx> contour_nodes(const Contour& c) {
  validate_contour(c);
  std::vector<cplx> zs(static_cast<std::size_t>(c.nodes));
  for (int k = 0; k < c.nodes; ++k) zs[static_cast<std::size_t>(k)] = node_at(c, k, c.nodes);
  return zs;
}

ContourIntegral integrate_contour(const std::function<ComplexMatrix(cplx)>& f, const Contour& c,
                                  const QuadratureOptions& opt) {
  validate_contour(c);
  // Sum of f(z_k) (z_k - center) over the given node indices of an n-point rule.
  auto partial_sum = [&](long long n, long long first, long long stride) {
    const long long count = (n - first + stride - 1) / stride;
    std::vector<ComplexMatrix> terms(static_cast<std::size_t>(count));
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
      const cplx z = node_at(c, first + static_cast<long long>(i) * stride, n);
      ComplexMatrix term = f(z);
      term *= (z - c.center);
      terms[i] = std::move(term);
    });
    ComplexMatrix sum = std::move(terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i) sum += terms[i];
    return sum;
  };

  long long n = c.nodes;
  ComplexMatrix total = partial_sum(n, 0, 1);
  ComplexMatrix value = total;
  value *= 1.0 / static_cast<double>(n);
  for (;;) {
    if (2 * n > opt.max_nodes) {
      throw QuadratureFailure("contour quadrature did not converge within " +
                              std::to_string(opt.max_nodes) + " nodes on " + describe(c));
    }
    // The odd nodes of the 2n-point rule are the new ones.
    total += partial_sum(2 * n, 1, 2);
    n *= 2;
    ComplexMatrix next = total;
    next *= 1.0 / static_cast<double>(n);
    const double change = frobenius_norm(next - value);
    const double scale = std::max(1.0, frobenius_norm(next));
    value = std::move(next);
    if (change <= opt.convergence_tol * scale) break;
  }
  return {std::move(value), static_cast<int>(n)};
}

ComplexMatrix spectral_projection(const ComplexMatrix& a, const Contour& c,
                                  const QuadratureOptions& opt) {
  if (a.empty() || !a.is_square()) throw InvalidInput("spectral_projection: a must be square");
  validate_contour(c);
  require_separated(a, c, opt);
  ComplexMatrix p =
      integrate_contour([&](cplx z) { return resolvent_on_contour(a, z, c); }, c, opt).value;
  const double pn = frobenius_norm(p);
  const double idem = frobenius_norm(p * p - p);
  const double comm = frobenius_norm(p * a - a * p);
  if (idem > opt.check_tol * std::max(1.0, pn * pn) ||
      comm > opt.check_tol * std::max(1.0, pn * frobenius_norm(a))) {
    throw QuadratureFailure("spectral_projection: result fails P^2 = P (" + std::to_string(idem) +
                            ") or PA = AP (" + std::to_string(comm) + ") on " + describe(c));
  }
  return p;
}

ComplexMatrix quasinilpotent(const ComplexMatrix& a, cplx lambda, const Contour& c,
                             const QuadratureOptions& opt) {
  if (a.empty() || !a.is_square()) throw InvalidInput("quasinilpotent: a must be square");
  validate_contour(c);
  require_separated(a, c, opt);
  return integrate_contour(
             [&](cplx z) {
               ComplexMatrix r = resolvent_on_contour(a, z, c);
               r *= (z - lambda);
               return r;
             },
             c, opt)
      .value;
}

std::vector<double> power_residuals(const ComplexMatrix& m, const PeripheralSpectrum& s,
                                    int n_max, NormKind kind, const SampledNormOptions& sampled) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(0, n_max)));
  ComplexMatrix mp = m;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) mp = mp * m;
    ComplexMatrix diff = mp;
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      diff.add_scaled(-std::pow(s.eigenvalues[j], n), s.projections[j]);
    }
    out.push_back(induced_norm(diff, kind, sampled));
  }
  return out;
}

PeripheralSpectrum classify_power_convergence(const ComplexMatrix& m, const ClassifyOptions& opt) {
  if (m.empty() || !m.is_square()) throw InvalidInput("classify_power_convergence: m must be square");
  if (!(opt.peripheral_tol > 0.0) || opt.n_max < 1) {
    throw InvalidInput("classify_power_convergence: bad options");
  }
  switch (opt.contraction) {
    case ContractionCheck::spectral_norm: {
      const double norm = operator_norm(m);
      if (norm > 1.0 + 1e-9) {
        throw InvalidInput("classify_power_convergence: ||m|| = " + std::to_string(norm) +
                           " exceeds 1");
      }
      break;
    }
    case ContractionCheck::cptp:
      if (!is_cptp(m, 1e-9)) throw InvalidInput("classify_power_convergence: m is not CPTP");
      break;
    case ContractionCheck::none:
      break;
  }

  const std::vector<cplx> ev = eigenvalues(m);
  std::vector<std::vector<cplx>> clusters;
  double max_inner = 0.0;
  for (const cplx& lam : ev) {
    if (std::abs(lam) < 1.0 - opt.peripheral_tol) {
      max_inner = std::max(max_inner, std::abs(lam));
      continue;
    }
    bool placed = false;
    for (auto& cl : clusters) {
      for (const cplx& mu : cl) {
        if (std::abs(lam - mu) <= opt.peripheral_tol) {
          cl.push_back(lam);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) clusters.push_back({lam});
  }
  if (clusters.empty()) {
    throw NotPowerConvergent("classify_power_convergence: no peripheral eigenvalues");
  }

  PeripheralSpectrum s;
  s.delta = max_inner + 1e-12;
  if (!(s.delta < 1.0 - 1e-10)) {
    throw NotPowerConvergent("classify_power_convergence: spectral gap closes (delta = " +
                             std::to_string(s.delta) + ")");
  }
  for (const auto& cl : clusters) {
    cplx mean = 0.0;
    for (const cplx& z : cl) mean += z;
    s.eigenvalues.push_back(mean / static_cast<double>(cl.size()));
  }
  auto arg_key = [](cplx z) {
    double a = std::arg(z);
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
  };
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [&](cplx x, cplx y) { return arg_key(x) < arg_key(y); });

  const std::size_t big_j = s.eigenvalues.size();
  for (std::size_t j = 0; j < big_j; ++j) {
    double r = (1.0 - s.delta) / 2.0;
    if (big_j > 1) {
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < big_j; ++i) {
        if (i != j) gap = std::min(gap, std::abs(s.eigenvalues[i] - s.eigenvalues[j]));
      }
      r = std::min(gap / 3.0, r);
    }
    Contour c{s.eigenvalues[j], r, 64};
    ComplexMatrix pj = spectral_projection(m, c, opt.quadrature);
    // Same as the contour integral of (z - lambda) R(z), without a second
    // pass of resolvent solves.
    ComplexMatrix nj = m * pj;
    nj.add_scaled(-s.eigenvalues[j], pj);
    const double nn = operator_norm(nj);
    if (nn > kNilpotentLimit) {
      throw NotPowerConvergent("classify_power_convergence: peripheral eigenvalue has a "
                               "nilpotent part of norm " + std::to_string(nn));
    }
    s.nilpotent_norms.push_back(nn);
    s.projections.push_back(std::move(pj));
    s.contours.push_back(c);
  }

  s.p_sigma = ComplexMatrix::zero(m.rows(), m.cols());
  for (const auto& p : s.projections) s.p_sigma += p;
  for (std::size_t j = 0; j < big_j; ++j)
    for (std::size_t k = 0; k < big_j; ++k) {
      ComplexMatrix prod = s.projections[j] * s.projections[k];
      if (j == k) prod -= s.projections[j];
      const double scale = std::max(1.0, frobenius_norm(s.projections[j]) *
                                             frobenius_norm(s.projections[k]));
      if (frobenius_norm(prod) > 1e-8 * scale) {
        throw NumericalFailure("classify_power_convergence: peripheral projections are not "
                               "mutually orthogonal idempotents");
      }
    }

  s.c_tilde_norm = opt.c_tilde_norm;
  const std::vector<double> res = power_residuals(m, s, opt.n_max, opt.c_tilde_norm, opt.sampled);
  s.c_tilde = 0.0;
  double dn = 1.0;
  for (int n = 1; n <= opt.n_max; ++n) {
    dn *= s.delta;
    if (dn < kPowerResidualFloor) break;
    s.c_tilde = std::max(s.c_tilde, res[static_cast<std::size_t>(n - 1)] / dn);
  }
  return s;
}

PerturbationData semicontinuity_epsilon(const ComplexMatrix& m0, const Contour& c, double b) {
  if (!(b >= 0.0)) throw InvalidInput("semicontinuity_epsilon: b must be >= 0");
  PerturbationData out;
  out.b = b;
  out.curve_length = 2.0 * std::numbers::pi * c.radius;
  const std::vector<cplx> zs = contour_nodes(c);
  std::vector<double> norms(zs.size());
  parallel_for(zs.size(), [&](std::size_t k) {
    norms[k] = operator_norm(resolvent_on_contour(m0, zs[k], c));
  });
  double max_z2 = 0.0;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    out.resolvent_sup = std::max(out.resolvent_sup, norms[k]);
    max_z2 = std::max(max_z2, std::norm(zs[k]));
  }
  const double rr = out.resolvent_sup;
  out.d = rr * (2.0 + 2.0 * max_z2) / (1.0 + 2.0 * max_z2);
  if (b == 0.0) {
    out.epsilon = std::numeric_limits<double>::infinity();
  } else {
    out.epsilon = (1.0 / (2.0 * b)) * (1.0 / (1.0 + max_z2)) / std::sqrt(1.0 + rr * rr);
  }
  return out;
}

ComplexMatrix perturbed_projection(const ComplexMatrix& a, const MatrixPath& b_map, double t,
                                   const Contour& c, const QuadratureOptions& opt) {
  if (!(t >= 0.0)) throw InvalidInput("perturbed_projection: t must be >= 0");
  if (t == 0.0) return spectral_projection(a, c, opt);
  const ComplexMatrix bt = b_map(t);
  if (!same_shape(bt, a)) throw InvalidInput("perturbed_projection: B(t) shape mismatch");
  return spectral_projection(a + t * bt, c, opt);
}

ComplexMatrix projection_derivative(const ComplexMatrix& a, const ComplexMatrix& b0,
                                    const Contour& c, const QuadratureOptions& opt) {
  if (!same_shape(a, b0)) throw InvalidInput("projection_derivative: shape mismatch");
  validate_contour(c);
  require_separated(a, c, opt);
  return integrate_contour(
             [&](cplx z) {
               const ComplexMatrix r = resolvent_on_contour(a, z, c);
               return r * b0 * r;
             },
             c, opt)
      .value;
}

PerturbedProjectionCheck check_perturbed_projection(const ComplexMatrix& a,
                                                    const MatrixPath& b_map, double b_sup,
                                                    double t, const Contour& c) {
  PerturbedProjectionCheck out;
  out.data = semicontinuity_epsilon(a, c, b_sup);
  const ComplexMatrix p0 = spectral_projection(a, c);
  const ComplexMatrix pt = perturbed_projection(a, b_map, t, c);
  const ComplexMatrix b0 = b_map(0.0);
  const ComplexMatrix bt = b_map(t);
  const ComplexMatrix pd = projection_derivative(a, b0, c);
  const double rr = out.data.resolvent_sup;
  const double len = out.data.curve_length / (2.0 * std::numbers::pi);
  std::ostringstream w;
  w.precision(6);
  w << "dim=" << a.rows() << " t=" << t << " b=" << b_sup << " " << describe(c);
  out.zeroth_order = make_report(operator_norm(pt - p0), t * rr * b_sup * out.data.d * len,
                                 "zeroth-order " + w.str());
  ComplexMatrix first = pt - p0;
  first.add_scaled(-t, pd);
  out.first_order =
      make_report(operator_norm(first),
                  t * rr * rr * len * (t * b_sup * b_sup * out.data.d + operator_norm(bt - b0)),
                  "first-order " + w.str());
  out.norm_bound = make_report(operator_norm(pt), out.data.d * len, "norm " + w.str());
  out.idempotence_defect = operator_norm(pt * pt - pt);
  return out;
}

}  // namespace zeno
