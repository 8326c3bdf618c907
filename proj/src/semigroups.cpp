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

#include "zeno/semigroups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/quantum.hpp"

namespace zeno {

namespace {

ContractivityCertificate certify_spectral(const ComplexMatrix& l) {
  ContractivityCertificate c;
  c.method = "spectral";
  for (double s : kContractivityGrid) {
    c.max_spectral_norm = std::max(c.max_spectral_norm, operator_norm(matrix_exp(s * l)));
  }
  c.passed = c.max_spectral_norm <= 1.0 + kContractivityTol;
  return c;
}

ContractivityCertificate certify_channels(const ComplexMatrix& l) {
  ContractivityCertificate c;
  c.method = "cptp";
  c.min_choi_eigenvalue = INFINITY;
  for (double s : kContractivityGrid) {
    const ComplexMatrix e = matrix_exp(s * l);
    c.max_spectral_norm = std::max(c.max_spectral_norm, operator_norm(e));
    c.max_trace_defect = std::max(c.max_trace_defect, trace_preservation_defect(e));
    c.min_choi_eigenvalue = std::min(c.min_choi_eigenvalue, min_choi_eigenvalue(e));
  }
  c.passed = c.max_trace_defect <= 1e-10 && c.min_choi_eigenvalue >= -1e-10;
  return c;
}

void require_hermitian(const ComplexMatrix& h, const char* op) {
  if (h.empty() || !h.is_square()) throw InvalidInput(std::string(op) + ": H must be square");
  const double defect = hermiticity_defect(h);
  if (defect > 1e-12) {
    throw InvalidInput(std::string(op) + ": H is not Hermitian (defect " +
                       std::to_string(defect) + ")");
  }
}

}  // namespace

GeneratorSpec make_hamiltonian_generator(const ComplexMatrix& h, Picture picture) {
  require_hermitian(h, "make_hamiltonian_generator");
  GeneratorSpec g;
  g.kind = GeneratorKind::hamiltonian;
  g.picture = picture;
  g.hamiltonian = h;
  g.dim = h.rows();
  if (picture == Picture::state_vector) {
    g.superoperator = cplx(0.0, -1.0) * h;
  } else {
    g.superoperator = commutator_superop(h);
  }
  g.certificate = certify_spectral(g.superoperator);
  if (!g.certificate.passed) {
    throw NumericalFailure("make_hamiltonian_generator: unitary evolution failed the "
                           "contractivity certificate");
  }
  return g;
}

GeneratorSpec make_lindblad_generator(const ComplexMatrix& h,
                                      const std::vector<ComplexMatrix>& jumps) {
  require_hermitian(h, "make_lindblad_generator");
  for (const auto& v : jumps) {
    if (!same_shape(v, h)) {
      throw InvalidInput("make_lindblad_generator: jump operator shape " +
                         std::to_string(v.rows()) + "x" + std::to_string(v.cols()) +
                         " does not match H");
    }
  }
  GeneratorSpec g;
  g.kind = GeneratorKind::lindblad;
  g.picture = Picture::density_matrix;
  g.hamiltonian = h;
  g.jump_operators = jumps;
  g.dim = h.rows();
  g.superoperator = commutator_superop(h);
  for (const auto& v : jumps) g.superoperator += dissipator_superop(v);
  g.certificate = certify_channels(g.superoperator);
  if (!g.certificate.passed) {
    throw NumericalFailure("make_lindblad_generator: evolution is not CPTP on the sample grid");
  }
  return g;
}

GeneratorSpec make_explicit_generator(const ComplexMatrix& l, ExplicitOptions opt) {
  if (l.empty() || !l.is_square()) throw InvalidInput("make_explicit_generator: L must be square");
  GeneratorSpec g;
  g.kind = GeneratorKind::explicit_matrix;
  g.picture = opt.channel_semigroup ? Picture::density_matrix : Picture::state_vector;
  g.explicit_matrix = l;
  g.dim = opt.channel_semigroup ? superop_dim(l) : l.rows();
  g.superoperator = l;
  g.certificate = opt.channel_semigroup ? certify_channels(l) : certify_spectral(l);
  if (opt.require_contraction && !g.certificate.passed) {
    throw InvalidInput("make_explicit_generator: not a contraction semigroup (max ||e^{sL}|| = " +
                       std::to_string(g.certificate.max_spectral_norm) + ")");
  }
  return g;
}

ComplexMatrix evolve(const GeneratorSpec& g, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidInput("evolve: t must be finite and >= 0");
  if (t == 0.0) return ComplexMatrix::identity(g.superoperator.rows());
  return matrix_exp(t * g.superoperator);
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw InvalidInput("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double check_integral_equation(const GeneratorSpec& k, const GeneratorSpec& l, double t,
                               int quad_points) {
  if (!same_shape(k.superoperator, l.superoperator)) {
    throw InvalidInput("check_integral_equation: generator dimensions differ");
  }
  if (!(t >= 0.0)) throw InvalidInput("check_integral_equation: t must be >= 0");
  if (quad_points < 1) throw InvalidInput("check_integral_equation: quad_points must be positive");
  const ComplexMatrix& kk = k.superoperator;
  const ComplexMatrix& ll = l.superoperator;
  const ComplexMatrix diff = kk - ll;
  ComplexMatrix residual = evolve(k, t) - evolve(l, t);
  if (t == 0.0) return operator_norm(residual);

  // Panels of 8 Gauss-Legendre nodes when the count allows it.
  const int order = (quad_points % 8 == 0) ? 8 : quad_points;
  const int panels = quad_points / order;
  const QuadratureRule rule = gauss_legendre(order);
  const double h = t / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = p * h;
    for (int q = 0; q < order; ++q) {
      const double s = a + 0.5 * h * (rule.nodes[q] + 1.0);
      const ComplexMatrix integrand = matrix_exp(s * kk) * diff * matrix_exp((t - s) * ll);
      residual.add_scaled(-0.5 * h * rule.weights[q], integrand);
    }
  }
  return operator_norm(residual);
}

PerturbationBoundReport check_perturbation_bound(const GeneratorSpec& l,
                                                 const ComplexMatrix& a, double w,
                                                 double t) {
  if (!same_shape(l.superoperator, a)) {
    throw InvalidInput("check_perturbation_bound: perturbation shape mismatch");
  }
  if (!(t >= 0.0)) throw InvalidInput("check_perturbation_bound: t must be >= 0");
  for (double s : kContractivityGrid) {
    const double norm = operator_norm(matrix_exp(s * l.superoperator));
    if (norm > std::exp(s * w) + kContractivityTol) {
      throw InvalidInput("check_perturbation_bound: ||e^{sL}|| = " + std::to_string(norm) +
                         " exceeds e^{sw} at s = " + std::to_string(s));
    }
  }
  PerturbationBoundReport r;
  r.lhs = operator_norm(matrix_exp(t * (l.superoperator + a)) - matrix_exp(t * l.superoperator));
  r.rhs = std::exp(t * w) * (std::exp(t * operator_norm(a)) - 1.0);
  return r;
}

}  // namespace zeno
