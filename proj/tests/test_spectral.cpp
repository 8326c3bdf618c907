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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/quantum.hpp"
#include "zeno/random.hpp"
#include "zeno/spectral.hpp"

using namespace zeno;
using namespace zeno::testing;

namespace {

// S diag(lambda) S^{-1} with a well-conditioned S.
struct Similar {
  ComplexMatrix a, s, s_inv;
};

Similar similar_to(const std::vector<cplx>& lambda, Gen& g) {
  const std::size_t d = lambda.size();
  ComplexMatrix p = random_matrix(g, d, d);
  p *= 0.4 / power_norm(p);
  Similar out;
  out.s = ComplexMatrix::identity(d) + p;
  out.s_inv = inverse(out.s);
  out.a = out.s * ComplexMatrix::diagonal(lambda) * out.s_inv;
  return out;
}

}  // namespace

TEST(Contour, Validation) {
  EXPECT_THROW(validate_contour({0.0, 0.0, 64}), InvalidInput);
  EXPECT_THROW(validate_contour({0.0, 1.0, 48}), InvalidInput);
  EXPECT_THROW(validate_contour({0.0, 1.0, 4}), InvalidInput);
  EXPECT_NO_THROW(validate_contour({0.0, 1.0, 8}));
  const auto nodes = contour_nodes({cplx(1.0, 1.0), 2.0, 8});
  ASSERT_EQ(nodes.size(), 8u);
  EXPECT_NEAR(std::abs(nodes[2] - cplx(1.0, 3.0)), 0.0, 1e-15);
}

TEST(Projection, DiagonalExamples) {
  const ComplexMatrix a = ComplexMatrix::diagonal({1.0, 0.5});
  EXPECT_LT(max_diff(spectral_projection(a, {1.0, 0.2, 64}), ComplexMatrix::diagonal({1.0, 0.0})),
            1e-12);
  EXPECT_LT(max_diff(spectral_projection(ComplexMatrix::identity(3), {1.0, 0.5, 64}),
                     ComplexMatrix::identity(3)),
            1e-12);
}

TEST(Projection, MatchesEigendecompositionClustered) {
  Gen g(101);
  for (int trial = 0; trial < 10; ++trial) {
    // Two clusters of three eigenvalues each.
    std::vector<cplx> lambda;
    for (int k = 0; k < 3; ++k) lambda.push_back(cplx(1.0, 0.0) + 0.05 * g.complex());
    for (int k = 0; k < 3; ++k) lambda.push_back(cplx(-0.5, 0.5) + 0.05 * g.complex());
    const Similar m = similar_to(lambda, g);
    ComplexMatrix mask = ComplexMatrix::zero(6, 6);
    for (int k = 0; k < 3; ++k) mask(k, k) = 1.0;
    const ComplexMatrix exact = m.s * mask * m.s_inv;
    const ComplexMatrix p = spectral_projection(m.a, {1.0, 0.4, 64});
    EXPECT_LT(max_diff(p, exact), 1e-10) << trial;
    EXPECT_LT(operator_norm(p * p - p), 1e-9);
    EXPECT_LT(operator_norm(p * m.a - m.a * p), 1e-9);
  }
}

TEST(Projection, PartitionSumsToIdentity) {
  Gen g(103);
  const std::vector<cplx> lambda = {0.0, 1.0, cplx(0.0, 1.0), cplx(-1.0, -1.0)};
  const Similar m = similar_to(lambda, g);
  ComplexMatrix sum = ComplexMatrix::zero(4, 4);
  for (cplx z : lambda) sum += spectral_projection(m.a, {z, 0.4, 64});
  EXPECT_LT(max_diff(sum, ComplexMatrix::identity(4)), 1e-9);
}

TEST(Projection, ContourThroughSpectrum) {
  const ComplexMatrix a = ComplexMatrix::diagonal({1.0, 0.5});
  EXPECT_THROW(spectral_projection(a, {0.5, 0.5, 64}), ContourThroughSpectrum);
}

TEST(Projection, QuadratureCapFailure) {
  // An eigenvalue just off the circle needs far more nodes than the cap.
  const ComplexMatrix a = ComplexMatrix::diagonal({1.0 + 1e-7, 0.0});
  QuadratureOptions opt;
  opt.max_nodes = 128;
  EXPECT_THROW(spectral_projection(a, {0.0, 1.0, 64}, opt), QuadratureFailure);
}

TEST(Projection, TrapezoidConvergesGeometrically) {
  const ComplexMatrix a = ComplexMatrix::diagonal({0.3, 1.6});
  const ComplexMatrix exact = ComplexMatrix::diagonal({1.0, 0.0});
  QuadratureOptions opt;
  opt.convergence_tol = 1e300;  // single pass at the requested node count
  const auto r = [&](cplx z) { return resolvent(a, z); };
  double prev = 1.0;
  for (int nodes : {8, 16, 32}) {
    const double err = max_diff(integrate_contour(r, {0.0, 1.0, nodes}, opt).value, exact);
    if (err > 1e-12) {
      EXPECT_LT(err, 0.5 * prev) << nodes;
    }
    prev = err;
  }
}

TEST(Quasinilpotent, SemisimpleIsZero) {
  const ComplexMatrix a = ComplexMatrix::diagonal({2.0, 3.0});
  EXPECT_LT(operator_norm(quasinilpotent(a, 2.0, {2.0, 0.3, 64})), 1e-12);
}

TEST(Quasinilpotent, JordanBlock) {
  const cplx lambda(0.3, -0.2);
  const ComplexMatrix a(2, 2, {lambda, 1.0, 0.0, lambda});
  const ComplexMatrix n = quasinilpotent(a, lambda, {lambda, 0.5, 64});
  EXPECT_LT(max_diff(n, ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})), 1e-12);
}

TEST(Quasinilpotent, ContourRouteMatchesAlgebraicRoute) {
  // AP = lambda P + N, so N can also be read off as (A - lambda) P.
  Gen g(107);
  for (int trial = 0; trial < 5; ++trial) {
    const cplx lambda = g.complex();
    ComplexMatrix j = ComplexMatrix::diagonal({lambda, lambda, lambda, lambda + 3.0});
    j(0, 1) = 1.0;
    j(1, 2) = g.uniform(0.5, 2.0);
    const ComplexMatrix u = qr_q(random_matrix(g, 4, 4));
    const ComplexMatrix a = u * j * u.adjoint();
    const Contour c{lambda, 1.0, 64};
    const ComplexMatrix p = spectral_projection(a, c);
    ComplexMatrix alg = a * p;
    alg.add_scaled(-lambda, p);
    EXPECT_LT(max_diff(quasinilpotent(a, lambda, c), alg), 1e-11) << trial;
  }
}

TEST(Classify, DiagonalExample) {
  const PeripheralSpectrum s = classify_power_convergence(ComplexMatrix::diagonal({1.0, 0.3, 0.3}));
  ASSERT_EQ(s.eigenvalues.size(), 1u);
  EXPECT_NEAR(std::abs(s.eigenvalues[0] - 1.0), 0.0, 1e-12);
  EXPECT_LT(max_diff(s.projections[0], ComplexMatrix::diagonal({1.0, 0.0, 0.0})), 1e-12);
  EXPECT_NEAR(s.delta, 0.3, 1e-11);
  EXPECT_LE(s.c_tilde, 1.0 + 1e-9);
}

TEST(Classify, OptimalityMatrix) {
  const double delta = 0.5;
  const ComplexMatrix m = ComplexMatrix::diagonal({1.0, 0.0, delta});
  const PeripheralSpectrum s = classify_power_convergence(m);
  ASSERT_EQ(s.eigenvalues.size(), 1u);
  EXPECT_LT(max_diff(s.projections[0], ComplexMatrix::unit(3, 0, 0)), 1e-12);
  EXPECT_NEAR(s.delta, delta, 1e-11);
}

TEST(Classify, RejectsNilpotentPeripheral) {
  ComplexMatrix m = ComplexMatrix::diagonal({1.0, 1.0, 0.2});
  m(0, 1) = 1.0;  // Jordan block at 1; not a contraction either
  ClassifyOptions opt;
  opt.contraction = ContractionCheck::none;
  EXPECT_THROW(classify_power_convergence(m, opt), NotPowerConvergent);
}

TEST(Classify, RejectsExpansion) {
  EXPECT_THROW(classify_power_convergence(ComplexMatrix::diagonal({1.5, 0.2})), InvalidInput);
}

TEST(Classify, RandomChannelPowerBound) {
  Rng rng(5);
  const ComplexMatrix m = random_stinespring_channel(5, 2, rng);
  ClassifyOptions opt;
  opt.contraction = ContractionCheck::cptp;
  const PeripheralSpectrum s = classify_power_convergence(m, opt);
  ASSERT_FALSE(s.eigenvalues.empty());
  bool has_one = false;
  for (cplx z : s.eigenvalues) has_one = has_one || std::abs(z - 1.0) < 1e-8;
  EXPECT_TRUE(has_one);
  for (double nn : s.nilpotent_norms) EXPECT_LE(nn, 1e-8);
  for (std::size_t j = 0; j < s.projections.size(); ++j)
    for (std::size_t k = 0; k < s.projections.size(); ++k) {
      const ComplexMatrix prod = s.projections[j] * s.projections[k];
      EXPECT_LT(operator_norm(j == k ? prod - s.projections[j] : prod), 1e-8);
    }
  // Direct power sweep against c_tilde delta^n, independent of the classifier's own loop.
  ComplexMatrix power = ComplexMatrix::identity(m.rows());
  for (int n = 1; n <= 128; ++n) {
    power = naive_multiply(power, m);
    ComplexMatrix limit = ComplexMatrix::zero(m.rows(), m.cols());
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j)
      limit.add_scaled(std::pow(s.eigenvalues[j], n), s.projections[j]);
    EXPECT_LE(operator_norm(power - limit), s.c_tilde * std::pow(s.delta, n) + 1e-9) << n;
  }
}

TEST(Classify, ReconstructionResidualHasSmallSpectrum) {
  Rng rng(6);
  const ComplexMatrix m = random_stinespring_channel(3, 2, rng);
  ClassifyOptions opt;
  opt.contraction = ContractionCheck::cptp;
  const PeripheralSpectrum s = classify_power_convergence(m, opt);
  ComplexMatrix residual = m;
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) residual.add_scaled(-s.eigenvalues[j], s.projections[j]);
  for (cplx z : eigenvalues(residual)) EXPECT_LE(std::abs(z), s.delta + 1e-8);
}

TEST(Semicontinuity, HandComputedExample) {
  const PerturbationData d = semicontinuity_epsilon(ComplexMatrix::zero(2, 2), {0.0, 0.5, 64}, 1.0);
  EXPECT_NEAR(d.resolvent_sup, 2.0, 1e-12);
  EXPECT_NEAR(d.epsilon, 0.4 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(d.curve_length, std::numbers::pi, 1e-15);
  EXPECT_TRUE(std::isinf(semicontinuity_epsilon(ComplexMatrix::zero(2, 2), {0.0, 0.5, 64}, 0.0).epsilon));
}

TEST(Semicontinuity, MonotoneInB) {
  Gen g(109);
  const Similar m = similar_to({0.0, 2.0, cplx(1.0, 1.5)}, g);
  double prev = std::numeric_limits<double>::infinity();
  for (double b : {0.1, 0.5, 1.0, 5.0, 50.0}) {
    const double e = semicontinuity_epsilon(m.a, {0.0, 0.6, 64}, b).epsilon;
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(Semicontinuity, PerturbationsKeepSeparation) {
  Gen g(113);
  const Similar m = similar_to({0.0, 2.0, cplx(1.0, 1.5)}, g);
  const Contour c{0.0, 0.6, 64};
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix b = random_matrix(g, 3, 3);
    b *= 1.0 / power_norm(b);
    const double eps = semicontinuity_epsilon(m.a, c, 1.0).epsilon;
    const ComplexMatrix mt = m.a + g.uniform(0.0, eps) * b;
    for (cplx z : contour_nodes(c)) {
      const ComplexMatrix shifted = z * ComplexMatrix::identity(3) - mt;
      const auto sv = singular_values(shifted);
      EXPECT_LT(sv.front() / sv.back(), 1e12);
    }
    // Separation in the plainest sense: no eigenvalue crosses the circle.
    int inside = 0;
    for (cplx z : eigenvalues(mt)) inside += std::abs(z) < 0.6;
    EXPECT_EQ(inside, 1);
  }
}

TEST(Perturbed, ZeroTimeIsSpectralProjection) {
  Gen g(127);
  const Similar m = similar_to({0.0, 2.0, cplx(1.0, 1.5)}, g);
  const Contour c{0.0, 0.6, 64};
  const ComplexMatrix b = random_matrix(g, 3, 3);
  EXPECT_LT(max_diff(perturbed_projection(m.a, [&](double) { return b; }, 0.0, c),
                     spectral_projection(m.a, c)),
            1e-15);
}

TEST(Perturbed, ApproximationBoundsHold) {
  Gen g(131);
  for (int trial = 0; trial < 20; ++trial) {
    const Similar m = similar_to({0.0, 2.0, cplx(1.0, 1.5), cplx(-1.5, 0.5)}, g);
    const Contour c{0.0, 0.6, 64};
    ComplexMatrix b0 = random_matrix(g, 4, 4);
    ComplexMatrix b1 = random_matrix(g, 4, 4);
    b0 *= 1.0 / power_norm(b0);
    b1 *= 0.5 / power_norm(b1);
    MatrixPath b_map = [&](double t) { return b0 + (std::sin(t) / (1.0 + t)) * b1; };
    const double b_sup = 1.5;
    const double eps = semicontinuity_epsilon(m.a, c, b_sup).epsilon;
    const double t = g.uniform(0.0, 1.0) * eps;
    const PerturbedProjectionCheck chk = check_perturbed_projection(m.a, b_map, b_sup, t, c);
    EXPECT_GE(chk.zeroth_order.slack, -1e-8) << chk.zeroth_order.witness;
    EXPECT_GE(chk.first_order.slack, -1e-8) << chk.first_order.witness;
    EXPECT_GE(chk.norm_bound.slack, -1e-8);
    EXPECT_LT(chk.idempotence_defect, 1e-9);
  }
}

TEST(Perturbed, DerivativeMatchesFiniteDifference) {
  Gen g(137);
  const Similar m = similar_to({0.0, 2.0, cplx(1.0, 1.5)}, g);
  const Contour c{0.0, 0.6, 64};
  const ComplexMatrix b = random_matrix(g, 3, 3);
  const double h = 1e-6;
  ComplexMatrix fd = spectral_projection(m.a + h * b, c) - spectral_projection(m.a - h * b, c);
  fd *= 1.0 / (2.0 * h);
  EXPECT_LT(max_diff(projection_derivative(m.a, b, c), fd), 1e-7);
}
