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

#include "test_util.hpp"
#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/quantum.hpp"
#include "zeno/random.hpp"
#include "zeno/semigroups.hpp"

using namespace zeno;
using namespace zeno::testing;

TEST(Generators, HamiltonianPictures) {
  Gen g(1);
  const ComplexMatrix h = random_herm(g, 3);
  const GeneratorSpec sv = make_hamiltonian_generator(h, Picture::state_vector);
  EXPECT_LT(max_diff(sv.superoperator, cplx(0.0, -1.0) * h), 1e-15);
  EXPECT_TRUE(sv.certificate.passed);
  EXPECT_EQ(sv.certificate.method, "spectral");
  const GeneratorSpec dm = make_hamiltonian_generator(h, Picture::density_matrix);
  EXPECT_EQ(dm.superoperator.rows(), 9u);
  // e^{tL} rho = U rho U^H.
  const ComplexMatrix u = taylor_exp(cplx(0.0, -0.7) * h);
  const ComplexMatrix rho = random_herm(g, 3);
  EXPECT_LT(max_diff(apply_superop(evolve(dm, 0.7), rho), u * rho * u.adjoint()), 1e-12);
  EXPECT_THROW(make_hamiltonian_generator(random_matrix(g, 3, 3), Picture::state_vector),
               InvalidInput);
}

TEST(Generators, LindbladIsChannelSemigroup) {
  Gen g(2);
  const ComplexMatrix h = random_herm(g, 3);
  const ComplexMatrix v = random_matrix(g, 3, 3);
  const GeneratorSpec l = make_lindblad_generator(h, {v});
  EXPECT_EQ(l.certificate.method, "cptp");
  EXPECT_TRUE(l.certificate.passed);
  for (double t : {0.01, 0.5, 3.0}) EXPECT_TRUE(is_cptp(evolve(l, t), 1e-9)) << t;
  EXPECT_THROW(make_lindblad_generator(h, {random_matrix(g, 2, 2)}), InvalidInput);
}

TEST(Generators, ExplicitRejectsExpansion) {
  EXPECT_THROW(make_explicit_generator(ComplexMatrix::identity(2)), InvalidInput);
  ExplicitOptions opt;
  opt.require_contraction = false;
  const GeneratorSpec g = make_explicit_generator(ComplexMatrix::identity(2), opt);
  EXPECT_FALSE(g.certificate.passed);
  EXPECT_GT(g.certificate.max_spectral_norm, 1.0);
  Rng rng(4);
  EXPECT_TRUE(make_explicit_generator(random_dissipative(4, 2.0, rng)).certificate.passed);
}

TEST(Evolve, SemigroupProperty) {
  Rng rng(7);
  const GeneratorSpec g = make_explicit_generator(random_dissipative(5, 1.5, rng));
  EXPECT_EQ(max_diff(evolve(g, 0.0), ComplexMatrix::identity(5)), 0.0);
  EXPECT_LT(max_diff(evolve(g, 0.3) * evolve(g, 0.9), evolve(g, 1.2)), 1e-13);
  EXPECT_LT(max_diff(evolve(g, 0.8), taylor_exp(0.8 * g.superoperator)), 1e-12);
  EXPECT_THROW(evolve(g, -1.0), InvalidInput);
}

TEST(Evolve, DerivativeAtZeroIsGenerator) {
  Rng rng(9);
  const GeneratorSpec g = make_explicit_generator(random_dissipative(4, 1.0, rng));
  const double h = 1e-5;
  ComplexMatrix fd = evolve(g, h) - ComplexMatrix::identity(4);
  fd *= 1.0 / h;
  EXPECT_LT(max_diff(fd, g.superoperator), 1e-5);
}

TEST(Quadrature, GaussLegendreExactForPolynomials) {
  for (int n : {1, 2, 5, 8, 16}) {
    const QuadratureRule r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-14) << n;
    // Degree 2n - 1 is integrated exactly.
    const int deg = 2 * n - 1;
    double integral = 0.0;
    for (int i = 0; i < n; ++i) integral += r.weights[i] * std::pow(r.nodes[i], deg - 1);
    const double exact = ((deg - 1) % 2 == 0) ? 2.0 / deg : 0.0;
    EXPECT_NEAR(integral, exact, 1e-13) << n;
  }
  EXPECT_THROW(gauss_legendre(0), InvalidInput);
}

TEST(Identities, DuhamelIntegralEquation) {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const GeneratorSpec k = make_explicit_generator(random_dissipative(4, 1.0, rng));
    const GeneratorSpec l = make_explicit_generator(random_dissipative(4, 2.0, rng));
    EXPECT_LT(check_integral_equation(k, l, 1.3), 1e-12) << trial;
  }
  const GeneratorSpec a = make_explicit_generator(random_dissipative(3, 1.0, rng));
  EXPECT_EQ(check_integral_equation(a, a, 0.0), 0.0);
}

TEST(Identities, PerturbationBoundHolds) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const GeneratorSpec l = make_explicit_generator(random_dissipative(4, 1.0, rng));
    const ComplexMatrix a = random_contraction(4, 0.5, rng);
    const PerturbationBoundReport r = check_perturbation_bound(l, a, 0.0, 0.9);
    EXPECT_LE(r.lhs, r.rhs + 1e-12) << trial;
  }
  // An expanding generator violates the w = 0 growth hypothesis.
  ExplicitOptions opt;
  opt.require_contraction = false;
  const GeneratorSpec bad = make_explicit_generator(ComplexMatrix::identity(2), opt);
  EXPECT_THROW(check_perturbation_bound(bad, ComplexMatrix::zero(2, 2), 0.0, 1.0), InvalidInput);
  EXPECT_NO_THROW(check_perturbation_bound(bad, ComplexMatrix::zero(2, 2), 1.0, 1.0));
}
