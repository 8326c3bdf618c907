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

#include <algorithm>
#include <cmath>

#include "test_util.hpp"
#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/random.hpp"
#include "zeno/report.hpp"
#include "zeno/scenarios.hpp"
#include "zeno/zeno.hpp"

using namespace zeno;
using namespace zeno::testing;

namespace {

ComplexMatrix unit(std::size_t d, std::size_t i, std::size_t j) {
  ComplexMatrix e = ComplexMatrix::zero(d, d);
  e(i, j) = 1.0;
  return e;
}

std::vector<long long> range(long long lo, long long hi) {
  std::vector<long long> out;
  for (long long n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

const std::vector<long long> kPow2 = {16, 32, 64, 128, 256, 512, 1024};

ZenoInstance zero_generator_instance(const ComplexMatrix& m, double t) {
  const std::size_t d = m.rows();
  return make_zeno_instance(m, make_explicit_generator(ComplexMatrix::zero(d, d)), t);
}

}  // namespace

TEST(Optimality, ProductMatchesClosedForm) {
  for (double delta : {0.3, 0.5, 0.9})
    for (double t : {0.5, 1.0, 2.0}) {
      const ZenoInstance inst = build_optimality_example(delta, t);
      for (long long n = 1; n <= 64; ++n) {
        ComplexMatrix expect = unit(3, 0, 0) + (t / static_cast<double>(n)) * unit(3, 0, 1);
        expect.add_scaled(std::pow(delta, static_cast<double>(n)), unit(3, 2, 2));
        EXPECT_LT(max_diff(zeno_product(inst, n), expect), 1e-12) << delta << " " << t << " " << n;
      }
      EXPECT_LT(max_diff(zeno_limit(inst, 5), unit(3, 0, 0)), 1e-14);
    }
}

TEST(Optimality, ErrorIsExactlyTheMaximum) {
  for (double delta : {0.3, 0.5, 0.9})
    for (double t : {0.5, 1.0, 2.0}) {
      const ZenoInstance inst = build_optimality_example(delta, t);
      const ErrorSeries s = zeno_error_series(inst, range(1, 64));
      for (const ErrorEntry& e : s.entries) {
        const double expect = std::max(t / static_cast<double>(e.n), std::pow(delta, e.n));
        EXPECT_NEAR(e.error, expect, 1e-12) << delta << " " << t << " " << e.n;
      }
    }
}

TEST(Optimality, FitInTheOneOverNRegime) {
  const ZenoInstance inst = build_optimality_example(0.5, 1.0);
  const RateFit fit = rate_fit(zeno_error_series(inst, range(8, 64)), {8, 64});
  EXPECT_NEAR(fit.slope, -1.0, 1e-6);
}

TEST(Optimality, CarriesNonContractiveFlag) {
  const ZenoInstance inst = build_optimality_example(0.5, 1.0);
  EXPECT_NE(std::find(inst.flags.begin(), inst.flags.end(), "non-contractive-generator"),
            inst.flags.end());
}

TEST(Product, IdentityAndZeroGenerator) {
  const ZenoInstance inst = zero_generator_instance(ComplexMatrix::identity(3), 1.0);
  for (long long n : {1LL, 2LL, 3LL, 64LL, 1000LL})
    EXPECT_LT(max_diff(zeno_product(inst, n), ComplexMatrix::identity(3)), 1e-15) << n;
}

TEST(Product, MatchesNaiveLoop) {
  Gen g(3);
  for (int trial = 0; trial < 10; ++trial) {
    RandomInstanceOptions opt;
    opt.dim = g.integer(2, 6);
    opt.rank = g.integer(1, opt.dim - 1);
    opt.delta = g.uniform(0.0, 0.9);
    opt.t = g.uniform(0.25, 2.0);
    const ZenoInstance inst = random_gapped_instance(opt, 100 + trial);
    const long long n = g.integer(1, 100);
    const ComplexMatrix step =
        naive_multiply(inst.m, taylor_exp((opt.t / static_cast<double>(n)) *
                                          inst.generator.superoperator));
    EXPECT_LT(max_diff(zeno_product(inst, n), naive_power(step, n)), 1e-12) << trial;
  }
}

TEST(Limit, IdentityMeasurementIsFreeEvolution) {
  Rng rng(4);
  const GeneratorSpec g = make_explicit_generator(random_dissipative(3, 1.0, rng));
  const ZenoInstance inst = make_zeno_instance(ComplexMatrix::identity(3), g, 0.7);
  EXPECT_LT(max_diff(zeno_limit(inst, 9), taylor_exp(0.7 * g.superoperator)), 1e-12);
}

TEST(Limit, TwoPeripheralBlockOracle) {
  const ZenoInstance inst = build_two_peripheral(0.5, 1.0, 5);
  // Rank-one orthogonal projections from the eigenvectors of +1 and -1;
  // P L P = <v|L|v> P, so each block evolves by a scalar phase.
  ComplexMatrix p_plus, p_minus;
  for (const EigenPair& e : eig(inst.m)) {
    const ComplexMatrix p = e.vector * e.vector.adjoint();
    if (std::abs(e.value - 1.0) < 1e-9) p_plus = p;
    if (std::abs(e.value + 1.0) < 1e-9) p_minus = p;
  }
  ASSERT_EQ(p_plus.rows(), 4u);
  ASSERT_EQ(p_minus.rows(), 4u);
  const ComplexMatrix& l = inst.generator.superoperator;
  const cplx a_plus = (p_plus * l).trace(), a_minus = (p_minus * l).trace();
  for (long long n : {1LL, 2LL, 7LL, 8LL}) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    ComplexMatrix oracle = std::exp(inst.t * a_plus) * p_plus;
    oracle.add_scaled(sign * std::exp(inst.t * a_minus), p_minus);
    EXPECT_LT(max_diff(zeno_limit(inst, n), oracle), 1e-10) << n;
  }
}

TEST(Limit, TwoPeripheralRate) {
  const ZenoInstance inst = build_two_peripheral(0.5, 1.0, 5);
  const RateFit fit = rate_fit(zeno_error_series(inst, kPow2));
  EXPECT_GE(fit.slope, -1.15);
  EXPECT_LE(fit.slope, -0.85);
}

TEST(Limit, EmptySpectrumRejected) {
  ZenoInstance inst = zero_generator_instance(ComplexMatrix::identity(2), 1.0);
  inst.spectrum.projections.clear();
  inst.spectrum.eigenvalues.clear();
  EXPECT_THROW(zeno_limit(inst, 1), InvalidInput);
}

TEST(Bounds, ExplicitReducesToClosedSystem) {
  Gen g(6);
  for (int trial = 0; trial < 20; ++trial) {
    BoundParams p;
    p.t = g.uniform(0.0, 2.0);
    p.norm_l = g.uniform(0.0, 3.0);
    p.c_p = 1.0;
    p.e_btilde = 1.0;
    p.delta = 0.0;
    p.n = g.integer(1, 2000);
    const double by_hand =
        (p.t * p.norm_l + 2.5 * p.t * p.t * p.norm_l * p.norm_l) / static_cast<double>(p.n);
    EXPECT_NEAR(evaluate_bound_thm1(p), by_hand, 1e-14 * (1.0 + by_hand));
    EXPECT_NEAR(evaluate_bound_closed_system(p.t, p.norm_l, p.n), by_hand,
                1e-14 * (1.0 + by_hand));
  }
}

TEST(Bounds, ExplicitGeneralFormula) {
  BoundParams p;
  p.t = 0.5;
  p.norm_l = 2.0;
  p.c_p = 1.5;
  p.e_btilde = 1.2;
  p.delta = 0.25;
  p.n = 10;
  const double expect = 1.5 * 0.5 * 2.0 / 10 +
                        ((1.5 + 2.2 * (1.0 + 2.25)) / 2.0) * 0.25 * 4.0 / 10 +
                        std::pow(0.25, 10) + (0.5 / 0.75) * std::exp(3 * 0.5 * 2.0 * 1.5) / 10;
  EXPECT_NEAR(evaluate_bound_thm1(p), expect, 1e-13);
}

TEST(Bounds, ExplicitEdgeCases) {
  BoundParams p;
  p.t = 0.0;
  p.norm_l = 3.0;
  p.c_p = 1.0;
  p.delta = 0.4;
  p.n = 5;
  // Only delta^n and the t-independent last term remain.
  const double last = 2.0 * 0.4 / 0.6 / 5.0;
  EXPECT_NEAR(evaluate_bound_thm1(p), std::pow(0.4, 5) + last, 1e-15);
  p.delta = 0.0;
  EXPECT_EQ(evaluate_bound_thm1(p), 0.0);
  p.t = 1.0;
  const double v = evaluate_bound_thm1(p);
  p.n = 10;
  EXPECT_DOUBLE_EQ(evaluate_bound_thm1(p), v / 2.0);
  p.delta = 1.0;
  EXPECT_THROW(evaluate_bound_thm1(p), InvalidInput);
}

TEST(Bounds, UniformFormulaAndOrdering) {
  BoundParams p;
  p.t = 0.5;
  p.norm_l = 1.0;
  p.c_p = 1.0;
  p.e_btilde = 1.0;
  p.delta = 0.5;
  p.delta_tilde = 0.75;
  p.c_tilde = 2.0;
  p.n = 8;
  const double expect = 0.5 / 8 + 2.5 * 0.25 / 8 + (2.0 * 2.0 / 0.25) * std::pow(0.75, 8) +
                        (1.5 / 0.25) * std::exp(6 * 0.5 * 2.0 / 0.25) / 8;
  EXPECT_NEAR(evaluate_bound_uniform(p), expect, 1e-10 * expect);
  double prev = evaluate_bound_uniform(p);
  for (long long n = 16; n <= 4096; n *= 2) {
    p.n = n;
    const double v = evaluate_bound_uniform(p);
    EXPECT_LT(v, prev) << n;
    prev = v;
  }
  p.delta_tilde = p.delta;
  EXPECT_THROW(evaluate_bound_uniform(p), InvalidInput);
  p.delta_tilde = 1.0;
  EXPECT_THROW(evaluate_bound_uniform(p), InvalidInput);
}

TEST(Constants, ZeroGenerator) {
  Rng rng(7);
  const ComplexMatrix p = random_projector(4, 2, rng);
  const ZenoInstance inst = zero_generator_instance(p, 1.0);
  const ZenoConstants k = zeno_condition_constants(inst);
  EXPECT_EQ(k.b, 0.0);
  EXPECT_NEAR(k.e_btilde, 1.0, 1e-12);  // ||P|| for an orthogonal projector
  EXPECT_NEAR(k.c_p, 1.0, 1e-12);
  EXPECT_EQ(k.norm_l, 0.0);
}

TEST(Constants, OptimalityExample) {
  const ZenoConstants k = zeno_condition_constants(build_optimality_example(0.5, 1.0));
  EXPECT_NEAR(k.b, 1.0, 1e-12);
  EXPECT_NEAR(k.c_p, 1.0, 1e-12);
  EXPECT_NEAR(k.norm_l, 1.0, 1e-12);
  EXPECT_NEAR(k.e_btilde, 1.0, 1e-12);
}

TEST(Constants, HermitianProjectorHasUnitCp) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomInstanceOptions opt;
    opt.dim = 5;
    opt.rank = 2;
    const ZenoInstance inst = random_gapped_instance(opt, seed);
    EXPECT_NEAR(bound_inputs(inst).c_p, 1.0, 1e-10) << seed;
  }
}

TEST(SplitChecks, OptimalityOperatorLevel) {
  const ZenoInstance inst = build_optimality_example(0.5, 1.0);
  for (long long n = 1; n <= 64; ++n) EXPECT_GE(check_lemma_54(inst, n).slack, -1e-9) << n;
}

TEST(SplitChecks, ZeroGeneratorIsPurePowerConvergence) {
  Rng rng(9);
  RandomInstanceOptions opt;
  opt.dim = 4;
  opt.delta = 0.6;
  const ZenoInstance base = random_gapped_instance(opt, 9);
  ZenoInstance inst = zero_generator_instance(base.m, 1.0);
  for (long long n : {1LL, 2LL, 5LL, 20LL}) {
    EXPECT_LE(check_lemma_54(inst, n).lhs, std::pow(inst.spectrum.delta, n) + 1e-12) << n;
    const ComplexMatrix x = random_unit_vector(4, rng);
    EXPECT_LT(check_lemma_56(inst, n, x).lhs, 1e-14) << n;
  }
}

TEST(SplitChecks, KernelVectorsVanish) {
  RandomInstanceOptions opt;
  opt.dim = 4;
  opt.rank = 2;
  const ZenoInstance inst = random_gapped_instance(opt, 11);
  const ComplexMatrix& p = inst.spectrum.projections.front();
  Rng rng(11);
  const ComplexMatrix x = (ComplexMatrix::identity(4) - p) * random_unit_vector(4, rng);
  EXPECT_LT(check_lemma_55(inst, 8, x).lhs, 1e-14);
}

TEST(SplitChecks, RhsHalvesWhenNDoubles) {
  RandomInstanceOptions opt;
  const ZenoInstance inst = random_gapped_instance(opt, 12);
  Rng rng(12);
  const ComplexMatrix x = random_unit_vector(opt.dim, rng);
  for (long long n : {4LL, 32LL})
    EXPECT_DOUBLE_EQ(check_lemma_55(inst, 2 * n, x).rhs / check_lemma_55(inst, n, x).rhs, 0.5);
}

TEST(SplitChecks, LastTermDecaysLikeOneOverN) {
  RandomInstanceOptions opt;
  opt.dim = 5;
  opt.rank = 2;
  const ZenoInstance inst = random_gapped_instance(opt, 13);
  Rng rng(13);
  const ComplexMatrix x = random_unit_vector(5, rng);
  ErrorSeries s;
  for (long long n : kPow2) s.entries.push_back({n, check_lemma_56(inst, n, x).lhs, {}, {}});
  EXPECT_LE(rate_fit(s).slope, -0.85);
}

TEST(SplitChecks, RandomInstancesTelescopeAndDominate) {
  Gen g(14);
  for (int trial = 0; trial < 50; ++trial) {
    RandomInstanceOptions opt;
    opt.dim = g.integer(2, 6);
    opt.rank = g.integer(1, opt.dim - 1);
    opt.delta = g.uniform(0.0, 0.9);
    opt.l_norm = g.uniform(0.1, 2.0);
    opt.t = g.uniform(0.25, 2.0);
    const ZenoInstance inst = trial % 4 == 0 ? random_closed_instance(opt, 500 + trial)
                                             : random_gapped_instance(opt, 500 + trial);
    const ZenoConstants k = zeno_condition_constants(inst);
    const long long n = g.integer(1, 256);
    Rng rng(trial);
    for (int v = 0; v < 4; ++v) {
      const ComplexMatrix x = random_unit_vector(opt.dim, rng);
      const LemmaSplit s = check_lemma_split(inst, k, n, x);
      EXPECT_GE(s.lemma54.slack, -1e-9) << trial;
      EXPECT_GE(s.lemma55.slack, -1e-9) << trial;
      EXPECT_GE(s.lemma56.slack, -1e-9) << trial;
      EXPECT_GE(s.telescoping_gap, -1e-12) << trial;
      EXPECT_GE(s.bound_sum - s.total_error, -1e-9) << trial;
    }
    EXPECT_GE(check_lemma_54(inst, n).slack, -1e-9) << trial;
  }
}

TEST(Domination, ExplicitBoundOnRandomInstances) {
  Gen g(15);
  for (int trial = 0; trial < 50; ++trial) {
    RandomInstanceOptions opt;
    opt.dim = g.integer(2, 6);
    opt.rank = g.integer(1, opt.dim - 1);
    opt.delta = g.uniform(0.0, 0.9);
    opt.l_norm = g.uniform(0.1, 2.0);
    opt.t = g.uniform(0.25, 2.0);
    const ZenoInstance inst = random_gapped_instance(opt, 900 + trial);
    const ErrorSeries s = zeno_error_series(inst, {1, 2, 4, 8, 16, 64, 256}, BoundKind::thm1);
    for (const ErrorEntry& e : s.entries) {
      ASSERT_TRUE(e.bound.has_value());
      EXPECT_LE(e.error, *e.bound) << trial << " n=" << e.n;
    }
  }
}

TEST(Domination, UniformOnNonNormalInstances) {
  Gen g(16);
  for (int trial = 0; trial < 20; ++trial) {
    RandomInstanceOptions opt;
    opt.dim = g.integer(3, 6);
    opt.rank = 1;
    opt.delta = g.uniform(0.1, 0.6);
    opt.l_norm = g.uniform(0.1, 1.0);
    opt.t = g.uniform(0.25, 1.0);
    const ZenoInstance inst = random_nonnormal_instance(opt, 1300 + trial);
    const ErrorSeries s = zeno_error_series(inst, {4, 8, 16, 64, 256, 512}, BoundKind::uniform);
    for (const ErrorEntry& e : s.entries) EXPECT_LE(e.error, *e.bound) << trial << " " << e.n;
  }
}

TEST(Domination, ClosedSystemRateAndBound) {
  Gen g(17);
  for (int trial = 0; trial < 10; ++trial) {
    RandomInstanceOptions opt;
    opt.dim = g.integer(2, 8);
    opt.rank = g.integer(1, opt.dim - 1);
    opt.l_norm = g.uniform(0.2, 2.0);
    opt.t = trial % 2 == 0 ? 0.5 : 1.0;
    const ZenoInstance inst = random_closed_instance(opt, 1700 + trial);
    const ErrorSeries s = zeno_error_series(inst, kPow2);
    for (const ErrorEntry& e : s.entries)
      EXPECT_LE(e.error, evaluate_bound_closed_system(opt.t, opt.l_norm, e.n) + 1e-9);
    const RateFit fit = rate_fit(s);
    EXPECT_GE(fit.slope, -1.15) << trial;
    EXPECT_LE(fit.slope, -0.85) << trial;
  }
}

TEST(Domination, HypothesesAreEnforced) {
  const ZenoInstance two = build_two_peripheral(0.5, 1.0, 5);
  EXPECT_THROW(zeno_error_series(two, {1, 2}, BoundKind::thm1), InvalidInput);
  EXPECT_THROW(check_lemma_54(two, 4), InvalidInput);
  EXPECT_THROW(zeno_error_series(two, {2, 1}), InvalidInput);
}
