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

#include <vector>

#include "test_util.hpp"
#include "zeno/kernels.hpp"

using namespace zeno;
using namespace zeno::testing;
namespace k = zeno::kernels;

namespace {

std::vector<cplx> random_vec(Gen& g, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& z : v) z = g.complex();
  return v;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Kernels, ScalarGemmMatchesTripleLoop) {
  Gen g(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = g.integer(1, 13), n = g.integer(1, 13), kk = g.integer(1, 13);
    const ComplexMatrix a = random_matrix(g, m, kk);
    const ComplexMatrix b = random_matrix(g, kk, n);
    std::vector<cplx> c(m * n, cplx(7.0, 7.0));
    k::scalar::gemm(m, n, kk, a.data(), b.data(), c.data());
    const ComplexMatrix ref = naive_multiply(a, b);
    EXPECT_LT(max_abs_diff(c, ref.entries()), 1e-13);
  }
}

TEST(Kernels, ActiveTableIsUsable) {
  const k::KernelTable& t = k::active();
  EXPECT_TRUE(k::cpu_supports(t.level));
  const std::vector<cplx> x = {cplx(3.0, 4.0), cplx(0.0, 1.0)};
  EXPECT_DOUBLE_EQ(t.sum_abs2(x.size(), x.data()), 26.0);
  EXPECT_STREQ(k::level_name(k::SimdLevel::scalar), "scalar");
}

#if defined(ZENO_HAVE_AVX2)

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!k::cpu_supports(k::SimdLevel::avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  }
};

TEST_F(Avx2Equivalence, Gemm) {
  Gen g(2);
  // Odd sizes exercise the remainder loops.
  for (std::size_t m : {1u, 2u, 3u, 7u, 16u, 33u})
    for (std::size_t n : {1u, 2u, 5u, 8u, 17u})
      for (std::size_t kk : {1u, 3u, 4u, 9u, 32u}) {
        const std::vector<cplx> a = random_vec(g, m * kk);
        const std::vector<cplx> b = random_vec(g, kk * n);
        std::vector<cplx> c1(m * n), c2(m * n);
        k::scalar::gemm(m, n, kk, a.data(), b.data(), c1.data());
        k::avx2::gemm(m, n, kk, a.data(), b.data(), c2.data());
        EXPECT_LT(max_abs_diff(c1, c2), 1e-13 * static_cast<double>(kk)) << m << "x" << n << "x" << kk;
      }
}

TEST_F(Avx2Equivalence, Axpy) {
  Gen g(3);
  for (std::size_t len : {0u, 1u, 2u, 3u, 4u, 5u, 31u, 64u, 1001u}) {
    const std::vector<cplx> x = random_vec(g, len);
    std::vector<cplx> y1 = random_vec(g, len);
    std::vector<cplx> y2 = y1;
    const cplx alpha = g.complex();
    k::scalar::axpy(len, alpha, x.data(), y1.data());
    k::avx2::axpy(len, alpha, x.data(), y2.data());
    EXPECT_LT(max_abs_diff(y1, y2), 1e-15) << len;
  }
}

TEST_F(Avx2Equivalence, SumAbs2) {
  Gen g(4);
  for (std::size_t len : {0u, 1u, 2u, 3u, 7u, 64u, 999u}) {
    const std::vector<cplx> x = random_vec(g, len);
    const double s1 = k::scalar::sum_abs2(len, x.data());
    const double s2 = k::avx2::sum_abs2(len, x.data());
    EXPECT_NEAR(s1, s2, 1e-13 * (1.0 + s1)) << len;
  }
}

TEST_F(Avx2Equivalence, TableSelection) {
  EXPECT_EQ(k::table_for(k::SimdLevel::avx2).level, k::SimdLevel::avx2);
  EXPECT_EQ(k::table_for(k::SimdLevel::scalar).gemm, &k::scalar::gemm);
}

#endif
