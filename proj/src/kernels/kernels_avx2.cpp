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

#include "zeno/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

// Built with -mavx2 -mfma; only reached after a cpuid check.

namespace zeno::kernels::avx2 {

namespace {

// (ar + i ai) * (two packed complex numbers in b)
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

}  // namespace

void gemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
          const cplx* b, cplx* c) {
  std::fill(c, c + m * n, cplx{});
  const std::size_t n4 = n & ~std::size_t{3};
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const double ar_s = a[i * k + p].real();
      const double ai_s = a[i * k + p].imag();
      if (ar_s == 0.0 && ai_s == 0.0) continue;
      const __m256d ar = _mm256_set1_pd(ar_s);
      const __m256d ai = _mm256_set1_pd(ai_s);
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j < n4; j += 4) {
        const __m256d b0 = _mm256_loadu_pd(brow + 2 * j);
        const __m256d b1 = _mm256_loadu_pd(brow + 2 * j + 4);
        __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
        __m256d c1 = _mm256_loadu_pd(crow + 2 * j + 4);
        c0 = _mm256_add_pd(c0, cmul_bcast(ar, ai, b0));
        c1 = _mm256_add_pd(c1, cmul_bcast(ar, ai, b1));
        _mm256_storeu_pd(crow + 2 * j, c0);
        _mm256_storeu_pd(crow + 2 * j + 4, c1);
      }
      for (; j < n2; j += 2) {
        const __m256d b0 = _mm256_loadu_pd(brow + 2 * j);
        __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
        c0 = _mm256_add_pd(c0, cmul_bcast(ar, ai, b0));
        _mm256_storeu_pd(crow + 2 * j, c0);
      }
      for (; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar_s * br - ai_s * bi;
        crow[2 * j + 1] += ar_s * bi + ai_s * br;
      }
    }
  }
}

void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; i < len; ++i) {
    const double xr = xd[2 * i];
    const double xi = xd[2 * i + 1];
    yd[2 * i] += alpha.real() * xr - alpha.imag() * xi;
    yd[2 * i + 1] += alpha.real() * xi + alpha.imag() * xr;
  }
}

double sum_abs2(std::size_t len, const cplx* x) {
  const double* xd = reinterpret_cast<const double*>(x);
  const std::size_t total = 2 * len;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= total; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(xd + i);
    const __m256d v1 = _mm256_loadu_pd(xd + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < total; ++i) s += xd[i] * xd[i];
  return s;
}

}  // namespace zeno::kernels::avx2
