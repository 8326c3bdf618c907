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

#pragma once

#include <complex>
#include <cstddef>

// Inner loops for dense complex arithmetic. Every kernel has a scalar
// reference implementation; SIMD variants must agree with it to rounding.
// The active variant is chosen once per process from the CPU features,
// overridable with ZENO_SIMD=scalar|avx2.

namespace zeno::kernels {

using cplx = std::complex<double>;

enum class SimdLevel { scalar, avx2 };

// c[m x n] = a[m x k] * b[k x n], all row-major and contiguous.
using GemmFn = void (*)(std::size_t m, std::size_t n, std::size_t k,
                        const cplx* a, const cplx* b, cplx* c);
// y += alpha * x
using AxpyFn = void (*)(std::size_t len, cplx alpha, const cplx* x, cplx* y);
// sum |x_i|^2
using SumAbs2Fn = double (*)(std::size_t len, const cplx* x);

struct KernelTable {
  SimdLevel level;
  GemmFn gemm;
  AxpyFn axpy;
  SumAbs2Fn sum_abs2;
};

namespace scalar {
void gemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
          const cplx* b, cplx* c);
void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y);
double sum_abs2(std::size_t len, const cplx* x);
}  // namespace scalar

#if defined(ZENO_HAVE_AVX2)
namespace avx2 {
void gemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
          const cplx* b, cplx* c);
void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y);
double sum_abs2(std::size_t len, const cplx* x);
}  // namespace avx2
#endif

bool cpu_supports(SimdLevel level);
const char* level_name(SimdLevel level);
KernelTable table_for(SimdLevel level);

// Resolved on first call; stable for the life of the process.
const KernelTable& active();

}  // namespace zeno::kernels
