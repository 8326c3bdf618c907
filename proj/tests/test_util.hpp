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

#include <cmath>
#include <cstdint>
#include <vector>

#include "zeno/matrix.hpp"

namespace zeno::testing {

// SplitMix64; kept separate from the library generator so test inputs do
// not share state or code with what they test.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  cplx complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::uint64_t s_;
};

inline ComplexMatrix random_matrix(Gen& g, std::size_t r, std::size_t c) {
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = g.complex();
  return m;
}

inline ComplexMatrix random_herm(Gen& g, std::size_t d) {
  const ComplexMatrix a = random_matrix(g, d, d);
  ComplexMatrix h = a + a.adjoint();
  h *= 0.5;
  return h;
}

// Entrywise triple loop.
inline ComplexMatrix naive_multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c = ComplexMatrix::zero(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline ComplexMatrix naive_power(const ComplexMatrix& a, long long n) {
  ComplexMatrix r = ComplexMatrix::identity(a.rows());
  for (long long k = 0; k < n; ++k) r = naive_multiply(r, a);
  return r;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

// Taylor series on A / 2^s, then s squarings.
inline ComplexMatrix taylor_exp(const ComplexMatrix& a) {
  double norm = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  int s = 0;
  while (norm > 0.125) {
    norm *= 0.5;
    ++s;
  }
  ComplexMatrix x = a;
  x *= std::ldexp(1.0, -s);
  ComplexMatrix sum = ComplexMatrix::identity(a.rows());
  ComplexMatrix term = ComplexMatrix::identity(a.rows());
  for (int k = 1; k <= 30; ++k) {
    term = naive_multiply(term, x);
    term *= 1.0 / k;
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = naive_multiply(sum, sum);
  return sum;
}

// Largest singular value by plain power iteration on A^H A.
inline double power_norm(const ComplexMatrix& a, int iters = 3000) {
  const ComplexMatrix aha = naive_multiply(a.adjoint(), a);
  ComplexMatrix v(a.cols(), 1);
  for (std::size_t i = 0; i < a.cols(); ++i) v(i, 0) = cplx(1.0 + 0.1 * i, 0.3 - 0.05 * i);
  double lambda = 0.0;
  for (int k = 0; k < iters; ++k) {
    ComplexMatrix w = naive_multiply(aha, v);
    const double n = frobenius_norm(w);
    if (n == 0.0) return 0.0;
    lambda = n / frobenius_norm(v);
    w *= 1.0 / n;
    v = w;
  }
  return std::sqrt(lambda);
}

inline ComplexMatrix unit_vector(Gen& g, std::size_t d) {
  ComplexMatrix v = random_matrix(g, d, 1);
  v *= 1.0 / frobenius_norm(v);
  return v;
}

}  // namespace zeno::testing
