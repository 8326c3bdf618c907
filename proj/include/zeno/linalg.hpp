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

#include <cstddef>
#include <vector>

#include "zeno/matrix.hpp"

namespace zeno {

struct LinalgTolerances {
  // Full SVD up to this dimension, power iteration on A^H A above it.
  std::size_t svd_max_dim = 512;
  double power_iteration_tol = 1e-12;
  int power_iteration_cap = 10000;
  // (z - a) with an estimated condition number above this is singular.
  double resolvent_condition_cap = 1e12;
  std::size_t eig_max_dim = 512;
};

inline const LinalgTolerances kDefaultLinalg{};

double operator_norm(const ComplexMatrix& a, const LinalgTolerances& tol = kDefaultLinalg);
// Largest singular value by power iteration on A^H A, regardless of size.
double operator_norm_power(const ComplexMatrix& a,
                           const LinalgTolerances& tol = kDefaultLinalg);
double trace_norm(const ComplexMatrix& a);
std::vector<double> singular_values(const ComplexMatrix& a);
double one_norm(const ComplexMatrix& a);

ComplexMatrix matrix_exp(const ComplexMatrix& a);
ComplexMatrix matrix_power(const ComplexMatrix& a, long long n);

ComplexMatrix resolvent(const ComplexMatrix& a, cplx z,
                        const LinalgTolerances& tol = kDefaultLinalg);
// Solves a * x = b with partial pivoting.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);
cplx determinant(const ComplexMatrix& a);

struct EigenPair {
  cplx value;
  ComplexMatrix vector;  // unit-norm column
};

std::vector<EigenPair> eig(const ComplexMatrix& a,
                           const LinalgTolerances& tol = kDefaultLinalg);
std::vector<cplx> eigenvalues(const ComplexMatrix& a,
                              const LinalgTolerances& tol = kDefaultLinalg);

// Hermitian eigensolver; values ascending, vectors as columns.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};
HermitianEigen eigh(const ComplexMatrix& a);

// Q factor of a Householder QR, columns phase-normalized so R has a
// positive diagonal.
ComplexMatrix qr_q(const ComplexMatrix& a);

double hermiticity_defect(const ComplexMatrix& a);

}  // namespace zeno
