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

#include <vector>

#include "zeno/matrix.hpp"
#include "zeno/report.hpp"
#include "zeno/semigroups.hpp"
#include "zeno/spectral.hpp"

namespace zeno {

inline constexpr int kPreconditionSamples = 32;

// ||c^n x - e^{n(c-I)} x|| <= sqrt(n) ||(c-I) x||
InequalityReport chernoff_sqrt_n(const ComplexMatrix& c, long long n, const ComplexMatrix& x);
// ||(c^n - e^{n(c-I)}) x|| <= (n/2) ||(c-I)^2 x||
InequalityReport chernoff_modified(const ComplexMatrix& c, long long n, const ComplexMatrix& x);

// Hypotheses are spot-checked at 32 geometric t in [1e-3/n, 1/n].
InequalityReport chernoff_approx_modified(const MatrixPath& c_map, const MatrixPath& p_map,
                                          const ComplexMatrix& p, double v, double w,
                                          long long n);

// ||f(t/n)^n - e^{tl}|| <= ||n(f(t/n)-I) - tl|| + (n/2)||f(t/n)-I||^2
InequalityReport product_formula_bound(const MatrixPath& f, const ComplexMatrix& l, double t,
                                       long long n);

ErrorSeries trotter_rate(const GeneratorSpec& l1, const GeneratorSpec& l2,
                         const std::vector<long long>& n_grid);
// (1/n)(|l1||l2| + 2|l1|^2 + 2|l2|^2) + (n/2)||e^{l1/n}e^{l2/n} - I||^2
double trotter_envelope(const ComplexMatrix& l1, const ComplexMatrix& l2, long long n);

}  // namespace zeno
