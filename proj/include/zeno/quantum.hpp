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

#include <cstdint>
#include <string>
#include <vector>

#include "zeno/matrix.hpp"

// Vectorization is column-stacking: vec(rho)[i + j*d] = rho(i, j), so the
// map rho -> A rho B has superoperator matrix kron(B^T, A).

namespace zeno {

ComplexMatrix vec(const ComplexMatrix& rho);
ComplexMatrix unvec(const ComplexMatrix& v, std::size_t d);
std::size_t superop_dim(const ComplexMatrix& s);  // d with s of size d^2 x d^2

ComplexMatrix sandwich_superop(const ComplexMatrix& a, const ComplexMatrix& b);
// rho -> -i[H, rho]
ComplexMatrix commutator_superop(const ComplexMatrix& h);
// rho -> V rho V^H - {V^H V, rho}/2
ComplexMatrix dissipator_superop(const ComplexMatrix& v);
ComplexMatrix kraus_superop(const std::vector<ComplexMatrix>& kraus);
ComplexMatrix apply_superop(const ComplexMatrix& s, const ComplexMatrix& rho);

ComplexMatrix choi_matrix(const ComplexMatrix& s);
double min_choi_eigenvalue(const ComplexMatrix& s);
// max |tr Phi(|i><j|) - delta_ij|
double trace_preservation_defect(const ComplexMatrix& s);
bool is_cptp(const ComplexMatrix& s, double tol = 1e-10);

enum class NormKind { spectral_superop, hermitian_1to1_sampled };

std::string to_string(NormKind kind);
NormKind parse_norm_kind(const std::string& name);

struct SampledNormOptions {
  int samples = 256;
  int ascent_steps = 50;
  std::uint64_t seed = 0x5a3e0c0ffeeULL;
};

// max over sampled pure states psi of ||Phi(psi psi^H)||_1, each sample
// refined by alternating sign/eigenvector ascent. A lower estimate of the
// induced trace norm on Hermitian inputs.
double sampled_1to1_norm(const ComplexMatrix& s, const SampledNormOptions& opt = {});

double induced_norm(const ComplexMatrix& s, NormKind kind,
                    const SampledNormOptions& opt = {});

}  // namespace zeno
