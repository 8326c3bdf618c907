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

#include <optional>
#include <string>
#include <vector>

#include "zeno/matrix.hpp"

namespace zeno {

enum class GeneratorKind { hamiltonian, lindblad, explicit_matrix };
enum class Picture { state_vector, density_matrix };

// Sample times for the contractivity certificate.
inline constexpr double kContractivityGrid[] = {1e-3, 1e-2, 1e-1, 1.0, 10.0};
inline constexpr double kContractivityTol = 1e-9;

struct ContractivityCertificate {
  // "spectral": max ||e^{sL}||_2 <= 1 + tol on the grid.
  // "cptp": e^{sL} trace preserving and completely positive on the grid,
  // which is contraction in trace norm.
  std::string method;
  bool passed = false;
  double max_spectral_norm = 0.0;
  double max_trace_defect = 0.0;
  double min_choi_eigenvalue = 0.0;
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::explicit_matrix;
  Picture picture = Picture::state_vector;
  std::optional<ComplexMatrix> hamiltonian;
  std::vector<ComplexMatrix> jump_operators;
  std::optional<ComplexMatrix> explicit_matrix;
  std::size_t dim = 0;          // Hilbert space (or vector space) dimension
  ComplexMatrix superoperator;  // matrix of L on the space it acts on
  ContractivityCertificate certificate;
};

GeneratorSpec make_hamiltonian_generator(const ComplexMatrix& h, Picture picture);
GeneratorSpec make_lindblad_generator(const ComplexMatrix& h,
                                      const std::vector<ComplexMatrix>& jumps);

struct ExplicitOptions {
  // Reject the matrix unless the certificate passes.
  bool require_contraction = true;
  // Certify as a semigroup of channels instead of in the spectral norm.
  bool channel_semigroup = false;
};
GeneratorSpec make_explicit_generator(const ComplexMatrix& l, ExplicitOptions opt = {});

ComplexMatrix evolve(const GeneratorSpec& g, double t);

// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n);

double check_integral_equation(const GeneratorSpec& k, const GeneratorSpec& l, double t,
                               int quad_points = 64);

struct PerturbationBoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
};
PerturbationBoundReport check_perturbation_bound(const GeneratorSpec& l,
                                                 const ComplexMatrix& a, double w,
                                                 double t);

}  // namespace zeno
