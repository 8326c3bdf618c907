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

#include <functional>
#include <vector>

#include "zeno/matrix.hpp"
#include "zeno/quantum.hpp"
#include "zeno/report.hpp"

namespace zeno {

struct Contour {
  cplx center = 0.0;
  double radius = 1.0;
  int nodes = 64;  // power of two, at least 8
};

void validate_contour(const Contour& c);
// Trapezoid nodes z_k = center + radius * exp(2 pi i k / nodes).
std::vector<cplx> contour_nodes(const Contour& c);

struct QuadratureOptions {
  double convergence_tol = 1e-11;  // relative change between doublings
  int max_nodes = 4096;
  double separation = 1e-10;       // eigenvalues this close (times radius) are on the contour
  double check_tol = 1e-9;         // idempotence and commutation checks
};

struct ContourIntegral {
  ComplexMatrix value;
  int nodes_used = 0;
};

// (1/2 pi i) \oint f(z) dz with adaptive node doubling. f is evaluated at
// nodes in parallel; the sum runs in node order.
ContourIntegral integrate_contour(const std::function<ComplexMatrix(cplx)>& f, const Contour& c,
                                  const QuadratureOptions& opt = {});

ComplexMatrix spectral_projection(const ComplexMatrix& a, const Contour& c,
                                  const QuadratureOptions& opt = {});
ComplexMatrix quasinilpotent(const ComplexMatrix& a, cplx lambda, const Contour& c,
                             const QuadratureOptions& opt = {});

enum class ContractionCheck { spectral_norm, cptp, none };

struct ClassifyOptions {
  double peripheral_tol = 1e-8;
  int n_max = 64;
  ContractionCheck contraction = ContractionCheck::spectral_norm;
  NormKind c_tilde_norm = NormKind::spectral_superop;
  SampledNormOptions sampled;
  QuadratureOptions quadrature;
};

// Below this size rounding in the power residual (about 1e-15) would move
// c_tilde by more than 1e-9, so those n do not enter it.
inline constexpr double kPowerResidualFloor = 1e-6;
inline constexpr double kNilpotentLimit = 1e-6;

struct PeripheralSpectrum {
  std::vector<cplx> eigenvalues;
  std::vector<ComplexMatrix> projections;
  std::vector<Contour> contours;
  ComplexMatrix p_sigma;
  double delta = 0.0;
  double c_tilde = 0.0;
  std::vector<double> nilpotent_norms;
  NormKind c_tilde_norm = NormKind::spectral_superop;
};

PeripheralSpectrum classify_power_convergence(const ComplexMatrix& m,
                                              const ClassifyOptions& opt = {});
// ||m^n - sum lambda_j^n P_j|| for n = 1..n_max.
std::vector<double> power_residuals(const ComplexMatrix& m, const PeripheralSpectrum& s,
                                    int n_max, NormKind kind = NormKind::spectral_superop,
                                    const SampledNormOptions& sampled = {});

struct PerturbationData {
  double resolvent_sup = 0.0;  // R
  double d = 0.0;
  double curve_length = 0.0;
  double epsilon = 0.0;        // +inf when b = 0
  double b = 0.0;
};

PerturbationData semicontinuity_epsilon(const ComplexMatrix& m0, const Contour& c, double b);

using MatrixPath = std::function<ComplexMatrix(double)>;

ComplexMatrix perturbed_projection(const ComplexMatrix& a, const MatrixPath& b_map, double t,
                                   const Contour& c, const QuadratureOptions& opt = {});
// P' = (1/2 pi i) \oint R(z,A) B0 R(z,A) dz
ComplexMatrix projection_derivative(const ComplexMatrix& a, const ComplexMatrix& b0,
                                    const Contour& c, const QuadratureOptions& opt = {});

struct PerturbedProjectionCheck {
  PerturbationData data;
  InequalityReport zeroth_order;
  InequalityReport first_order;
  InequalityReport norm_bound;   // ||P(t)|| <= d |Gamma| / 2 pi
  double idempotence_defect = 0.0;
};

// b_sup must bound ||B(s)|| for all s >= 0.
PerturbedProjectionCheck check_perturbed_projection(const ComplexMatrix& a,
                                                    const MatrixPath& b_map, double b_sup,
                                                    double t, const Contour& c);

}  // namespace zeno
