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
#include "zeno/quantum.hpp"
#include "zeno/report.hpp"
#include "zeno/semigroups.hpp"
#include "zeno/spectral.hpp"

namespace zeno {

struct ZenoInstance {
  ComplexMatrix m;
  GeneratorSpec generator;
  PeripheralSpectrum spectrum;
  double t = 1.0;
  NormKind norm_kind = NormKind::spectral_superop;
  SampledNormOptions sampled;
  std::string label;
  std::vector<std::string> flags;  // copied onto every report row
};

// Classification defaults follow the norm: spectral norm contraction for
// spectral-superop, CPTP for the sampled trace norm.
ClassifyOptions default_classify_options(NormKind kind);

ZenoInstance make_zeno_instance(const ComplexMatrix& m, const GeneratorSpec& g, double t,
                                NormKind kind = NormKind::spectral_superop,
                                std::string label = "",
                                std::optional<ClassifyOptions> classify = std::nullopt);
// Uses a spectrum computed elsewhere; only shapes and ||m|| are checked.
ZenoInstance make_zeno_instance(const ComplexMatrix& m, const GeneratorSpec& g,
                                PeripheralSpectrum spectrum, double t, NormKind kind,
                                std::string label);

double instance_norm(const ZenoInstance& inst, const ComplexMatrix& a);

ComplexMatrix zeno_product(const ZenoInstance& inst, long long n);
ComplexMatrix zeno_limit(const ZenoInstance& inst, long long n);

enum class BoundKind { none, thm1, uniform };
std::string to_string(BoundKind kind);
BoundKind parse_bound_kind(const std::string& name);

enum class CertificateKind { thm1_explicit, closed_system, uniform_power };
std::string to_string(CertificateKind kind);

struct BoundParams {
  double t = 0.0;
  double norm_l = 0.0;
  double c_p = 0.0;
  double e_btilde = 1.0;
  double delta = 0.0;
  double delta_tilde = 0.0;
  double c_tilde = 0.0;
  double b = 0.0;
  long long n = 1;
};

struct BoundCertificate {
  CertificateKind kind = CertificateKind::thm1_explicit;
  BoundParams params;
  double value = 0.0;
};

double evaluate_bound_thm1(const BoundParams& p);
double evaluate_bound_uniform(const BoundParams& p);
// (1/n)(t||H|| + (5/2) t^2 ||H||^2)
double evaluate_bound_closed_system(double t, double norm_h, long long n);

struct ZenoConstants {
  double b = 0.0;
  double c_p = 0.0;
  double e_btilde = 1.0;
  double norm_l = 0.0;
  ComplexMatrix p;  // P_1 when J = 1, P_Sigma otherwise
};

// c_p, e_btilde and norm_l only; skips the b sampling.
ZenoConstants bound_inputs(const ZenoInstance& inst);
ZenoConstants zeno_condition_constants(const ZenoInstance& inst);

struct SeriesOptions {
  std::optional<double> delta_tilde;  // uniform bound; default (1 + delta) / 2
};

ErrorSeries zeno_error_series(const ZenoInstance& inst, const std::vector<long long>& n_grid,
                              BoundKind bound = BoundKind::none, const SeriesOptions& opt = {});

// One peripheral eigenvalue equal to 1 and ||M^n - P|| <= delta^n (c_tilde <= 1).
void require_thm1_hypotheses(const ZenoInstance& inst, const char* op);

// The split checks act on the rescaled pair (tL, tb).
InequalityReport check_lemma_54(const ZenoInstance& inst, long long n);
InequalityReport check_lemma_54_vector(const ZenoInstance& inst, long long n,
                                       const ComplexMatrix& x);
InequalityReport check_lemma_55(const ZenoInstance& inst, long long n, const ComplexMatrix& x);
InequalityReport check_lemma_56(const ZenoInstance& inst, long long n, const ComplexMatrix& x);

struct LemmaSplit {
  InequalityReport lemma54;
  InequalityReport lemma55;
  InequalityReport lemma56;
  double total_error = 0.0;  // ||(Me^{tL/n})^n x - e^{tPLP} P x||
  double telescoping_gap = 0.0;  // lhs54 + lhs55 + lhs56 - total_error
  double bound_sum = 0.0;        // rhs54 + rhs55 + rhs56
};
// All three on the same vector, with constants computed once.
LemmaSplit check_lemma_split(const ZenoInstance& inst, const ZenoConstants& k, long long n,
                             const ComplexMatrix& x);

// Splitting of the multi-eigenvalue error through the perturbed projections
// P_j(t/n) and contractions C_j(t/n).
struct PeripheralSplit {
  double term1 = 0.0;  // ||(Me^{sL})^n - (P_S M e^{sL} P_S)^n||
  double term2 = 0.0;  // ||(P_S M e^{sL} P_S)^n - sum l_j^n e^{n(C_j - P_j(s))} P_j(s)||
  double term3 = 0.0;  // ||sum l_j^n e^{n(C_j - P_j(s))} P_j(s) - zeno_limit||
  double total = 0.0;
  double epsilon = 0.0;
  double b = 0.0;
  bool epsilon_exceeded = false;
  std::vector<std::string> warnings;
};
PeripheralSplit peripheral_split(const ZenoInstance& inst, long long n);

}  // namespace zeno
