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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeno/matrix.hpp"
#include "zeno/quantum.hpp"
#include "zeno/report.hpp"
#include "zeno/semigroups.hpp"
#include "zeno/zeno.hpp"

namespace zeno {

// M = |1><1| + delta |3><3|, L = |1><2| on C^3.
ZenoInstance build_optimality_example(double delta, double t);

// M(rho) = (1-p) rho + p tr(rho) sigma with P(rho) = tr(rho) sigma. The
// instance carries delta = 2(1-p) and c_tilde = ||id - P|| / 2.
ZenoInstance build_depolarizing(double p, const ComplexMatrix& sigma, const GeneratorSpec& g,
                                double t = 1.0,
                                NormKind kind = NormKind::hermitian_1to1_sampled);
// Superoperator of rho -> tr(rho) sigma.
ComplexMatrix replacement_superop(const ComplexMatrix& sigma);

ZenoInstance build_random_cptp(std::size_t dim, std::size_t env_dim, std::uint64_t seed,
                               const GeneratorSpec& g, double t = 1.0,
                               NormKind kind = NormKind::hermitian_1to1_sampled);

struct SdpiEstimate {
  double delta_hat = 0.0;    // max sampled D(M rho || M P rho) / D(rho || P rho)
  double rate = 0.0;         // sqrt(delta_hat), the per-step rate
  double c_tilde = 0.0;      // sqrt(2) * sqrt(max sampled D(rho || P rho))
  int used = 0;
  int discarded = 0;
};

// D(rho || sigma) with eigenvalues floored at 1e-14. nullopt when the
// support of rho is not inside the support of sigma.
std::optional<double> relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Samples `states` Haar pure states and states / 4 random full-rank states.
SdpiEstimate build_sdpi_certificate(const ComplexMatrix& m, const ComplexMatrix& p, int states,
                                    std::uint64_t seed = 7);

// (1/3)(|0><0| + |1><1| + |2><2|) + (1/10)(|0><1| + |1><0|)
ComplexMatrix oscillator_sigma();
ZenoInstance build_truncated_oscillator(std::size_t truncation, const ComplexMatrix& sigma,
                                        double p, double t = 1.0);

// Random instances for the bound sweeps, state-vector picture with a
// dissipative generator L = -iH - K scaled to ||L|| = l_norm.
struct RandomInstanceOptions {
  std::size_t dim = 4;
  std::size_t rank = 1;
  double delta = 0.5;
  double l_norm = 1.0;
  double t = 1.0;
};
// M = P + M_perp with P an orthogonal projector and M_perp normal on the
// complement with spectral radius delta, so ||M^n - P|| = delta^n.
ZenoInstance random_gapped_instance(const RandomInstanceOptions& opt, std::uint64_t seed);
// Same, but M_perp is upper triangular in a random frame of the complement,
// so ||M^n - P|| can exceed delta^n.
ZenoInstance random_nonnormal_instance(const RandomInstanceOptions& opt, std::uint64_t seed);
// M = P, L = -iH with Hermitian P and H, ||H|| = l_norm.
ZenoInstance random_closed_instance(const RandomInstanceOptions& opt, std::uint64_t seed);
// dim 4: M = P_1 - P_2 + M_perp with rank-one orthogonal P_j.
ZenoInstance build_two_peripheral(double delta, double t, std::uint64_t seed);

// -i ad(sigma_x), -i ad(sigma_z) or, when commuting, -i ad(sigma_z) with
// sigma_z dephasing of rate gamma.
std::pair<GeneratorSpec, GeneratorSpec> trotter_qubit_pair(bool commuting, double gamma = 0.5);

// error(n) = scale * n^(-exponent)
ErrorSeries synthetic_power_series(double exponent, double scale,
                                   const std::vector<long long>& n_grid);

// Named scenarios as used by the config files.
using ScenarioParams = std::map<std::string, double>;

struct ScenarioSpec {
  std::string name;
  ScenarioParams parameters;
  std::uint64_t seed = 0;
};

enum class ScenarioOutput { zeno_instance, trotter_pair, synthetic };

std::vector<std::string> scenario_names();
ScenarioOutput scenario_output(const std::string& name);
NormKind default_norm(const std::string& name);
// Rejects unknown names, unknown parameter keys and out-of-range values.
void validate_scenario(const ScenarioSpec& spec);

ZenoInstance build_scenario_instance(const ScenarioSpec& spec, double t,
                                     std::optional<NormKind> kind = std::nullopt);
std::pair<GeneratorSpec, GeneratorSpec> build_scenario_trotter(const ScenarioSpec& spec);
ErrorSeries build_scenario_synthetic(const ScenarioSpec& spec,
                                     const std::vector<long long>& n_grid);

// Seeded Lindblad generator on C^{d x d}: random H of norm h_norm and one
// random jump operator of norm gamma.
GeneratorSpec random_lindblad(std::size_t d, double h_norm, double gamma, std::uint64_t seed);

}  // namespace zeno
