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
#include <random>

#include "zeno/matrix.hpp"

namespace zeno {

// Seeded generator handed explicitly to every builder; never global.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * unit_(engine_);
  }
  // Integer in [lo, hi].
  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }
  cplx complex_normal() { return cplx(normal(), normal()) * 0.7071067811865476; }
  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix random_hermitian(std::size_t d, Rng& rng);
ComplexMatrix random_unitary(std::size_t d, Rng& rng);
// rows x cols with orthonormal columns.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);
// Orthogonal projector of the given rank onto a Haar-random subspace.
ComplexMatrix random_projector(std::size_t d, std::size_t rank, Rng& rng);
ComplexMatrix random_unit_vector(std::size_t d, Rng& rng);
ComplexMatrix random_pure_state(std::size_t d, Rng& rng);
ComplexMatrix random_density(std::size_t d, Rng& rng);
// Gaussian matrix rescaled to the given operator norm.
ComplexMatrix random_contraction(std::size_t d, double norm, Rng& rng);
// -iH - K with K >= 0 and the given operator norm; e^{sL} is a contraction.
ComplexMatrix random_dissipative(std::size_t d, double norm, Rng& rng);
// Superoperator of a channel from a Haar isometry C^d -> C^d (x) C^env.
ComplexMatrix random_stinespring_channel(std::size_t d, std::size_t env, Rng& rng);

}  // namespace zeno
