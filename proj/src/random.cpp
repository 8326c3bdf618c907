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

#include "zeno/random.hpp"

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/quantum.hpp"

namespace zeno {

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  const ComplexMatrix g = random_gaussian(d, d, rng);
  ComplexMatrix h = g + g.adjoint();
  h *= 0.5;
  return h;
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  return qr_q(random_gaussian(d, d, rng));
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw InvalidInput("random_isometry: cols > rows");
  return qr_q(random_gaussian(rows, cols, rng));
}

ComplexMatrix random_projector(std::size_t d, std::size_t rank, Rng& rng) {
  if (rank > d) throw InvalidInput("random_projector: rank exceeds dimension");
  if (rank == 0) return ComplexMatrix::zero(d, d);
  const ComplexMatrix v = random_isometry(d, rank, rng);
  return v * v.adjoint();
}

ComplexMatrix random_unit_vector(std::size_t d, Rng& rng) {
  ComplexMatrix v = random_gaussian(d, 1, rng);
  v *= 1.0 / vector_norm(v);
  return v;
}

ComplexMatrix random_pure_state(std::size_t d, Rng& rng) {
  const ComplexMatrix v = random_unit_vector(d, rng);
  return v * v.adjoint();
}

ComplexMatrix random_density(std::size_t d, Rng& rng) {
  const ComplexMatrix g = random_gaussian(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return rho;
}

ComplexMatrix random_contraction(std::size_t d, double norm, Rng& rng) {
  ComplexMatrix g = random_gaussian(d, d, rng);
  g *= norm / operator_norm(g);
  return g;
}

ComplexMatrix random_dissipative(std::size_t d, double norm, Rng& rng) {
  const ComplexMatrix h = random_hermitian(d, rng);
  const ComplexMatrix g = random_gaussian(d, d, rng);
  ComplexMatrix k = g * g.adjoint();
  k *= 0.25;
  ComplexMatrix l = cplx(0.0, -1.0) * h - k;
  const double ln = operator_norm(l);
  if (ln > 0.0) l *= norm / ln;
  return l;
}

ComplexMatrix random_stinespring_channel(std::size_t d, std::size_t env, Rng& rng) {
  if (d < 1 || env < 1) throw InvalidInput("random_stinespring_channel: empty dimension");
  const ComplexMatrix v = random_isometry(d * env, d, rng);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < env; ++k) {
    ComplexMatrix op(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) op(i, j) = v(k * d + i, j);
    kraus.push_back(std::move(op));
  }
  return kraus_superop(kraus);
}

}  // namespace zeno
