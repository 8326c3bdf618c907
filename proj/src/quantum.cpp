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

#include "zeno/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/random.hpp"

namespace zeno {

ComplexMatrix vec(const ComplexMatrix& rho) {
  ComplexMatrix v(rho.rows() * rho.cols(), 1);
  for (std::size_t j = 0; j < rho.cols(); ++j)
    for (std::size_t i = 0; i < rho.rows(); ++i) v(i + j * rho.rows(), 0) = rho(i, j);
  return v;
}

ComplexMatrix unvec(const ComplexMatrix& v, std::size_t d) {
  if (v.cols() != 1 || v.rows() != d * d) throw InvalidInput("unvec: size mismatch");
  ComplexMatrix rho(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) rho(i, j) = v(i + j * d, 0);
  return rho;
}

std::size_t superop_dim(const ComplexMatrix& s) {
  if (!s.is_square()) throw InvalidInput("superoperator must be square");
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(s.rows()))));
  if (d * d != s.rows() || d == 0) {
    throw InvalidInput("superoperator size " + std::to_string(s.rows()) + " is not a square");
  }
  return d;
}

ComplexMatrix sandwich_superop(const ComplexMatrix& a, const ComplexMatrix& b) {
  return kron(b.transpose(), a);
}

ComplexMatrix commutator_superop(const ComplexMatrix& h) {
  const auto id = ComplexMatrix::identity(h.rows());
  ComplexMatrix s = kron(id, h) - kron(h.transpose(), id);
  s *= cplx(0.0, -1.0);
  return s;
}

ComplexMatrix dissipator_superop(const ComplexMatrix& v) {
  const auto id = ComplexMatrix::identity(v.rows());
  const ComplexMatrix vhv = v.adjoint() * v;
  ComplexMatrix s = kron(v.conjugate(), v);
  s.add_scaled(-0.5, kron(id, vhv));
  s.add_scaled(-0.5, kron(vhv.transpose(), id));
  return s;
}

ComplexMatrix kraus_superop(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw InvalidInput("kraus_superop: no operators");
  const std::size_t d = kraus.front().rows();
  ComplexMatrix s(d * d, d * d);
  for (const auto& k : kraus) s += kron(k.conjugate(), k);
  return s;
}

ComplexMatrix apply_superop(const ComplexMatrix& s, const ComplexMatrix& rho) {
  return unvec(s * vec(rho), rho.rows());
}

ComplexMatrix choi_matrix(const ComplexMatrix& s) {
  const std::size_t d = superop_dim(s);
  ComplexMatrix choi(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // column i + j*d of s is vec(Phi(|i><j|))
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) choi(i * d + a, j * d + b) = s(a + b * d, i + j * d);
    }
  return choi;
}

double min_choi_eigenvalue(const ComplexMatrix& s) {
  ComplexMatrix c = choi_matrix(s);
  ComplexMatrix herm = c + c.adjoint();
  herm *= 0.5;
  return eigh(herm).values.front();
}

double trace_preservation_defect(const ComplexMatrix& s) {
  const std::size_t d = superop_dim(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx tr = 0.0;
      for (std::size_t a = 0; a < d; ++a) tr += s(a + a * d, i + j * d);
      worst = std::max(worst, std::abs(tr - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

bool is_cptp(const ComplexMatrix& s, double tol) {
  return trace_preservation_defect(s) <= tol && min_choi_eigenvalue(s) >= -tol;
}

std::string to_string(NormKind kind) {
  return kind == NormKind::spectral_superop ? "spectral-superop" : "hermitian-1to1-sampled";
}

NormKind parse_norm_kind(const std::string& name) {
  if (name == "spectral-superop") return NormKind::spectral_superop;
  if (name == "hermitian-1to1-sampled") return NormKind::hermitian_1to1_sampled;
  throw InvalidInput("unknown norm_kind '" + name + "'");
}

namespace {

struct PolarPiece {
  double trace_norm;
  ComplexMatrix w;  // unitary with tr(W Y) = ||Y||_1
};

PolarPiece polar(const ComplexMatrix& y) {
  const std::size_t d = y.rows();
  // Hermitian outputs are the common case and only need the sign matrix.
  if (hermiticity_defect(y) <= 1e-13 * (1.0 + max_abs_entry(y))) {
    ComplexMatrix yh = y + y.adjoint();
    yh *= 0.5;
    const HermitianEigen e = eigh(yh);
    ComplexMatrix sign(d, d);
    double tn = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double s = e.values[k] >= 0 ? 1.0 : -1.0;
      tn += std::abs(e.values[k]);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          sign(i, j) += s * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return {tn, sign};
  }
  // W = V U^H from Y = U S V^H, built from the eigenvectors of Y^H Y.
  ComplexMatrix g = y.adjoint() * y;
  g += g.adjoint();
  g *= 0.5;
  const HermitianEigen he = eigh(g);
  ComplexMatrix w(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double sv = std::sqrt(std::max(0.0, he.values[k]));
    if (sv <= 1e-300) continue;
    ComplexMatrix vk(d, 1);
    for (std::size_t i = 0; i < d; ++i) vk(i, 0) = he.vectors(i, k);
    ComplexMatrix uk = y * vk;
    uk *= 1.0 / sv;
    w += vk * uk.adjoint();
  }
  return {trace_norm(y), w};
}

double ascend_from(const ComplexMatrix& s, const ComplexMatrix& sh, ComplexMatrix psi,
                   std::size_t d, int steps) {
  double best = 0.0;
  for (int it = 0; it <= steps; ++it) {
    const ComplexMatrix y = unvec(s * vec(psi * psi.adjoint()), d);
    PolarPiece pp = polar(y);
    if (it > 0 && pp.trace_norm <= best * (1.0 + 1e-13)) {
      best = std::max(best, pp.trace_norm);
      break;
    }
    best = std::max(best, pp.trace_norm);
    if (it == steps) break;
    // K^H = Phi^*(W^H); maximize <psi| Herm(K) |psi>.
    const ComplexMatrix kh = unvec(sh * vec(pp.w.adjoint()), d);
    ComplexMatrix herm = kh + kh.adjoint();
    herm *= 0.5;
    const HermitianEigen e = eigh(herm);
    for (std::size_t i = 0; i < d; ++i) psi(i, 0) = e.vectors(i, d - 1);
  }
  return best;
}

}  // namespace

double sampled_1to1_norm(const ComplexMatrix& s, const SampledNormOptions& opt) {
  const std::size_t d = superop_dim(s);
  const ComplexMatrix sh = s.adjoint();
  Rng rng(opt.seed);
  double best = 0.0;
  for (int k = 0; k < opt.samples; ++k) {
    ComplexMatrix psi = random_unit_vector(d, rng);
    best = std::max(best, ascend_from(s, sh, std::move(psi), d, opt.ascent_steps));
  }
  return best;
}

double induced_norm(const ComplexMatrix& s, NormKind kind, const SampledNormOptions& opt) {
  if (kind == NormKind::spectral_superop) return operator_norm(s);
  return sampled_1to1_norm(s, opt);
}

}  // namespace zeno
