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

#include "zeno/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "zeno/error.hpp"
#include "zeno/kernels.hpp"

namespace zeno {

namespace {

using EMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using ERowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMat to_eigen(const ComplexMatrix& a) {
  return Eigen::Map<const ERowMat>(a.data(), static_cast<Eigen::Index>(a.rows()),
                                   static_cast<Eigen::Index>(a.cols()));
}

ComplexMatrix from_eigen(const EMat& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  Eigen::Map<ERowMat>(out.data(), m.rows(), m.cols()) = m;
  return out;
}

void require_nonempty(const ComplexMatrix& a, const char* op) {
  if (a.empty()) throw InvalidInput(std::string(op) + ": dimension-zero matrix");
}

void require_square(const ComplexMatrix& a, const char* op) {
  require_nonempty(a, op);
  if (!a.is_square()) {
    throw InvalidInput(std::string(op) + ": matrix must be square, got " +
                       std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

std::string format_z(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& a) {
  require_nonempty(a, "singular_values");
  Eigen::BDCSVD<EMat> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

double operator_norm_power(const ComplexMatrix& a, const LinalgTolerances& tol) {
  require_nonempty(a, "operator_norm");
  const std::size_t n = a.cols();
  const ComplexMatrix ah = a.adjoint();
  // Deterministic, generic start vector.
  ComplexMatrix v(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    v(i, 0) = cplx(1.0 + 0.37 * std::sin(1.3 * static_cast<double>(i) + 0.1),
                   0.21 * std::cos(0.7 * static_cast<double>(i)));
  }
  v *= 1.0 / vector_norm(v);
  double lambda = 0.0;
  for (int it = 0; it < tol.power_iteration_cap; ++it) {
    ComplexMatrix w = ah * (a * v);
    const double next = vector_norm(w);
    if (next == 0.0) return 0.0;
    w *= 1.0 / next;
    v = std::move(w);
    if (std::abs(next - lambda) <= tol.power_iteration_tol * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

double operator_norm(const ComplexMatrix& a, const LinalgTolerances& tol) {
  require_nonempty(a, "operator_norm");
  if (std::max(a.rows(), a.cols()) > tol.svd_max_dim) return operator_norm_power(a, tol);
  if (a.cols() == 1 || a.rows() == 1) return frobenius_norm(a);
  return singular_values(a).front();
}

double trace_norm(const ComplexMatrix& a) {
  require_square(a, "trace_norm");
  const auto s = singular_values(a);
  double sum = 0.0;
  for (double x : s) sum += x;
  return sum;
}

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) col += std::abs(a(i, j));
    best = std::max(best, col);
  }
  return best;
}

ComplexMatrix matrix_exp(const ComplexMatrix& a) {
  require_square(a, "matrix_exp");
  if (!a.all_finite()) throw InvalidInput("matrix_exp: non-finite entries");
  if (one_norm(a) == 0.0) return ComplexMatrix::identity(a.rows());
  static constexpr double b[] = {64764752532480000.0, 32382376266240000.0,
                                 7771770303897600.0,  1187353796428800.0,
                                 129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,
                                 1323241920.0,        40840800.0,
                                 960960.0,            16380.0,
                                 182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;
  const std::size_t n = a.rows();
  const double norm1 = one_norm(a);
  int s = 0;
  if (norm1 > theta13) s = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  ComplexMatrix x = a;
  if (s > 0) x *= std::ldexp(1.0, -s);

  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix x2 = x * x;
  const ComplexMatrix x4 = x2 * x2;
  const ComplexMatrix x6 = x4 * x2;

  ComplexMatrix inner_u = b[13] * x6;
  inner_u.add_scaled(b[11], x4).add_scaled(b[9], x2);
  ComplexMatrix u_poly = x6 * inner_u;
  u_poly.add_scaled(b[7], x6).add_scaled(b[5], x4).add_scaled(b[3], x2).add_scaled(b[1], id);
  const ComplexMatrix u = x * u_poly;

  ComplexMatrix inner_v = b[12] * x6;
  inner_v.add_scaled(b[10], x4).add_scaled(b[8], x2);
  ComplexMatrix v = x6 * inner_v;
  v.add_scaled(b[6], x6).add_scaled(b[4], x4).add_scaled(b[2], x2).add_scaled(b[0], id);

  ComplexMatrix r = solve(v - u, v + u);
  for (int i = 0; i < s; ++i) r = r * r;
  if (!r.all_finite()) throw NumericalFailure("matrix_exp: overflow");
  return r;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, long long n) {
  require_square(a, "matrix_power");
  if (n < 0) throw InvalidInput("matrix_power: negative exponent");
  ComplexMatrix result = ComplexMatrix::identity(a.rows());
  ComplexMatrix base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ComplexMatrix resolvent(const ComplexMatrix& a, cplx z, const LinalgTolerances& tol) {
  require_square(a, "resolvent");
  EMat shifted = -to_eigen(a);
  shifted.diagonal().array() += z;
  Eigen::PartialPivLU<EMat> lu(shifted);
  const double rcond = lu.rcond();
  if (!(rcond * tol.resolvent_condition_cap >= 1.0)) {
    throw ResolventSingular(z, "resolvent: z = " + format_z(z) +
                                   " is numerically in the spectrum (cond ~ " +
                                   std::to_string(rcond > 0 ? 1.0 / rcond : INFINITY) +
                                   ")");
  }
  ComplexMatrix r = from_eigen(lu.inverse());
  if (!r.all_finite()) throw ResolventSingular(z, "resolvent: non-finite solve at z = " + format_z(z));
  return r;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "solve");
  if (a.rows() != b.rows()) throw InvalidInput("solve: row mismatch");
  Eigen::PartialPivLU<EMat> lu(to_eigen(a));
  return from_eigen(lu.solve(to_eigen(b)));
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  require_square(a, "inverse");
  Eigen::PartialPivLU<EMat> lu(to_eigen(a));
  return from_eigen(lu.inverse());
}

cplx determinant(const ComplexMatrix& a) {
  require_square(a, "determinant");
  return Eigen::PartialPivLU<EMat>(to_eigen(a)).determinant();
}

std::vector<EigenPair> eig(const ComplexMatrix& a, const LinalgTolerances& tol) {
  require_square(a, "eig");
  if (a.rows() > tol.eig_max_dim) {
    throw InvalidInput("eig: dimension " + std::to_string(a.rows()) + " exceeds " +
                       std::to_string(tol.eig_max_dim));
  }
  Eigen::ComplexEigenSolver<EMat> es(to_eigen(a), true);
  if (es.info() != Eigen::Success) throw NumericalFailure("eig: QR iteration did not converge");
  std::vector<EigenPair> out;
  out.reserve(a.rows());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    out.push_back({es.eigenvalues()(i), from_eigen(es.eigenvectors().col(i))});
  }
  return out;
}

std::vector<cplx> eigenvalues(const ComplexMatrix& a, const LinalgTolerances& tol) {
  require_square(a, "eigenvalues");
  if (a.rows() > tol.eig_max_dim) {
    throw InvalidInput("eigenvalues: dimension " + std::to_string(a.rows()) + " exceeds " +
                       std::to_string(tol.eig_max_dim));
  }
  Eigen::ComplexEigenSolver<EMat> es(to_eigen(a), false);
  if (es.info() != Eigen::Success) {
    throw NumericalFailure("eigenvalues: QR iteration did not converge");
  }
  const auto& ev = es.eigenvalues();
  return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

HermitianEigen eigh(const ComplexMatrix& a) {
  require_square(a, "eigh");
  if (hermiticity_defect(a) > 1e-12 * (1.0 + max_abs_entry(a)))
    throw InvalidInput("eigh: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<EMat> es(to_eigen(a));
  if (es.info() != Eigen::Success) throw NumericalFailure("eigh: did not converge");
  HermitianEigen out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  out.vectors = from_eigen(es.eigenvectors());
  return out;
}

ComplexMatrix qr_q(const ComplexMatrix& a) {
  require_nonempty(a, "qr_q");
  if (a.cols() > a.rows()) throw InvalidInput("qr_q: more columns than rows");
  const EMat m = to_eigen(a);
  Eigen::HouseholderQR<EMat> qr(m);
  EMat q = qr.householderQ() * EMat::Identity(m.rows(), m.cols());
  const EMat r = qr.matrixQR().topRows(m.cols()).template triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return from_eigen(q);
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

}  // namespace zeno
