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

#include "zeno/chernoff.hpp"

#include <cmath>
#include <sstream>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"

namespace zeno {

namespace {

void require_contraction_pair(const ComplexMatrix& c, long long n, const ComplexMatrix& x,
                              const char* op) {
  if (c.empty() || !c.is_square()) throw InvalidInput(std::string(op) + ": c must be square");
  if (n < 1) throw InvalidInput(std::string(op) + ": n must be >= 1");
  if (x.cols() != 1 || x.rows() != c.rows()) {
    throw InvalidInput(std::string(op) + ": x must be a column of matching dimension");
  }
  const double norm = operator_norm(c);
  if (norm > 1.0 + 1e-9) {
    throw InvalidInput(std::string(op) + ": c is not a contraction (||c|| = " +
                       std::to_string(norm) + ")");
  }
}

std::string witness(const char* op, std::size_t dim, long long n) {
  std::ostringstream os;
  os << op << " dim=" << dim << " n=" << n;
  return os.str();
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 1.0 : static_cast<double>(i) / (count - 1);
    out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, f);
  }
  out.back() = hi;
  return out;
}

}  // namespace

InequalityReport chernoff_sqrt_n(const ComplexMatrix& c, long long n, const ComplexMatrix& x) {
  require_contraction_pair(c, n, x, "chernoff_sqrt_n");
  const ComplexMatrix cm = c - ComplexMatrix::identity(c.rows());
  const ComplexMatrix lhs_vec =
      matrix_power(c, n) * x - matrix_exp(static_cast<double>(n) * cm) * x;
  return make_report(vector_norm(lhs_vec), std::sqrt(static_cast<double>(n)) * vector_norm(cm * x),
                     witness("chernoff_sqrt_n", c.rows(), n));
}

InequalityReport chernoff_modified(const ComplexMatrix& c, long long n, const ComplexMatrix& x) {
  require_contraction_pair(c, n, x, "chernoff_modified");
  const ComplexMatrix cm = c - ComplexMatrix::identity(c.rows());
  const ComplexMatrix lhs_vec = (matrix_power(c, n) - matrix_exp(static_cast<double>(n) * cm)) * x;
  return make_report(vector_norm(lhs_vec),
                     0.5 * static_cast<double>(n) * vector_norm(cm * (cm * x)),
                     witness("chernoff_modified", c.rows(), n));
}

InequalityReport chernoff_approx_modified(const MatrixPath& c_map, const MatrixPath& p_map,
                                          const ComplexMatrix& p, double v, double w,
                                          long long n) {
  if (n < 1) throw InvalidInput("chernoff_approx_modified: n must be >= 1");
  if (!(v >= 0.0) || !(w >= 0.0)) throw InvalidInput("chernoff_approx_modified: v, w must be >= 0");
  const double pn = operator_norm(p);
  if (std::abs(pn - 1.0) > 1e-9) {
    throw InvalidInput("chernoff_approx_modified: hypothesis ||P|| = 1 fails (" +
                       std::to_string(pn) + ")");
  }
  const double h = 1.0 / static_cast<double>(n);
  for (double t : geometric_grid(1e-3 * h, h, kPreconditionSamples)) {
    const ComplexMatrix ct = c_map(t);
    const ComplexMatrix pt = p_map(t);
    const double scale = std::max(1.0, operator_norm(pt));
    if (operator_norm(pt * pt - pt) > 1e-8 * scale * scale) {
      throw InvalidInput("chernoff_approx_modified: hypothesis P(t)^2 = P(t) fails at t = " +
                         std::to_string(t));
    }
    if (operator_norm(pt * ct - ct) > 1e-8 * scale || operator_norm(ct * pt - ct) > 1e-8 * scale) {
      throw InvalidInput("chernoff_approx_modified: hypothesis P(t)C(t) = C(t)P(t) = C(t) "
                         "fails at t = " + std::to_string(t));
    }
    if (operator_norm(pt - p) > t * v * (1.0 + 1e-9) + 1e-12) {
      throw InvalidInput("chernoff_approx_modified: hypothesis ||P(t) - P|| <= tv fails at t = " +
                         std::to_string(t));
    }
    if (operator_norm(ct - pt) > t * w * (1.0 + 1e-9) + 1e-12) {
      throw InvalidInput("chernoff_approx_modified: hypothesis ||C(t) - P(t)|| <= tw fails at "
                         "t = " + std::to_string(t));
    }
  }
  const ComplexMatrix c1 = c_map(h);
  const ComplexMatrix p1 = p_map(h);
  const ComplexMatrix gap = c1 - p1;
  const ComplexMatrix lhs_m =
      matrix_power(c1, n) - matrix_exp(static_cast<double>(n) * gap) * p1;
  const double rhs = (w * w / (2.0 * static_cast<double>(n))) * std::exp(v + w);
  std::ostringstream os;
  os << "chernoff_approx_modified dim=" << p.rows() << " n=" << n << " v=" << v << " w=" << w;
  return make_report(operator_norm(lhs_m), rhs, os.str());
}

InequalityReport product_formula_bound(const MatrixPath& f, const ComplexMatrix& l, double t,
                                       long long n) {
  if (n < 1) throw InvalidInput("product_formula_bound: n must be >= 1");
  if (!(t >= 0.0)) throw InvalidInput("product_formula_bound: t must be >= 0");
  const ComplexMatrix id = ComplexMatrix::identity(l.rows());
  const ComplexMatrix f0 = f(0.0);
  if (!same_shape(f0, l) || operator_norm(f0 - id) > 1e-12) {
    throw InvalidInput("product_formula_bound: f(0) must be the identity");
  }
  const double step = t / static_cast<double>(n);
  if (step > 0.0) {
    for (double s : geometric_grid(1e-3 * step, std::max(t, step), kPreconditionSamples)) {
      const double norm = operator_norm(f(s));
      if (norm > 1.0 + 1e-9) {
        throw InvalidInput("product_formula_bound: ||f(s)|| = " + std::to_string(norm) +
                           " exceeds 1 at s = " + std::to_string(s));
      }
    }
  }
  const ComplexMatrix fs = f(step);
  const ComplexMatrix fm = fs - id;
  const double nn = static_cast<double>(n);
  const double lhs = operator_norm(matrix_power(fs, n) - matrix_exp(t * l));
  ComplexMatrix gen_err = nn * fm;
  gen_err.add_scaled(-t, l);
  const double fmn = operator_norm(fm);
  return make_report(lhs, operator_norm(gen_err) + 0.5 * nn * fmn * fmn,
                     witness("product_formula_bound", l.rows(), n));
}

double trotter_envelope(const ComplexMatrix& l1, const ComplexMatrix& l2, long long n) {
  const double a = operator_norm(l1);
  const double b = operator_norm(l2);
  const double nn = static_cast<double>(n);
  const ComplexMatrix f = matrix_exp((1.0 / nn) * l1) * matrix_exp((1.0 / nn) * l2) -
                          ComplexMatrix::identity(l1.rows());
  const double fm = operator_norm(f);
  return (a * b + 2.0 * a * a + 2.0 * b * b) / nn + 0.5 * nn * fm * fm;
}

ErrorSeries trotter_rate(const GeneratorSpec& l1, const GeneratorSpec& l2,
                         const std::vector<long long>& n_grid) {
  if (!same_shape(l1.superoperator, l2.superoperator)) {
    throw InvalidInput("trotter_rate: generator dimensions differ");
  }
  if (!l1.certificate.passed || !l2.certificate.passed) {
    throw InvalidInput("trotter_rate: both generators must be certified contraction generators");
  }
  if (n_grid.empty()) throw InvalidInput("trotter_rate: empty n grid");
  ErrorSeries series;
  series.t = 1.0;
  series.instance_label = "trotter";
  const ComplexMatrix target = matrix_exp(l1.superoperator + l2.superoperator);
  long long prev = 0;
  for (long long n : n_grid) {
    if (n <= prev) throw InvalidInput("trotter_rate: n grid must be strictly increasing and >= 1");
    prev = n;
    const double h = 1.0 / static_cast<double>(n);
    const ComplexMatrix step = matrix_exp(h * l1.superoperator) * matrix_exp(h * l2.superoperator);
    ErrorEntry e;
    e.n = n;
    e.error = operator_norm(matrix_power(step, n) - target);
    e.bound = trotter_envelope(l1.superoperator, l2.superoperator, n);
    series.entries.push_back(std::move(e));
  }
  return series;
}

}  // namespace zeno
