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

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zeno/cli.hpp"
#include "zeno/counting.hpp"
#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/spectral.hpp"

namespace zeno::cli {
namespace {

using nlohmann::json;

constexpr long long kCountingTableMaxN = 1000;
// Each brute-force cell enumerates 2^n strings.
constexpr long long kBruteColumnMaxN = 16;

double parse_real(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw InvalidInput("cannot parse complex number '" + whole + "'");
  }
  return v;
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw InvalidInput("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  const double re = re_part.empty() ? 0.0 : parse_real(re_part, text);
  return {re, parse_real(im_part, text)};
}

ComplexMatrix parse_matrix_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("matrix file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("matrix file: top level must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& k = it.key();
    if (k != "rows" && k != "cols" && k != "re" && k != "im") {
      throw InvalidInput("matrix file: unknown key '" + k + "'");
    }
  }
  for (const char* k : {"rows", "cols", "re"}) {
    if (!doc.contains(k)) throw InvalidInput(std::string("matrix file: '") + k + "' missing");
  }
  if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned()) {
    throw InvalidInput("matrix file: rows and cols must be non-negative integers");
  }
  const std::size_t rows = doc["rows"].get<std::size_t>();
  const std::size_t cols = doc["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0 || rows > 4096 || cols > 4096) {
    throw InvalidInput("matrix file: rows and cols must lie in [1, 4096]");
  }
  auto read = [&](const char* key) {
    std::vector<double> v;
    if (!doc.contains(key)) return std::vector<double>(rows * cols, 0.0);
    const json& a = doc[key];
    if (!a.is_array() || a.size() != rows * cols) {
      throw InvalidInput(std::string("matrix file: '") + key + "' must hold rows*cols numbers");
    }
    for (const json& e : a) {
      if (!e.is_number()) throw InvalidInput(std::string("matrix file: '") + key + "' entry is not a number");
      v.push_back(e.get<double>());
    }
    return v;
  };
  const std::vector<double> re = read("re");
  const std::vector<double> im = read("im");
  std::vector<cplx> entries(rows * cols);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im[k]};
  return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_json(ss.str());
}

std::string matrix_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (const cplx& z : m.entries()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}}.dump();
}

int cmd_spectral(const std::string& matrix_path, const std::string& center, double radius,
                 std::ostream& out, std::ostream& err) {
  try {
    const ComplexMatrix a = load_matrix_file(matrix_path);
    if (!a.is_square()) throw InvalidInput("spectral: matrix must be square");
    Contour c;
    c.center = parse_complex(center);
    c.radius = radius;
    validate_contour(c);

    const ComplexMatrix p = spectral_projection(a, c);
    std::vector<cplx> inside;
    for (cplx z : eigenvalues(a)) {
      if (std::abs(z - c.center) < c.radius) inside.push_back(z);
    }
    json doc{{"center", complex_json(c.center)},
             {"radius", c.radius},
             {"projection", json::parse(matrix_json(p))},
             {"rank", std::llround(p.trace().real())}};
    json eig = json::array();
    for (cplx z : inside) eig.push_back(complex_json(z));
    doc["eigenvalues_inside"] = eig;
    // The quasinilpotent is only meaningful around a single eigenvalue.
    bool single = !inside.empty();
    for (cplx z : inside) single = single && std::abs(z - inside.front()) <= 1e-6;
    if (single) {
      cplx mean = 0.0;
      for (cplx z : inside) mean += z;
      mean /= static_cast<double>(inside.size());
      const ComplexMatrix n = quasinilpotent(a, mean, c);
      doc["quasinilpotent"] = json::parse(matrix_json(n));
      doc["quasinilpotent_norm"] = operator_norm(n);
    }
    out << doc.dump(2) << "\n";
    return kOk;
  } catch (...) {
    return exit_code_for_current_exception(err, "spectral: " + matrix_path);
  }
}

int cmd_counting(long long n, std::ostream& out, std::ostream& err) {
  try {
    if (n < 1) throw InvalidInput("counting: n must be >= 1");
    if (n > kCountingTableMaxN) {
      throw ResourceLimit("counting: table limited to n <= " + std::to_string(kCountingTableMaxN));
    }
    const bool brute = n <= kBruteColumnMaxN;
    std::ostringstream table;
    table << "k,j,closed_form,brute_force\n";
    bool mismatch = false;
    for (long long k = 0; k <= n; ++k) {
      for (long long j = 0; j < n; ++j) {
        const std::uint64_t cf = counting_closed_form(j, n, k);
        table << k << ',' << j << ',' << cf << ',';
        if (brute) {
          const std::uint64_t bf = counting_brute_force(j, n, k);
          table << bf;
          if (bf != cf) {
            mismatch = true;
            err << "counting: closed form " << cf << " != brute force " << bf << " at (j, n, k) = ("
                << j << ", " << n << ", " << k << ")\n";
          }
        }
        table << '\n';
      }
    }
    out << table.str();
    return mismatch ? kViolated : kOk;
  } catch (...) {
    return exit_code_for_current_exception(err, "counting");
  }
}

}  // namespace zeno::cli
