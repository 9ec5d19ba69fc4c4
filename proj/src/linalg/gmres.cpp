// Copyright 2026 The scatterlab Authors.
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

#include "scatterlab/linalg/gmres.hpp"

#include <algorithm>
#include <cmath>

#include "scatterlab/error.hpp"

namespace scatterlab::linalg {

namespace {

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double norm_inf(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s = std::max(s, std::abs(z));
  return s;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

struct Rotation {
  double c = 1.0;
  Complex s = 0.0;

  void apply(Complex& top, Complex& bottom) const {
    const Complex t = c * top + s * bottom;
    bottom = -std::conj(s) * top + c * bottom;
    top = t;
  }
};

Rotation make_rotation(Complex a, Complex b) {
  if (b == Complex(0.0)) return {1.0, 0.0};
  if (a == Complex(0.0)) return {0.0, 1.0};
  const double abs_a = std::abs(a);
  const double rho = std::hypot(abs_a, std::abs(b));
  return {abs_a / rho, (a / abs_a) * std::conj(b) / rho};
}

}  // namespace

GmresResult gmres(const LinearOperator& apply, std::span<const Complex> b, const GmresOptions& options,
                  std::span<const Complex> x0) {
  if (options.restart < 1 || options.max_iterations < 0 || !(options.tolerance > 0.0)) {
    throw InvalidArgument("gmres: restart >= 1, max_iterations >= 0 and tolerance > 0 required");
  }
  const std::size_t n = b.size();
  GmresResult out;
  if (!x0.empty() && x0.size() != n) throw InvalidArgument("gmres: initial guess has wrong length");
  out.x.assign(x0.empty() ? b.begin() : x0.begin(), x0.empty() ? b.end() : x0.end());

  const double b_inf = norm_inf(b);
  if (b_inf == 0.0) {
    std::fill(out.x.begin(), out.x.end(), Complex(0.0));
    out.converged = true;
    return out;
  }
  const double target = options.tolerance * b_inf;
  const auto m = static_cast<std::size_t>(options.restart);

  std::vector<Complex> r(n);
  std::vector<std::vector<Complex>> basis(m + 1, std::vector<Complex>(n));
  std::vector<std::vector<Complex>> h(m + 1, std::vector<Complex>(m, 0.0));
  std::vector<Rotation> rot(m);
  std::vector<Complex> g(m + 1);

  for (;;) {
    apply(out.x, r);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    const double beta = norm2(r);
    out.relative_residual = norm_inf(r) / b_inf;
    if (beta <= target) {
      out.converged = true;
      break;
    }
    if (out.iterations >= options.max_iterations) break;

    for (std::size_t i = 0; i < n; ++i) basis[0][i] = r[i] / beta;
    std::fill(g.begin(), g.end(), Complex(0.0));
    g[0] = beta;
    std::size_t steps = 0;
    for (std::size_t j = 0; j < m && out.iterations < options.max_iterations; ++j) {
      std::vector<Complex>& w = basis[j + 1];
      apply(basis[j], w);
      ++out.iterations;
      for (std::size_t i = 0; i <= j; ++i) {
        const Complex hij = inner(basis[i], w);
        h[i][j] = hij;
        for (std::size_t t = 0; t < n; ++t) w[t] -= hij * basis[i][t];
      }
      const double h_next = norm2(w);
      Complex sub = h_next;
      for (std::size_t i = 0; i < j; ++i) rot[i].apply(h[i][j], h[i + 1][j]);
      rot[j] = make_rotation(h[j][j], sub);
      rot[j].apply(h[j][j], sub);
      rot[j].apply(g[j], g[j + 1]);
      steps = j + 1;
      const double estimate = std::abs(g[j + 1]);
      out.residual_history.push_back(estimate / b_inf);
      if (h_next == 0.0 || estimate <= target) break;
      for (std::size_t t = 0; t < n; ++t) w[t] /= h_next;
    }

    std::vector<Complex> y(steps);
    for (std::size_t i = steps; i-- > 0;) {
      Complex s = g[i];
      for (std::size_t l = i + 1; l < steps; ++l) s -= h[i][l] * y[l];
      y[i] = s / h[i][i];
    }
    for (std::size_t i = 0; i < steps; ++i) {
      for (std::size_t t = 0; t < n; ++t) out.x[t] += y[i] * basis[i][t];
    }
  }
  return out;
}

}  // namespace scatterlab::linalg
