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

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <doctest.h>

#include "scatterlab/core/field_catalog.hpp"
#include "scatterlab/core/green.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/oned/oned.hpp"

using namespace scatterlab;
using namespace scatterlab::oned;

namespace {

constexpr Complex kI{0.0, 1.0};

ScattererCloud line_cloud(std::vector<double> xs, double a, std::vector<double> strengths) {
  ScattererCloud c;
  c.dim = 1;
  c.radius = a;
  for (double x : xs) c.centers.push_back({x, 0.0, 0.0});
  c.strengths = std::move(strengths);
  return c;
}

}  // namespace

TEST_SUITE("oned") {

TEST_CASE("transfer matrix: free line and single well") {
  const auto free = transfer_matrix_solve(PiecewisePotential1D::constant(0.0, 1.0, 0.0), WaveContext1D(1.0));
  CHECK(free.reflection() == Complex(0.0));
  CHECK(std::abs(free.transmission() - 1.0) < 1e-15);

  const auto well = transfer_matrix_solve(PiecewisePotential1D::constant(0.0, 1.0, -1.0), WaveContext1D(1.0));
  // 1 / (1 + sin^2(sqrt 2) / 8)
  CHECK(std::norm(well.transmission()) == doctest::Approx(0.891297217141772953).epsilon(1e-13));
  CHECK(std::abs(std::norm(well.reflection()) + std::norm(well.transmission()) - 1.0) < 1e-13);
}

TEST_CASE("transfer matrix: flux for random steps, barriers above k^2 and k^2 = q") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> width(0.0, 0.4), height(-30.0, 30.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> breaks{-0.3};
    std::vector<double> values;
    for (int j = 0; j < 1 + trial % 9; ++j) {
      breaks.push_back(breaks.back() + width(rng));
      values.push_back(height(rng));
    }
    const double k = 0.3 + 0.05 * trial;
    const auto sol = transfer_matrix_solve(PiecewisePotential1D(breaks, values), WaveContext1D(k, trial % 2 ? 1 : -1));
    CHECK(std::abs(std::norm(sol.reflection()) + std::norm(sol.transmission()) - 1.0) <= 1e-12);
  }
  const auto tuned = transfer_matrix_solve(PiecewisePotential1D::constant(0.0, 0.7, 4.0), WaveContext1D(2.0));
  CHECK(std::abs(std::norm(tuned.reflection()) + std::norm(tuned.transmission()) - 1.0) <= 1e-12);
}

TEST_CASE("transfer matrix: field is continuous with the outgoing form outside") {
  const PiecewisePotential1D q({0.0, 0.2, 0.5, 0.9}, {-2.0, 3.0, -0.5});
  const WaveContext1D ctx(1.7);
  const auto sol = transfer_matrix_solve(q, ctx);
  for (double b : q.breakpoints()) {
    CHECK(std::abs(sol.field(std::nextafter(b, -1.0)) - sol.field(std::nextafter(b, 2.0))) < 1e-12);
  }
  const double x = 2.5, y = -1.5;
  CHECK(std::abs(sol.field(x) - sol.transmission() * ctx.incident(x)) < 1e-13);
  CHECK(std::abs(sol.field(y) - ctx.incident(y) - sol.reflection() * std::exp(-kI * ctx.k * y)) < 1e-13);
  // Reversing the potential and the incidence direction preserves t.
  const auto flipped = transfer_matrix_solve(q.mirrored(), WaveContext1D(1.7, -1));
  CHECK(std::abs(std::abs(flipped.transmission()) - std::abs(sol.transmission())) < 1e-14);
}

TEST_CASE("point scatterers: single center and free propagation") {
  const WaveContext1D ctx(1.0);
  const auto one = solve_fl_1d(line_cloud({0.3}, 0.01, {2.0}), ctx);
  CHECK(std::abs(one.values()[0] - ctx.incident(0.3) / (1.0 + kI * 2.0 * 0.01 / 1.0)) < 1e-15);

  const auto zero = solve_fl_1d(line_cloud({0.1, 0.4, 0.8}, 0.01, {0.0, 0.0, 0.0}), ctx);
  for (std::size_t m = 0; m < 3; ++m) CHECK(zero.values()[m] == ctx.incident(zero.cloud().centers[m].x));
}

TEST_CASE("point scatterers agree with a system assembled from green1d") {
  const std::vector<double> xs{0.05, 0.21, 0.33, 0.52, 0.70, 0.95};
  const std::vector<double> A{-3.0, 1.0, -2.0, 4.0, -1.0, 0.5};
  const double a = 0.02, k = 2.3;
  const WaveContext1D ctx(k);
  const auto sys = solve_fl_1d(line_cloud(xs, a, A), ctx);

  // u_j + sum_m g(x_j, x_m) A_m 2a u_m = u0(x_j), g = -exp(ik|x-y|)/(2ik).
  const Eigen::Index n = Eigen::Index(xs.size());
  Eigen::MatrixXcd L(n, n);
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    rhs(j) = ctx.incident(xs[j]);
    for (Eigen::Index m = 0; m < n; ++m) L(j, m) = (j == m ? 1.0 : 0.0) + green1d(xs[j], xs[m], k) * A[m] * 2.0 * a;
  }
  const Eigen::VectorXcd ref = L.partialPivLu().solve(rhs);
  for (Eigen::Index j = 0; j < n; ++j) CHECK(std::abs(sys.values()[j] - ref(j)) < 1e-14);
  CHECK(sys.residual() <= 1e-10);
  const double x = 0.6;
  Complex field = ctx.incident(x);
  for (Eigen::Index m = 0; m < n; ++m) field -= green1d(x, xs[m], k) * A[m] * 2.0 * a * ref(m);
  CHECK(std::abs(sys.field(x) - field) < 1e-14);
}

TEST_CASE("effective equation: zero, square well and Born regime") {
  const WaveContext1D ctx(2.0);
  const auto zero = solve_ls_1d(catalog::constant(0.0), Interval1D(0.0, 1.0), ctx, 1e-2);
  for (double x : {-0.5, 0.0, 0.37, 1.0, 2.0}) CHECK(zero.field(x) == ctx.incident(x));

  const auto square = PiecewisePotential1D::constant(0.0, 1.0, -1.0);
  const auto ls = solve_ls_1d(square, ctx, 1e-3);
  const auto tm = transfer_matrix_solve(square, ctx);
  const double xr = 1.5;
  const Complex t_ls = ls.field(xr) / ctx.incident(xr);
  CHECK(std::abs(t_ls - tm.transmission()) <= 1e-4);

  // First Born term for constant q0 on (0,1):
  // u_B(x) = q0/(2ik) [x e^{ikx} + e^{-ikx}(e^{2ik} - e^{2ikx})/(2ik)], 0 <= x <= 1.
  const double q0 = 1e-3, k = 1.0;
  const WaveContext1D c1(k);
  const auto weak = solve_ls_1d(PiecewisePotential1D::constant(0.0, 1.0, q0), c1, 1e-3);
  for (double x = 0.0; x <= 1.0; x += 0.125) {
    const Complex e = std::exp(kI * k * x);
    const Complex born = q0 / (2.0 * kI * k) * (x * e + (std::exp(2.0 * kI * k) - e * e) / (e * 2.0 * kI * k));
    CHECK(std::abs(weak.field(x) - (c1.incident(x) + born)) <= 1e-6);
  }
  CHECK_THROWS_AS(solve_ls_1d(square, WaveContext1D(5.0), 0.1), ResolutionError);
}

TEST_CASE("converge_1d: zero potential and monotone convergence") {
  const std::vector<double> radii{1e-2, 5e-3, 2.5e-3};
  const WaveContext1D ctx(1.0);
  const auto zero = converge_1d(catalog::constant(0.0), Interval1D(0.0, 1.0), FactorizationStrategy::constant_density,
                                0.25, radii, ctx);
  for (const auto& row : zero) {
    CHECK(row.sup_error_vs_ue == 0.0);
    CHECK(row.sup_error_vs_oracle == 0.0);
    CHECK(row.sup_error_oracle_vs_ue == 0.0);
  }
  const auto rows = converge_1d(catalog::constant(-0.5), Interval1D(0.0, 1.0), FactorizationStrategy::constant_density,
                                0.25, radii, ctx);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].sup_error_vs_ue < rows[i - 1].sup_error_vs_ue);
    CHECK(rows[i].sup_error_oracle_vs_ue < rows[i - 1].sup_error_oracle_vs_ue);
    CHECK(std::abs(double(rows[i].count) - 2.0 * double(rows[i - 1].count)) <= 1.0);
  }
}

}  // TEST_SUITE
