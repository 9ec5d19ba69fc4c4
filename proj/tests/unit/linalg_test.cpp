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

#include "scatterlab/core/green.hpp"
#include "scatterlab/effective3d/grid_convolution.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/linalg/ball_system.hpp"
#include "scatterlab/linalg/gmres.hpp"

using namespace scatterlab;

namespace {

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<Vec3> jittered_lattice(int n, double pitch, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.2 * pitch, 0.2 * pitch);
  std::vector<Vec3> pts;
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) pts.push_back(pitch * Vec3{double(i), double(j), double(l)} + Vec3{u(rng), u(rng), u(rng)});
  return pts;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("gmres matches a direct solve") {
  const int n = 60;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) += Complex(g(rng), g(rng)) * (0.3 / std::sqrt(double(n)));
  Eigen::VectorXcd b(n);
  for (int i = 0; i < n; ++i) b(i) = Complex(g(rng), g(rng));
  const Eigen::VectorXcd ref = A.partialPivLu().solve(b);

  linalg::LinearOperator op = [&](std::span<const Complex> in, std::span<Complex> out) {
    Eigen::Map<const Eigen::VectorXcd> x(in.data(), n);
    Eigen::Map<Eigen::VectorXcd> y(out.data(), n);
    y = A * x;
  };
  // Short restarts force several cycles.
  const auto res = linalg::gmres(op, std::span<const Complex>(b.data(), n), {1e-12, 500, 7});
  CHECK(res.converged);
  CHECK(res.relative_residual <= 1e-12);
  CHECK(max_abs_diff(res.x, std::span<const Complex>(ref.data(), n)) < 1e-10);
  CHECK(res.residual_history.size() == std::size_t(res.iterations));
}

TEST_CASE("gmres reports non-convergence") {
  linalg::LinearOperator rotate = [](std::span<const Complex> in, std::span<Complex> out) {
    // Cyclic shift: GMRES stalls until the Krylov space is complete.
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) out[(i + 1) % n] = in[i];
  };
  std::vector<Complex> b(40, 0.0);
  b[0] = 1.0;
  const auto res = linalg::gmres(rotate, b, {1e-10, 10, 5}, std::vector<Complex>(40, 0.0));
  CHECK_FALSE(res.converged);
  CHECK(res.iterations == 10);
}

TEST_CASE("ball system: single ball algebra") {
  const std::vector<Vec3> c{{0.2, 0.3, 0.4}};
  const BallSystem sys(c, 0.1, {2.0}, 1.0);
  SolveDiagnostics diag;
  const std::vector<Complex> rhs{1.0};
  for (auto mode : {SolveMode::dense, SolveMode::iterative}) {
    SolverOptions opt;
    opt.mode = mode;
    const auto u = sys.solve(rhs, opt, diag);
    CHECK(std::abs(u[0] - 1.0 / 1.01) < 1e-14);
  }
}

TEST_CASE("ball system: matrix-free apply equals the assembled matrix") {
  const auto pts = jittered_lattice(6, 0.1, 9);
  std::vector<double> strengths;
  for (std::size_t m = 0; m < pts.size(); ++m) strengths.push_back(-3.0 + 0.01 * double(m % 17));
  const BallSystem sys(pts, 0.02, strengths, 1.3);
  std::vector<Complex> u(pts.size()), out(pts.size());
  for (std::size_t m = 0; m < u.size(); ++m) u[m] = std::polar(1.0, 0.1 * double(m));
  sys.apply(u, out);
  const Eigen::MatrixXcd L = sys.assemble();
  const Eigen::VectorXcd ref = L * Eigen::Map<const Eigen::VectorXcd>(u.data(), Eigen::Index(u.size()));
  CHECK(max_abs_diff(out, std::span<const Complex>(ref.data(), u.size())) < 1e-13);
  CHECK(L(0, 0) == sys.diagonal(0));
  const double r01 = distance(pts[0], pts[1]);
  const Complex g01 = std::exp(Complex(0.0, 1.3 * r01)) / (4.0 * kPi * r01) * strengths[1] * ball_volume(0.02);
  CHECK(std::abs(L(0, 1) - g01) < 1e-15);
}

TEST_CASE("ball system: dense and iterative agree") {
  const auto pts = jittered_lattice(7, 0.08, 21);  // 343 balls
  std::vector<double> strengths(pts.size(), -4.0);
  const BallSystem sys(pts, 0.02, strengths, 1.0);
  std::vector<Complex> rhs(pts.size());
  for (std::size_t m = 0; m < rhs.size(); ++m) rhs[m] = std::polar(1.0, pts[m].z);
  SolveDiagnostics dd, di;
  SolverOptions dense, iter;
  dense.mode = SolveMode::dense;
  iter.mode = SolveMode::iterative;
  const auto ud = sys.solve(rhs, dense, dd);
  const auto ui = sys.solve(rhs, iter, di);
  double scale = 0.0;
  for (const auto& v : ud) scale = std::max(scale, std::abs(v));
  CHECK(max_abs_diff(ud, ui) <= 1e-7 * scale);
  CHECK(dd.residual <= 1e-10);
  CHECK(di.residual <= 1e-8);
}

TEST_CASE("ball system: capacity and solver failures") {
  const auto pts = jittered_lattice(4, 0.1, 1);
  const BallSystem sys(pts, 0.02, std::vector<double>(pts.size(), -100.0), 1.0);
  std::vector<Complex> rhs(pts.size(), 1.0);
  SolveDiagnostics diag;
  SolverOptions capped;
  capped.mode = SolveMode::dense;
  capped.dense_cap = 10;
  CHECK_THROWS_AS(sys.solve(rhs, capped, diag), CapacityError);
  SolverOptions starved;
  starved.tolerance = 1e-14;
  starved.max_iterations = 2;
  try {
    sys.solve(rhs, starved, diag);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK_FALSE(e.residual_history().empty());
  }
}

TEST_CASE("grid convolution equals the ball system operator on a grid") {
  // One ball of volume h^3 per node: off-diagonal terms are h^3 g and the
  // diagonal is 1 + q a_eff^2 / 2, i.e. the convolution with self weight
  // 2 pi a_eff^2 / (4 pi).
  GridSpec grid;
  grid.origin = {0.1, -0.2, 0.0};
  grid.spacing = 0.05;
  grid.extents = {7, 5, 6};
  const double h = grid.spacing;
  const double a_eff = std::cbrt(3.0 * h * h * h / (4.0 * kPi));
  const double k = 2.0;

  std::vector<Vec3> nodes;
  std::vector<double> q;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    nodes.push_back(grid.node(i));
    q.push_back(-1.0 - 0.5 * std::sin(7.0 * double(i)));
  }
  const BallSystem sys(nodes, a_eff, q, k);
  const GridConvolution conv(grid, k, 2.0 * kPi * a_eff * a_eff / (4.0 * kPi));

  std::vector<Complex> u(grid.size()), w(grid.size()), ref(grid.size()), out(grid.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = Complex(std::cos(0.3 * double(i)), std::sin(0.17 * double(i)));
    w[i] = q[i] * u[i];
  }
  sys.apply(u, ref);
  conv.apply(w, out);
  for (std::size_t i = 0; i < u.size(); ++i) out[i] += u[i];
  CHECK(max_abs_diff(out, ref) < 1e-13);

  // Same bits on a second application.
  std::vector<Complex> again(grid.size());
  conv.apply(w, again);
  for (std::size_t i = 0; i < u.size(); ++i) again[i] += u[i];
  CHECK(max_abs_diff(out, again) == 0.0);
}

}  // TEST_SUITE
