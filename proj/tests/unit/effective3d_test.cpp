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

#include <array>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <doctest.h>

#include "scatterlab/core/field_catalog.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/effective3d/lippmann_schwinger.hpp"
#include "scatterlab/effective3d/partial_wave.hpp"
#include "scatterlab/effective3d/sphere_quadrature.hpp"

using namespace scatterlab;

namespace {

constexpr double kR = 0.5;
const BoundedDomain kBall = BoundedDomain::ball({0, 0, 0}, kR);

std::vector<Vec3> sphere_points(double radius, int count) {
  std::vector<Vec3> pts;
  for (const auto& d : fibonacci_directions(std::size_t(count))) pts.push_back(radius * d);
  return pts;
}

// Rotations of the cube: signed permutation matrices with determinant +1.
std::vector<std::array<std::array<int, 3>, 3>> cube_rotations() {
  std::vector<std::array<std::array<int, 3>, 3>> out;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    for (int signs = 0; signs < 8; ++signs) {
      std::array<std::array<int, 3>, 3> m{};
      for (int r = 0; r < 3; ++r) m[r][p[r]] = (signs >> r) & 1 ? -1 : 1;
      const int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      if (det == 1) out.push_back(m);
    }
  }
  return out;
}

Vec3 rotate(const std::array<std::array<int, 3>, 3>& m, const Vec3& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z, m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

}  // namespace

TEST_SUITE("effective3d") {

TEST_CASE("discretization weights") {
  const auto box = BoundedDomain::box({0, 0, 0}, {1, 0.5, 0.75});
  const double h = 1.0 / 16.0;
  const auto disc = discretize_ls(catalog::constant(-1.0), box, h);
  CHECK(disc.total_weight() == doctest::Approx(box.volume()).epsilon(1e-10));
  const double a_eff = std::cbrt(3.0 * h * h * h / (4.0 * kPi));
  CHECK(disc.self_radius == doctest::Approx(a_eff).epsilon(1e-15));
  CHECK(disc.self_weight == doctest::Approx(2.0 * kPi * a_eff * a_eff).epsilon(1e-15));
  CHECK(disc.active.size() == disc.grid.size());
}

TEST_CASE("zero potential returns the incident wave") {
  const WaveContext ctx(1.0, {0, 0.6, 0.8});
  const auto sol = solve_ls(catalog::constant(0.0), kBall, ctx, kR / 8.0);
  for (std::size_t i = 0; i < sol.field().values.size(); ++i)
    CHECK(sol.field().values[i] == ctx.incident(sol.field().grid.node(i)));
  for (const auto& v : far_field_effective(sol, fibonacci_directions(10)).values) CHECK(v == Complex(0.0));
}

TEST_CASE("well: field on a probe sphere and amplitude against partial waves") {
  const WaveContext ctx(1.0, {0, 0, 1});
  const auto sol = solve_ls(catalog::spherical_well(-1.0, kR, {0, 0, 0}), kBall, ctx, kR / 16.0);
  const auto oracle = partial_wave_solve(-1.0, kR, 1.0, 14);
  double diff = 0.0, peak = 0.0;
  for (const auto& p : sphere_points(2.0 * kR, 100)) {
    diff = std::max(diff, std::abs(sol.evaluate(p) - oracle.field(p, ctx.alpha())));
    peak = std::max(peak, std::abs(oracle.field(p, ctx.alpha())));
  }
  CHECK(diff <= 0.01 * peak);

  double adiff = 0.0, apeak = 0.0;
  for (int i = 0; i <= 36; ++i) {
    const double th = kPi * i / 36.0;
    const Vec3 beta{std::sin(th), 0.0, std::cos(th)};
    adiff = std::max(adiff, std::abs(sol.amplitude(beta) - oracle.amplitude(std::cos(th))));
    apeak = std::max(apeak, std::abs(oracle.amplitude(std::cos(th))));
  }
  CHECK(adiff <= 0.01 * apeak);

  const double optical = optical_theorem_residual([&](const Vec3& b) { return sol.amplitude(b); }, ctx.alpha(), 1.0,
                                                  product_sphere_quadrature(16));
  CHECK(product_sphere_quadrature(16).nodes.size() >= 302);
  CHECK(optical <= 0.01);
}

TEST_CASE("grid nodes satisfy the discrete equation") {
  const WaveContext ctx(1.0, {0, 0, 1});
  const auto sol = solve_ls(catalog::gaussian_bump(-1.0, 0.25, {0.5, 0.5, 0.5}),
                            BoundedDomain::box({0, 0, 0}, {1, 1, 1}), ctx, 1.0 / 16.0);
  const auto& f = sol.field();
  double worst = 0.0;
  for (std::size_t i = 0; i < f.values.size(); i += 37) worst = std::max(worst, std::abs(sol.evaluate(f.grid.node(i)) - f.values[i]));
  CHECK(worst <= 10.0 * std::max(sol.diagnostics().residual, 1e-12));
}

TEST_CASE("grid refinement contracts") {
  const WaveContext ctx(1.0, {0, 0, 1});
  const auto q = catalog::spherical_well(-1.0, kR, {0, 0, 0});
  const auto probes = sphere_points(2.0 * kR, 60);
  std::vector<std::vector<Complex>> fields;
  for (double h : {kR / 4.0, kR / 8.0, kR / 16.0}) fields.push_back(solve_ls(q, kBall, ctx, h).evaluate(probes));
  auto sup = [&](int a, int b) {
    double d = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) d = std::max(d, std::abs(fields[a][i] - fields[b][i]));
    return d;
  };
  CHECK(sup(0, 1) >= 1.5 * sup(1, 2));
}

TEST_CASE("weak well: first Born term") {
  // Born amplitude of a uniform ball: -q0 (sin QR - QR cos QR) / Q^3, Q = 2k sin(theta/2).
  const double q0 = 0.01, k = 1.0;
  const WaveContext ctx(k, {0, 0, 1});
  const auto sol = solve_ls(catalog::spherical_well(q0, kR, {0, 0, 0}), kBall, ctx, kR / 16.0);
  double diff = 0.0, peak = 0.0;
  for (int i = 0; i <= 18; ++i) {
    const double th = kPi * i / 18.0;
    const double Q = 2.0 * k * std::sin(th / 2.0);
    const double born = Q < 1e-6 ? -q0 * kR * kR * kR / 3.0
                                 : -q0 * (std::sin(Q * kR) - Q * kR * std::cos(Q * kR)) / (Q * Q * Q);
    diff = std::max(diff, std::abs(sol.amplitude({std::sin(th), 0.0, std::cos(th)}) - born));
    peak = std::max(peak, std::abs(born));
  }
  CHECK(diff <= 1e-3 * peak);

  // Near field outside the well: -integral g(x,y) q0 u0(y) dy by Gauss-Legendre
  // in spherical coordinates (the integrand is smooth for |x| > R).
  using GL = boost::math::quadrature::gauss<double, 30>;
  auto born_part = [&](const Vec3& x, bool imag) {
    return GL::integrate([&](double r) {
      return r * r * GL::integrate([&](double c) {
        const double s = std::sqrt(1.0 - c * c);
        return GL::integrate([&](double phi) {
          const Vec3 y{r * s * std::cos(phi), r * s * std::sin(phi), r * c};
          const double d = distance(x, y);
          const Complex v = std::exp(Complex(0.0, k * d)) / (4.0 * kPi * d) * q0 * ctx.incident(y);
          return imag ? v.imag() : v.real();
        }, 0.0, 2.0 * kPi);
      }, -1.0, 1.0);
    }, 0.0, kR);
  };
  for (const Vec3 x : {Vec3{0.0, 0.0, 1.0}, Vec3{0.8, 0.0, -0.6}, Vec3{0.0, 1.2, 0.3}}) {
    const Complex first = -Complex(born_part(x, false), born_part(x, true));
    const Complex scattered = sol.evaluate(x) - ctx.incident(x);
    CHECK(std::abs(scattered - first) <= 1e-3 * std::abs(first));
  }
}

TEST_CASE("cube rotations leave the well amplitude invariant") {
  const double k = 1.3;
  const Vec3 alpha = Vec3{1.0, 2.0, 2.0} * (1.0 / 3.0);
  const Vec3 beta = Vec3{0.6, 0.0, 0.8};
  const auto q = catalog::spherical_well(-1.0, kR, {0, 0, 0});
  const Complex ref = solve_ls(q, kBall, WaveContext(k, alpha), kR / 8.0).amplitude(beta);
  const auto rots = cube_rotations();
  REQUIRE(rots.size() == 24);
  for (std::size_t i = 1; i < rots.size(); i += 3) {
    const auto sol = solve_ls(q, kBall, WaveContext(k, rotate(rots[i], alpha)), kR / 8.0);
    CHECK(std::abs(sol.amplitude(rotate(rots[i], beta)) - ref) <= 1e-8 * std::abs(ref));
  }
}

TEST_CASE("reciprocity for an asymmetric potential") {
  const auto q = catalog::gaussian_bump(-1.0, 0.2, {0.3, 0.6, 0.45});
  const auto box = BoundedDomain::box({0, 0, 0}, {1, 1, 1});
  const Vec3 alpha = Vec3{1.0, 2.0, 2.0} * (1.0 / 3.0);
  const Vec3 beta = Vec3{-2.0, 1.0, 2.0} * (1.0 / 3.0);
  const Complex f = solve_ls(q, box, WaveContext(1.5, alpha), 1.0 / 16.0).amplitude(beta);
  const Complex b = solve_ls(q, box, WaveContext(1.5, -beta), 1.0 / 16.0).amplitude(-alpha);
  CHECK(std::abs(f - b) <= 1e-6 * std::abs(f));
}

TEST_CASE("dense and iterative effective solves agree") {
  const auto q = catalog::gaussian_bump(-1.0, 0.25, {0.5, 0.5, 0.5});
  const auto box = BoundedDomain::box({0, 0, 0}, {1, 1, 1});
  LsOptions dense;
  dense.solver.mode = SolveMode::dense;
  const WaveContext ctx(1.0, {0, 0, 1});
  const auto a = solve_ls(q, box, ctx, 1.0 / 8.0, dense);
  const auto b = solve_ls(q, box, ctx, 1.0 / 8.0);
  double d = 0.0;
  for (std::size_t i = 0; i < a.field().values.size(); ++i) d = std::max(d, std::abs(a.field().values[i] - b.field().values[i]));
  CHECK(d <= 1e-7);
}

TEST_CASE("resolution guard") {
  CHECK_THROWS_AS(solve_ls(catalog::constant(-1.0), kBall, WaveContext(10.0, {0, 0, 1}), 0.1), ResolutionError);
}

TEST_CASE("partial waves") {
  const auto zero = partial_wave_solve(0.0, kR, 1.0, 10);
  for (double d : zero.phase_shifts()) CHECK(d == 0.0);
  CHECK(zero.amplitude(0.3) == Complex(0.0));

  // tan(delta_0 + kR)/k = tan(kappa R)/kappa with kappa = sqrt(2).
  const auto well = partial_wave_solve(-1.0, kR, 1.0, 10);
  CHECK(well.phase_shifts()[0] == doctest::Approx(0.0435240795575883025).epsilon(1e-13));
  for (double d : well.phase_shifts()) CHECK(std::isfinite(d));

  const auto l10 = partial_wave_solve(-1.0, kR, 1.0, 10);
  const auto l14 = partial_wave_solve(-1.0, kR, 1.0, 14);
  for (double c = -1.0; c <= 1.0; c += 0.25) CHECK(std::abs(l10.amplitude(c) - l14.amplitude(c)) < 1e-10);

  const double optical = optical_theorem_residual(
      [&](const Vec3& b) { return l14.amplitude(b, {0, 0, 1}); }, {0, 0, 1}, 1.0, product_sphere_quadrature(24));
  CHECK(optical < 1e-12);

  // Field is continuous across the well surface.
  const Vec3 e{0.0, 0.6, 0.8};
  CHECK(std::abs(l14.field(std::nextafter(kR, 0.0) * e, {0, 0, 1}) - l14.field(std::nextafter(kR, 1.0) * e, {0, 0, 1})) <
        1e-12);
  CHECK_THROWS_AS(partial_wave_solve(4.0, kR, 1.0, 10), RegimeError);
}

}  // TEST_SUITE
