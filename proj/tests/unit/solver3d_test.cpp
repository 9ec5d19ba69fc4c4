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
#include <vector>

#include <doctest.h>

#include "scatterlab/core/field_catalog.hpp"
#include "scatterlab/core/green.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/placement/placement.hpp"
#include "scatterlab/solver3d/foldy_lax.hpp"

using namespace scatterlab;

namespace {

ScattererCloud make_cloud(std::vector<Vec3> centers, double a, std::vector<double> strengths) {
  ScattererCloud c;
  c.radius = a;
  c.centers = std::move(centers);
  c.strengths = std::move(strengths);
  return c;
}

ScattererCloud cube_cloud(double a, double n0, double A0) {
  return place(BoundedDomain::box({0, 0, 0}, {1, 1, 1}), CountingLaw{catalog::constant(n0), a, 3},
               catalog::gaussian_bump(A0, 0.4, {0.3, 0.6, 0.5}));
}

}  // namespace

TEST_SUITE("solver3d") {

TEST_CASE("single scatterer") {
  const auto cloud = make_cloud({{0.0, 0.0, 0.0}}, 0.1, {2.0});
  const WaveContext ctx(1.0, {0, 0, 1});
  const auto sys = assemble_and_solve(cloud, ctx);
  CHECK(std::abs(sys.values()[0] - 1.0 / 1.01) < 1e-14);
  // Isotropic amplitude -(1/4pi) A V u.
  const std::vector<Vec3> dirs{{0, 0, 1}, {1, 0, 0}, {0, -0.6, 0.8}};
  const Complex expected = -(1.0 / (4.0 * kPi)) * 2.0 * ball_volume(0.1) * sys.values()[0];
  for (const auto& v : far_field(sys, dirs).values) CHECK(std::abs(v - expected) < 1e-16);
}

TEST_CASE("zero strengths propagate freely") {
  const auto cloud = cube_cloud(0.04, 0.3, 0.0);
  const WaveContext ctx(1.0, {0.6, 0.0, 0.8});
  const auto sys = assemble_and_solve(cloud, ctx);
  for (std::size_t m = 0; m < cloud.size(); ++m) CHECK(sys.values()[m] == ctx.incident(cloud.centers[m]));
  for (const auto& v : far_field(sys, std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}}).values) CHECK(v == Complex(0.0));
}

TEST_CASE("empty cloud evaluates to the incident wave") {
  const WaveContext ctx(1.5, {0, 1, 0});
  const auto sys = assemble_and_solve(make_cloud({}, 0.01, {}), ctx);
  GridSpec grid;
  grid.origin = {-1, -1, -1};
  grid.spacing = 0.5;
  grid.extents = {5, 5, 5};
  const auto field = evaluate_field(sys, grid);
  REQUIRE(field.values.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(field.values[i] == ctx.incident(grid.node(i)));
}

TEST_CASE("evaluation at a center reproduces the solved value") {
  const auto cloud = cube_cloud(0.04, 0.3, -3.0);
  const auto sys = assemble_and_solve(cloud, WaveContext(1.0, {0, 0, 1}));
  // field(x_j) - u_j is row j of u0 - L u, bounded by the solve residual.
  const double bound = sys.diagnostics().residual + 1e-13;
  for (std::size_t j = 0; j < cloud.size(); j += 97) CHECK(std::abs(sys.field(cloud.centers[j]) - sys.values()[j]) <= bound);
}

TEST_CASE("field is continuous across a ball surface") {
  const auto cloud = cube_cloud(0.04, 0.3, -3.0);
  const auto sys = assemble_and_solve(cloud, WaveContext(1.0, {0, 0, 1}));
  const Vec3 c = cloud.centers[cloud.size() / 2];
  const Vec3 e{0.0, 0.6, 0.8};
  const Complex in = sys.field(c + std::nextafter(cloud.radius, 0.0) * e);
  const Complex out = sys.field(c + std::nextafter(cloud.radius, 1.0) * e);
  CHECK(std::abs(in - out) < 1e-13);
}

TEST_CASE("mirror symmetry for a reflection that fixes alpha") {
  // Reflection x -> -x keeps alpha = z; the pair and the field are symmetric.
  const auto cloud = make_cloud({{-0.15, 0.1, 0.2}, {0.15, 0.1, 0.2}}, 0.03, {-5.0, -5.0});
  const auto sys = assemble_and_solve(cloud, WaveContext(2.0, {0, 0, 1}));
  CHECK(std::abs(sys.values()[0] - sys.values()[1]) < 1e-15);
  CHECK(std::abs(std::abs(sys.values()[0]) - std::abs(sys.values()[1])) < 1e-15);
  for (double t = -1.0; t <= 1.0; t += 0.25) {
    const Vec3 p{0.4 + 0.1 * t, t, 0.3 * t};
    CHECK(std::abs(sys.field(p) - sys.field({-p.x, p.y, p.z})) <= 1e-8);
  }
}

TEST_CASE("dense and iterative modes agree") {
  auto big = cube_cloud(0.04, 0.15, -3.0);
  REQUIRE(big.size() <= 1000);
  FoldyLaxOptions dense, iter;
  dense.solver.mode = SolveMode::dense;
  iter.solver.mode = SolveMode::iterative;
  const WaveContext ctx(1.0, {0, 0, 1});
  const auto a = assemble_and_solve(big, ctx, dense);
  const auto b = assemble_and_solve(big, ctx, iter);
  double diff = 0.0, scale = 0.0;
  for (std::size_t m = 0; m < big.size(); ++m) {
    diff = std::max(diff, std::abs(a.values()[m] - b.values()[m]));
    scale = std::max(scale, std::abs(a.values()[m]));
  }
  CHECK(diff <= 1e-7 * scale);
  CHECK(a.diagnostics().residual <= 1e-10);
  CHECK(b.diagnostics().residual <= 1e-8);
}

TEST_CASE("linearity in the incident amplitude") {
  const auto cloud = cube_cloud(0.04, 0.3, -3.0);
  const WaveContext one(1.0, {0, 0, 1});
  const WaveContext scaled(1.0, {0, 0, 1}, Complex(2.0, -1.0));
  FoldyLaxOptions dense;
  dense.solver.mode = SolveMode::dense;
  const auto s1 = assemble_and_solve(cloud, one, dense);
  const auto s2 = assemble_and_solve(cloud, scaled, dense);
  for (std::size_t m = 0; m < cloud.size(); m += 31) {
    CHECK(std::abs(s2.values()[m] - Complex(2.0, -1.0) * s1.values()[m]) < 1e-12);
  }
  const std::vector<Vec3> dirs{{0.6, 0.8, 0.0}};
  CHECK(std::abs(far_field(s2, dirs).values[0] - Complex(2.0, -1.0) * far_field(s1, dirs).values[0]) < 1e-14);
}

TEST_CASE("reciprocity") {
  const auto cloud = cube_cloud(0.04, 0.3, -3.0);
  const Vec3 alpha = Vec3{1.0, 2.0, 2.0} * (1.0 / 3.0);
  const Vec3 beta = Vec3{-2.0, 1.0, 2.0} * (1.0 / 3.0);
  const auto fwd = assemble_and_solve(cloud, WaveContext(1.2, alpha));
  const auto bwd = assemble_and_solve(cloud, WaveContext(1.2, -beta));
  const Complex f = far_field(fwd, std::vector<Vec3>{beta}).values[0];
  const Complex b = far_field(bwd, std::vector<Vec3>{-alpha}).values[0];
  CHECK(std::abs(f - b) <= 1e-6 * std::abs(f));
}

TEST_CASE("scattered field decays like 1/|x|") {
  const auto cloud = cube_cloud(0.04, 0.3, -3.0);
  const WaveContext ctx(1.0, {0, 0, 1});
  const auto sys = assemble_and_solve(cloud, ctx);
  const Vec3 dir = Vec3{1.0, 2.0, 2.0} * (1.0 / 3.0);
  // Least-squares slope of log|u - u0| against log r.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double r = 50.0; r <= 1600.0; r *= 2.0) {
    const Vec3 x = Vec3{0.5, 0.5, 0.5} + r * dir;
    const double lx = std::log(r), ly = std::log(std::abs(sys.field(x) - ctx.incident(x)));
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly, ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(std::abs(slope + 1.0) < 0.1);
}

TEST_CASE("ka guardrail and invalid clouds") {
  const auto cloud = make_cloud({{0, 0, 0}, {1, 0, 0}}, 0.04, {1.0, 1.0});
  CHECK_THROWS_AS(assemble_and_solve(cloud, WaveContext(20.0, {0, 0, 1})), RegimeError);
  FoldyLaxOptions allow;
  allow.allow_large_ka = true;
  CHECK_NOTHROW(assemble_and_solve(cloud, WaveContext(20.0, {0, 0, 1}), allow));
  const auto warned = assemble_and_solve(cloud, WaveContext(4.0, {0, 0, 1}));
  CHECK_FALSE(warned.warnings().empty());
  const auto quiet = assemble_and_solve(cloud, WaveContext(1.0, {0, 0, 1}));
  CHECK(quiet.warnings().empty());
  const auto overlap = make_cloud({{0, 0, 0}, {0.05, 0, 0}}, 0.04, {1.0, 1.0});
  CHECK_THROWS_AS(assemble_and_solve(overlap, WaveContext(1.0, {0, 0, 1})), InvalidArgument);
}

}  // TEST_SUITE
