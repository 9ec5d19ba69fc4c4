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

#include "scatterlab/effective3d/lippmann_schwinger.hpp"

#include <cmath>
#include <sstream>

#include "scatterlab/core/green.hpp"
#include "scatterlab/effective3d/grid_convolution.hpp"
#include "scatterlab/linalg/gmres.hpp"
#include "scatterlab/error.hpp"

namespace scatterlab {

LSDiscretization discretize_ls(const ScalarField& q, const BoundedDomain& domain, double h, int q_subsamples) {
  if (!(h > 0.0)) throw InvalidArgument("grid spacing h must be positive");
  if (q_subsamples < 1) throw InvalidArgument("need at least one q sub-sample per axis");
  LSDiscretization disc;
  disc.h = h;
  const Vec3 lo = domain.lower();
  const Vec3 hi = domain.upper();
  const Vec3 mid = domain.center();
  for (int d = 0; d < 3; ++d) {
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((hi[d] - lo[d]) / h - 1e-9)));
    disc.grid.extents[std::size_t(d)] = n;
    disc.grid.origin[d] = mid[d] - 0.5 * double(n) * h + 0.5 * h;
  }
  disc.grid.spacing = h;
  disc.self_radius = std::cbrt(3.0 * h * h * h / (4.0 * kPi));
  disc.self_weight = ball_kernel_weight(0.0, disc.self_radius);

  const std::size_t total = disc.grid.size();
  disc.q.assign(total, 0.0);
  const int s = q_subsamples;
  const double inv = 1.0 / double(s * s * s);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(total); ++i) {
    const Vec3 c = disc.grid.node(std::size_t(i));
    double acc = 0.0;
    for (int l = 0; l < s; ++l) {
      for (int j = 0; j < s; ++j) {
        for (int m = 0; m < s; ++m) {
          const Vec3 p = c + h * Vec3{(m + 0.5) / s - 0.5, (j + 0.5) / s - 0.5, (l + 0.5) / s - 0.5};
          if (domain.contains(p)) acc += q(p);
        }
      }
    }
    disc.q[std::size_t(i)] = acc * inv;
  }
  for (std::size_t i = 0; i < total; ++i) {
    if (disc.q[i] != 0.0) disc.active.push_back(i);
  }
  return disc;
}

namespace {

BallSystem make_system(const LSDiscretization& disc, double k) {
  std::vector<Vec3> centers;
  std::vector<double> strengths;
  centers.reserve(disc.active.size());
  strengths.reserve(disc.active.size());
  for (std::size_t i : disc.active) {
    centers.push_back(disc.grid.node(i));
    strengths.push_back(disc.q[i]);
  }
  return BallSystem(centers, disc.self_radius, std::move(strengths), k);
}

}  // namespace

EffectiveSolution::EffectiveSolution(LSDiscretization disc, const WaveContext& ctx, BallSystem system)
    : disc_(std::move(disc)), ctx_(ctx), system_(std::move(system)) {}

Complex EffectiveSolution::evaluate(const Vec3& x) const { return ctx_.incident(x) - system_.scattered(x, u_active_); }

std::vector<Complex> EffectiveSolution::evaluate(std::span<const Vec3> xs) const {
  std::vector<Complex> out = system_.scattered(xs, u_active_);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = ctx_.incident(xs[i]) - out[i];
  return out;
}

Complex EffectiveSolution::amplitude(const Vec3& beta) const { return system_.far_amplitude(beta, u_active_); }

EffectiveSolution solve_ls(const ScalarField& q, const BoundedDomain& domain, const WaveContext& ctx, double h,
                           const LsOptions& options) {
  if (ctx.k() * h > options.max_kh) {
    std::ostringstream os;
    os << "grid spacing h = " << h << " under-resolves the wavelength: kh = " << ctx.k() * h << " > "
       << options.max_kh;
    throw ResolutionError(os.str());
  }
  LSDiscretization disc = discretize_ls(q, domain, h, options.q_subsamples);
  BallSystem system = make_system(disc, ctx.k());
  EffectiveSolution sol(std::move(disc), ctx, std::move(system));
  const LSDiscretization& d = sol.disc_;

  const std::size_t n_active = d.active.size();
  std::vector<Complex> rhs(n_active);
  for (std::size_t i = 0; i < n_active; ++i) rhs[i] = ctx.incident(d.grid.node(d.active[i]));
  sol.field_.grid = d.grid;
  sol.field_.values.assign(d.grid.size(), Complex(0.0));

  if (options.solver.mode == SolveMode::dense) {
    sol.u_active_ = sol.system_.solve(rhs, options.solver, sol.diagnostics_);
    std::size_t next_active = 0;
    std::vector<Vec3> passive;
    std::vector<std::size_t> passive_index;
    for (std::size_t i = 0; i < d.grid.size(); ++i) {
      if (next_active < n_active && d.active[next_active] == i) {
        sol.field_.values[i] = sol.u_active_[next_active++];
      } else {
        passive.push_back(d.grid.node(i));
        passive_index.push_back(i);
      }
    }
    const std::vector<Complex> passive_values = sol.evaluate(passive);
    for (std::size_t p = 0; p < passive.size(); ++p) sol.field_.values[passive_index[p]] = passive_values[p];
    return sol;
  }

  // Iterative: the cell-centered grid makes the operator a convolution.
  const GridConvolution conv(d.grid, ctx.k(), d.self_weight / (4.0 * kPi));
  std::vector<Complex> w(d.grid.size()), cw(d.grid.size());
  auto apply = [&](std::span<const Complex> u, std::span<Complex> out) {
    for (std::size_t i = 0; i < n_active; ++i) w[d.active[i]] = d.q[d.active[i]] * u[i];
    conv.apply(w, cw);
    for (std::size_t i = 0; i < n_active; ++i) out[i] = u[i] + cw[d.active[i]];
  };
  linalg::GmresOptions gopt;
  gopt.tolerance = options.solver.effective_tolerance();
  gopt.max_iterations = options.solver.max_iterations;
  gopt.restart = options.solver.restart;
  linalg::GmresResult res = linalg::gmres(apply, rhs, gopt);
  sol.diagnostics_.mode = SolveMode::iterative;
  sol.diagnostics_.iterations = res.iterations;
  sol.diagnostics_.residual = res.relative_residual;
  sol.diagnostics_.residual_history = std::move(res.residual_history);
  if (!res.converged) {
    std::ostringstream os;
    os << "GMRES did not reach relative residual " << gopt.tolerance << " within " << gopt.max_iterations
       << " iterations (last " << res.relative_residual << ")";
    throw SolverError(os.str(), sol.diagnostics_.residual_history);
  }
  sol.u_active_ = std::move(res.x);

  // Every node from one more convolution; active nodes keep the solved values.
  std::fill(w.begin(), w.end(), Complex(0.0));
  for (std::size_t i = 0; i < n_active; ++i) w[d.active[i]] = d.q[d.active[i]] * sol.u_active_[i];
  conv.apply(w, cw);
  for (std::size_t i = 0; i < d.grid.size(); ++i) sol.field_.values[i] = ctx.incident(d.grid.node(i)) - cw[i];
  for (std::size_t i = 0; i < n_active; ++i) sol.field_.values[d.active[i]] = sol.u_active_[i];
  return sol;
}

FarField far_field_effective(const EffectiveSolution& solution, std::span<const Vec3> directions) {
  FarField out;
  out.directions.assign(directions.begin(), directions.end());
  for (const Vec3& beta : directions) {
    if (std::abs(norm(beta) - 1.0) > 1e-14) throw InvalidArgument("far-field directions must be unit vectors");
    out.values.push_back(solution.amplitude(beta));
  }
  return out;
}

}  // namespace scatterlab
