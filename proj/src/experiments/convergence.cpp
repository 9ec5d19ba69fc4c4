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

#include "scatterlab/experiments/convergence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "scatterlab/effective3d/sphere_quadrature.hpp"
#include "scatterlab/placement/placement.hpp"
#include "scatterlab/solver3d/foldy_lax.hpp"

namespace scatterlab::experiments {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, std::current_exception(), e.what());
  }
}

std::vector<Vec3> line_probes(const oned::Interval1D& interval, int count) {
  std::vector<Vec3> out;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.5 : double(i) / double(count - 1);
    out.push_back({interval.lo + t * interval.length(), 0.0, 0.0});
  }
  return out;
}

constexpr int kOpticalThetaNodes = 16;

bool near_any(const Vec3& p, const ScattererCloud& cloud, double d2) {
  for (const Vec3& x : cloud.centers) {
    const Vec3 r = p - x;
    if (dot(r, r) < d2) return true;
  }
  return false;
}

}  // namespace

std::vector<Vec3> probe_grid(const BoundedDomain& domain, int per_axis, double scale) {
  const Vec3 lo = domain.lower();
  const Vec3 hi = domain.upper();
  const Vec3 c = 0.5 * (lo + hi);
  std::vector<Vec3> out;
  out.reserve(std::size_t(per_axis) * per_axis * per_axis);
  auto coord = [&](int d, int i) {
    const double t = per_axis == 1 ? 0.5 : double(i) / double(per_axis - 1);
    const double half = 0.5 * scale * (hi[d] - lo[d]);
    return c[d] - half + 2.0 * half * t;
  };
  for (int l = 0; l < per_axis; ++l) {
    for (int j = 0; j < per_axis; ++j) {
      for (int i = 0; i < per_axis; ++i) out.push_back({coord(0, i), coord(1, j), coord(2, l)});
    }
  }
  return out;
}

std::vector<Vec3> exclude_near(std::span<const Vec3> probes, const ScattererCloud& cloud, double distance) {
  std::vector<Vec3> out;
  for (const Vec3& p : probes) {
    if (!near_any(p, cloud, distance * distance)) out.push_back(p);
  }
  return out;
}

PotentialSpec potential_spec(const ExperimentConfig& cfg) {
  const ScalarField q = catalog::make_field(cfg.potential);
  if (cfg.dimension == 3) {
    return factorize_potential(q, cfg.strategy, cfg.level, probe_lattice(cfg.domain, 10), cfg.n_max);
  }
  return factorize_potential(q, cfg.strategy, cfg.level, line_probes(cfg.interval, 101), cfg.n_max);
}

ScattererCloud place_cloud(const ExperimentConfig& cfg, const PotentialSpec& spec, double a) {
  PlacementOptions opt;
  opt.cell_factor = cfg.cell_factor;
  opt.n_max = cfg.n_max;
  if (cfg.dimension == 1) return oned::place1d(cfg.interval, spec.n, a, spec.A, opt);
  return place(cfg.domain, CountingLaw{spec.n, a, 3}, spec.A, opt);
}

GridSpec output_grid(const ExperimentConfig& cfg) {
  const int n = std::max(cfg.grid_points, 1);
  const auto probes = probe_grid(cfg.domain, n, cfg.grid_scale);
  GridSpec g;
  g.origin = probes.front();
  g.spacing = n > 1 ? probes[1].x - probes[0].x : 0.0;
  g.extents = {std::size_t(n), std::size_t(n), std::size_t(n)};
  return g;
}

ConvergenceReport run_convergence_3d(const ExperimentConfig& cfg, const RowSink& sink) {
  if (cfg.dimension != 3) throw ConfigError("run_convergence_3d needs a 3D config");
  const auto diags = validate_config(cfg);
  if (has_errors(diags)) throw ConfigError(diags.front().key + ": " + diags.front().message);

  ConvergenceReport report;
  const WaveContext ctx = wave_context(cfg);
  const PotentialSpec spec = stage("factorize", [&] { return potential_spec(cfg); });

  LsOptions ls_opt;
  ls_opt.solver = cfg.solver;
  ls_opt.q_subsamples = cfg.q_subsamples;
  const auto all_probes = probe_grid(cfg.domain, cfg.probe_points, cfg.probe_scale);
  report.probe_count = all_probes.size();
  const auto directions = fibonacci_directions(std::size_t(std::max(cfg.farfield_directions, 1)));

  // u_e and A_e on the probes and directions; optionally extrapolated in h.
  std::vector<Complex> ue;
  std::vector<Complex> effective_far;
  auto solve_level = [&](double h) {
    const EffectiveSolution sol = solve_ls(spec.q, cfg.domain, ctx, h, ls_opt);
    report.effective_nodes = sol.discretization().active.size();
    report.effective_iterations = sol.diagnostics().iterations;
    report.effective_residual = std::max(report.effective_residual, sol.diagnostics().residual);
    return std::make_pair(sol.evaluate(all_probes), far_field_effective(sol, directions).values);
  };
  stage("effective-solve", [&] {
    auto [u_coarse, far_coarse] = solve_level(cfg.h);
    ue = std::move(u_coarse);
    effective_far = std::move(far_coarse);
    if (cfg.richardson) {
      const auto [u_fine, far_fine] = solve_level(0.5 * cfg.h);
      for (std::size_t i = 0; i < ue.size(); ++i) ue[i] = (4.0 * u_fine[i] - ue[i]) / 3.0;
      for (std::size_t i = 0; i < effective_far.size(); ++i) {
        effective_far[i] = (4.0 * far_fine[i] - effective_far[i]) / 3.0;
      }
    }
    return 0;
  });
  double effective_far_max = 0.0;
  for (const Complex& v : effective_far) effective_far_max = std::max(effective_far_max, std::abs(v));
  const SphereQuadrature quad = product_sphere_quadrature(kOpticalThetaNodes);

  FoldyLaxOptions fl_opt;
  fl_opt.solver = cfg.solver;
  fl_opt.allow_large_ka = cfg.allow_large_ka;

  for (const double a : cfg.radii) {
    StageTiming timing{a};
    auto t0 = Clock::now();
    const ScattererCloud cloud = stage("placement", [&] { return place_cloud(cfg, spec, a); });
    timing.place = seconds_since(t0);

    t0 = Clock::now();
    const FoldyLaxSystem sys = stage("foldy-lax-solve", [&] { return assemble_and_solve(cloud, ctx, fl_opt); });
    timing.solve = seconds_since(t0);

    t0 = Clock::now();
    ConvergenceRow row;
    row.a = a;
    row.count = cloud.centers.size();
    row.iterations = sys.diagnostics().iterations;
    row.residual = sys.diagnostics().residual;
    stage("evaluate", [&] {
      std::vector<Vec3> probes;
      std::vector<Complex> ue_kept;
      const double d2 = std::pow(cfg.probe_exclusion * a, 2);
      for (std::size_t i = 0; i < all_probes.size(); ++i) {
        if (near_any(all_probes[i], cloud, d2)) continue;
        probes.push_back(all_probes[i]);
        ue_kept.push_back(ue[i]);
      }
      const auto um = sys.field(probes);
      double sum2 = 0.0;
      for (std::size_t i = 0; i < probes.size(); ++i) {
        const double e = std::abs(um[i] - ue_kept[i]);
        row.sup_error = std::max(row.sup_error, e);
        if (!cfg.domain.contains(probes[i])) row.sup_error_exterior = std::max(row.sup_error_exterior, e);
        sum2 += e * e;
      }
      row.l2_error = probes.empty() ? 0.0 : std::sqrt(sum2 / double(probes.size()));

      const FarField far = far_field(sys, directions);
      double diff = 0.0;
      for (std::size_t i = 0; i < directions.size(); ++i) {
        diff = std::max(diff, std::abs(far.values[i] - effective_far[i]));
      }
      row.farfield_error = effective_far_max > 0.0 ? diff / effective_far_max : diff;

      row.optical_residual = optical_theorem_residual(
          [&](const Vec3& beta) { return sys.system().far_amplitude(beta, sys.values()); }, ctx.alpha(), ctx.k(),
          quad);
      return 0;
    });
    timing.evaluate = seconds_since(t0);

    report.rows.push_back(row);
    report.timings.push_back(timing);
    if (sink) sink(row, timing);
  }
  return report;
}

std::vector<oned::ConvergenceRow1D> run_convergence_1d(const ExperimentConfig& cfg) {
  if (cfg.dimension != 1) throw ConfigError("run_convergence_1d needs a 1D config");
  const auto diags = validate_config(cfg);
  if (has_errors(diags)) throw ConfigError(diags.front().key + ": " + diags.front().message);
  const ScalarField q = catalog::make_field(cfg.potential);
  oned::Convergence1DOptions opt;
  opt.h = cfg.h_1d;
  opt.probes = std::size_t(cfg.probe_points);
  opt.exclusion = cfg.probe_exclusion;
  opt.placement.cell_factor = cfg.cell_factor;
  opt.placement.n_max = cfg.n_max;
  return stage("convergence-1d", [&] {
    return oned::converge_1d(q, cfg.interval, cfg.strategy, cfg.level, cfg.radii, wave_context_1d(cfg), opt);
  });
}

}  // namespace scatterlab::experiments
