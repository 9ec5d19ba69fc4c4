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

#include "scatterlab/linalg/ball_system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scatterlab/core/green.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/linalg/gmres.hpp"

namespace scatterlab {

double SolverOptions::effective_tolerance() const {
  if (tolerance > 0.0) return tolerance;
  return mode == SolveMode::dense ? 1e-10 : 1e-8;
}

BallSystem::BallSystem(std::span<const Vec3> centers, double radius, std::vector<double> strengths, double k)
    : sources_(centers), radius_(radius), volume_(ball_volume(radius)), strengths_(std::move(strengths)), k_(k) {
  if (!(radius > 0.0)) throw InvalidArgument("ball radius must be positive");
  if (!(k > 0.0)) throw InvalidArgument("wavenumber must be positive");
  if (strengths_.size() != centers.size()) throw InvalidArgument("one strength per center required");
}

kernels::SourceArrays BallSystem::weighted_sources(std::span<const Complex> u) const {
  kernels::SourceArrays src = sources_;
  const double scale = volume_ / (4.0 * kPi);
  for (std::size_t m = 0; m < size(); ++m) src.set_strength(m, scale * strengths_[m] * u[m]);
  return src;
}

void BallSystem::apply(std::span<const Complex> u, std::span<Complex> out) const {
  const kernels::SourceArrays src = weighted_sources(u);
  const kernels::SourceView view = src.view();
  const auto n = static_cast<std::ptrdiff_t>(size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    out[jj] = diagonal(jj) * u[jj] + kernels::helmholtz_sum(sources_.position(jj), view, k_, radius_);
  }
}

Eigen::MatrixXcd BallSystem::assemble() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXcd mat(n, n);
  const double scale = volume_ / (4.0 * kPi);
#pragma omp parallel for schedule(static)
  for (Eigen::Index m = 0; m < n; ++m) {
    const Vec3 xm = sources_.position(std::size_t(m));
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == m) {
        mat(j, m) = diagonal(std::size_t(j));
        continue;
      }
      const double r = distance(sources_.position(std::size_t(j)), xm);
      mat(j, m) = std::polar(scale * strengths_[std::size_t(m)] / r, k_ * r);
    }
  }
  return mat;
}

std::vector<Complex> BallSystem::solve(std::span<const Complex> rhs, const SolverOptions& options,
                                       SolveDiagnostics& diagnostics) const {
  if (rhs.size() != size()) throw InvalidArgument("right-hand side length must equal the number of balls");
  const double tol = options.effective_tolerance();
  diagnostics = {};
  diagnostics.mode = options.mode;
  if (size() == 0) return {};

  double rhs_inf = 0.0;
  for (const Complex& v : rhs) rhs_inf = std::max(rhs_inf, std::abs(v));

  if (options.mode == SolveMode::dense) {
    if (size() > options.dense_cap) {
      std::ostringstream os;
      os << "dense solve of " << size() << " unknowns exceeds the cap of " << options.dense_cap
         << "; use the iterative mode";
      throw CapacityError(os.str());
    }
    const Eigen::MatrixXcd mat = assemble();
    Eigen::VectorXcd b(static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) b[Eigen::Index(i)] = rhs[i];
    const Eigen::VectorXcd x = mat.partialPivLu().solve(b);
    const Eigen::VectorXcd res = mat * x - b;
    diagnostics.residual = rhs_inf > 0.0 ? res.cwiseAbs().maxCoeff() / rhs_inf : res.cwiseAbs().maxCoeff();
    diagnostics.residual_history = {diagnostics.residual};
    if (!std::isfinite(diagnostics.residual) || diagnostics.residual > tol) {
      std::ostringstream os;
      os << "dense factorization left relative residual " << diagnostics.residual << " > " << tol;
      throw SolverError(os.str(), diagnostics.residual_history);
    }
    return {x.data(), x.data() + x.size()};
  }

  linalg::GmresOptions gopt;
  gopt.tolerance = tol;
  gopt.max_iterations = options.max_iterations;
  gopt.restart = options.restart;
  linalg::GmresResult res = linalg::gmres([this](std::span<const Complex> in, std::span<Complex> out) { apply(in, out); },
                                          rhs, gopt);
  diagnostics.iterations = res.iterations;
  diagnostics.residual = res.relative_residual;
  diagnostics.residual_history = std::move(res.residual_history);
  if (!res.converged) {
    std::ostringstream os;
    os << "GMRES did not reach relative residual " << tol << " within " << options.max_iterations
       << " iterations (last " << res.relative_residual << ")";
    throw SolverError(os.str(), diagnostics.residual_history);
  }
  return std::move(res.x);
}

Complex BallSystem::scattered(const Vec3& x, std::span<const Complex> u) const {
  return scattered(std::span<const Vec3>(&x, 1), u).front();
}

std::vector<Complex> BallSystem::scattered(std::span<const Vec3> xs, std::span<const Complex> u) const {
  const kernels::SourceArrays src = weighted_sources(u);
  const kernels::SourceView view = src.view();
  std::vector<Complex> out(xs.size());
  const double a2 = radius_ * radius_;
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    const Vec3 x = xs[std::size_t(p)];
    Complex s = kernels::helmholtz_sum(x, view, k_, radius_);
    // Points inside a ball pick up the interior branch of the ball weight.
    for (std::size_t m = 0; m < size(); ++m) {
      const Vec3 d = x - sources_.position(m);
      const double r2 = dot(d, d);
      if (r2 >= a2) continue;
      const double r = std::sqrt(r2);
      s += std::polar(ball_kernel_weight(r, radius_) / (4.0 * kPi), k_ * r) * strengths_[m] * u[m];
    }
    out[std::size_t(p)] = s;
  }
  return out;
}

Complex BallSystem::far_amplitude(const Vec3& beta, std::span<const Complex> u) const {
  Complex s = 0.0;
  for (std::size_t m = 0; m < size(); ++m) {
    s += std::polar(strengths_[m] * volume_, -k_ * dot(beta, sources_.position(m))) * u[m];
  }
  return -s / (4.0 * kPi);
}

}  // namespace scatterlab
