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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scatterlab/core/vec3.hpp"
#include "scatterlab/kernels/helmholtz_sum.hpp"

namespace scatterlab {

enum class SolveMode { dense, iterative };

struct SolverOptions {
  SolveMode mode = SolveMode::iterative;
  // Relative max-norm residual bound; <= 0 selects 1e-10 (dense) or 1e-8 (iterative).
  double tolerance = -1.0;
  int max_iterations = 500;
  int restart = 50;
  std::size_t dense_cap = 8000;

  double effective_tolerance() const;
};

struct SolveDiagnostics {
  SolveMode mode = SolveMode::iterative;
  int iterations = 0;
  double residual = 0.0;  // max_j |L u - u0|_j / max_j |u0|_j
  std::vector<double> residual_history;
};

// Collocated system for N balls of common radius a with real strengths A_m:
//
//   (1 + A_j a^2/2) u_j + sum_{m != j} exp(ik r_jm) / (4 pi r_jm) A_m V(a) u_m = u0_j
//
// The diagonal is the ball integral of 1/|x-y| at zero offset; off-diagonal
// terms use the exterior value V(a)/r. Shared by the many-body solver and the
// Nystrom discretization of the effective equation (one "ball" per grid cell).
// Every pair of centers must be at least a apart.
class BallSystem {
 public:
  BallSystem(std::span<const Vec3> centers, double radius, std::vector<double> strengths, double k);

  std::size_t size() const { return strengths_.size(); }
  double radius() const { return radius_; }
  double k() const { return k_; }
  std::span<const double> strengths() const { return strengths_; }
  Vec3 center(std::size_t m) const { return sources_.position(m); }
  Complex diagonal(std::size_t j) const { return 1.0 + strengths_[j] * radius_ * radius_ / 2.0; }

  // out = L u, matrix-free; rows are independent and evaluated in parallel.
  void apply(std::span<const Complex> u, std::span<Complex> out) const;
  Eigen::MatrixXcd assemble() const;

  // Solves L u = rhs according to options. Throws CapacityError when a dense
  // solve exceeds the cap and SolverError when the residual bound is missed.
  std::vector<Complex> solve(std::span<const Complex> rhs, const SolverOptions& options,
                             SolveDiagnostics& diagnostics) const;

  // sum_m exp(ik|x-x_m|)/(4 pi) A_m u_m w(x, x_m) with the exact ball weight w;
  // the total field is u0(x) minus this.
  Complex scattered(const Vec3& x, std::span<const Complex> u) const;
  std::vector<Complex> scattered(std::span<const Vec3> xs, std::span<const Complex> u) const;

  // -(1/4pi) sum_m exp(-ik beta.x_m) A_m V u_m
  Complex far_amplitude(const Vec3& beta, std::span<const Complex> u) const;

 private:
  kernels::SourceArrays weighted_sources(std::span<const Complex> u) const;

  kernels::SourceArrays sources_;
  double radius_;
  double volume_;
  std::vector<double> strengths_;
  double k_;
};

}  // namespace scatterlab
