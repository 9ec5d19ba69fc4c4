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

#include <span>
#include <vector>

#include "scatterlab/core/potential.hpp"
#include "scatterlab/core/scalar_field.hpp"
#include "scatterlab/linalg/ball_system.hpp"
#include "scatterlab/placement/cloud.hpp"
#include "scatterlab/placement/placement.hpp"

// One-dimensional analog: u'' + k^2 u = q u on the line, outgoing waves
// outside the support of q.
namespace scatterlab::oned {

struct Interval1D {
  double lo = 0.0;
  double hi = 1.0;

  Interval1D() = default;
  Interval1D(double lo_, double hi_);
  double length() const { return hi - lo; }
};

// Incident wave amplitude * exp(i k direction x), direction = +1 or -1.
struct WaveContext1D {
  double k = 1.0;
  int direction = 1;
  Complex amplitude = 1.0;

  WaveContext1D() = default;
  WaveContext1D(double k_, int direction_ = 1, Complex amplitude_ = 1.0);
  Complex incident(double x) const { return amplitude * std::polar(1.0, k * direction * x); }
};

// Finitely many constant steps on [breakpoints.front(), breakpoints.back()],
// zero outside. Breakpoints are nondecreasing; zero-width steps are allowed.
class PiecewisePotential1D {
 public:
  PiecewisePotential1D() = default;
  PiecewisePotential1D(std::vector<double> breakpoints, std::vector<double> values);

  static PiecewisePotential1D constant(double lo, double hi, double value);
  // The literal potential of a 1D cloud: A_m on (x_m - a, x_m + a).
  static PiecewisePotential1D from_cloud(const ScattererCloud& cloud);

  double operator()(double x) const;
  const std::vector<double>& breakpoints() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t layers() const { return values_.size(); }
  PiecewisePotential1D mirrored() const;

 private:
  std::vector<double> breaks_;
  std::vector<double> values_;
};

// Exact solution for a step potential: reflection r, transmission t and the
// field everywhere, from 2x2 propagation matrices for (u, u').
class TransferSolution {
 public:
  Complex reflection() const { return r_; }
  Complex transmission() const { return t_; }
  Complex field(double x) const;

 private:
  friend TransferSolution transfer_matrix_solve(const PiecewisePotential1D&, const WaveContext1D&);

  PiecewisePotential1D potential_;
  double k_ = 1.0;
  int direction_ = 1;
  Complex amplitude_ = 1.0;
  Complex r_ = 0.0;
  Complex t_ = 1.0;
  std::vector<Complex> u_;   // u at each breakpoint (left incidence frame)
  std::vector<Complex> du_;  // u' at each breakpoint
};

// Layer wavenumbers kappa_j = sqrt(k^2 - q_j) (principal branch, evanescent
// layers imaginary); the propagation matrix depends on kappa_j^2 only, so
// k^2 = q_j needs no special casing.
TransferSolution transfer_matrix_solve(const PiecewisePotential1D& q, const WaveContext1D& ctx);

PlacementReport place1d_with_report(const Interval1D& interval, const ScalarField& n, double a, const ScalarField& A,
                                    const PlacementOptions& options = {});
ScattererCloud place1d(const Interval1D& interval, const ScalarField& n, double a, const ScalarField& A,
                       const PlacementOptions& options = {});

// Collocated point-scatterer system
//   u_j (1 + i A_j a / k) - sum_{m != j} exp(ik|x_j - x_m|)/(2ik) A_m 2a u_m = u0(x_j).
class FoldyLax1D {
 public:
  std::span<const Complex> values() const { return u_; }
  double residual() const { return residual_; }
  const ScattererCloud& cloud() const { return cloud_; }
  // u0(x) + sum_m exp(ik|x - x_m|)/(2ik) A_m 2a u_m
  Complex field(double x) const;

 private:
  friend FoldyLax1D solve_fl_1d(const ScattererCloud&, const WaveContext1D&);
  ScattererCloud cloud_;
  WaveContext1D ctx_;
  std::vector<Complex> u_;
  double residual_ = 0.0;
};

// Dense solve; SolverError if the residual exceeds 1e-10.
FoldyLax1D solve_fl_1d(const ScattererCloud& cloud, const WaveContext1D& ctx);

// Trapezoid Nystrom solution of u(x) = u0(x) + integral exp(ik|x-y|)/(2ik) q(y) u(y) dy.
class Effective1D {
 public:
  const std::vector<double>& nodes() const { return nodes_; }
  std::span<const Complex> values() const { return u_; }
  double residual() const { return residual_; }
  Complex field(double x) const;

 private:
  friend Effective1D solve_nystrom_1d(std::vector<double>, std::vector<double>, const WaveContext1D&);
  std::vector<double> nodes_;
  std::vector<double> weights_;  // trapezoid weight times one-sided q values
  WaveContext1D ctx_;
  std::vector<Complex> u_;
  double residual_ = 0.0;
};

Effective1D solve_nystrom_1d(std::vector<double> nodes, std::vector<double> weighted_q, const WaveContext1D& ctx);

// Step potentials get nodes on every breakpoint so each panel sees a constant q.
// ResolutionError for k h > 0.2.
Effective1D solve_ls_1d(const PiecewisePotential1D& q, const WaveContext1D& ctx, double h);
Effective1D solve_ls_1d(const ScalarField& q, const Interval1D& interval, const WaveContext1D& ctx, double h);

struct ConvergenceRow1D {
  double a = 0.0;
  std::size_t count = 0;
  double sup_error_vs_ue = 0.0;      // point-scatterer system vs effective field
  double sup_error_vs_oracle = 0.0;  // point-scatterer system vs exact field of the literal steps
  double sup_error_oracle_vs_ue = 0.0;  // exact field of the literal steps vs effective field
};

struct Convergence1DOptions {
  double h = 1e-3;
  std::size_t probes = 61;
  double exclusion = 2.0;  // probes closer than exclusion * a to a center are dropped
  PlacementOptions placement;
};

std::vector<ConvergenceRow1D> converge_1d(const ScalarField& q, const Interval1D& interval,
                                          FactorizationStrategy strategy, double level, std::span<const double> radii,
                                          const WaveContext1D& ctx, const Convergence1DOptions& options = {});

}  // namespace scatterlab::oned
