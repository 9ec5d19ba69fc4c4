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

#include "scatterlab/core/domain.hpp"
#include "scatterlab/core/grid_field.hpp"
#include "scatterlab/core/potential.hpp"
#include "scatterlab/core/wave.hpp"
#include "scatterlab/linalg/ball_system.hpp"
#include "scatterlab/solver3d/far_field.hpp"

namespace scatterlab {

// Cell-centered Nystrom grid over the bounding box of D. Every cell carries
// the weight h^3 and the cell average of q (zero outside D); the singular
// self-cell is replaced by the ball of equal volume, radius
// a_eff = (3 h^3 / 4 pi)^(1/3), whose 1/|x-y| integral at zero offset is
// 2 pi a_eff^2.
struct LSDiscretization {
  GridSpec grid;
  double h = 0.0;
  double self_radius = 0.0;
  double self_weight = 0.0;
  std::vector<double> q;
  std::vector<std::size_t> active;  // nodes with q != 0

  double node_weight() const { return h * h * h; }
  double total_weight() const { return double(grid.size()) * node_weight(); }
};

struct LsOptions {
  SolverOptions solver;
  // Sub-samples per axis for the cell average of q.
  int q_subsamples = 4;
  double max_kh = 0.5;
};

// Solution of u(x) = u0(x) - integral g(x,y) q(y) u(y) dy on the grid.
class EffectiveSolution {
 public:
  const LSDiscretization& discretization() const { return disc_; }
  const WaveContext& context() const { return ctx_; }
  // u_e at every grid node.
  const GridField& field() const { return field_; }
  const SolveDiagnostics& diagnostics() const { return diagnostics_; }

  // Applies the discretized integral at an arbitrary point.
  Complex evaluate(const Vec3& x) const;
  std::vector<Complex> evaluate(std::span<const Vec3> xs) const;

  Complex amplitude(const Vec3& beta) const;

 private:
  EffectiveSolution(LSDiscretization disc, const WaveContext& ctx, BallSystem system);
  friend EffectiveSolution solve_ls(const ScalarField&, const BoundedDomain&, const WaveContext&, double,
                                    const LsOptions&);

  LSDiscretization disc_;
  WaveContext ctx_;
  BallSystem system_;
  std::vector<Complex> u_active_;
  GridField field_;
  SolveDiagnostics diagnostics_;
};

LSDiscretization discretize_ls(const ScalarField& q, const BoundedDomain& domain, double h, int q_subsamples = 4);

// Throws ResolutionError for k h > max_kh and SolverError on non-convergence.
EffectiveSolution solve_ls(const ScalarField& q, const BoundedDomain& domain, const WaveContext& ctx, double h,
                           const LsOptions& options = {});
inline EffectiveSolution solve_ls(const PotentialSpec& spec, const BoundedDomain& domain, const WaveContext& ctx,
                                  double h, const LsOptions& options = {}) {
  return solve_ls(spec.q, domain, ctx, h, options);
}

// A(beta) = -(1/4 pi) sum_i exp(-ik beta.y_i) q_i u_i h^3
FarField far_field_effective(const EffectiveSolution& solution, std::span<const Vec3> directions);

}  // namespace scatterlab
