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
#include <string>
#include <vector>

#include "scatterlab/core/grid_field.hpp"
#include "scatterlab/core/wave.hpp"
#include "scatterlab/linalg/ball_system.hpp"
#include "scatterlab/placement/cloud.hpp"
#include "scatterlab/solver3d/far_field.hpp"

namespace scatterlab {

struct FoldyLaxOptions {
  SolverOptions solver;
  // ka above 0.5 is refused unless this is set; above 0.1 a warning is recorded.
  bool allow_large_ka = false;
};

// Many-body system for a cloud of small balls, collocated at the centers:
//
//   (1 + A_j a^2/2) u_j + sum_{m != j} exp(ik r_jm)/(4 pi r_jm) A_m V(a) u_m = u0(x_j).
//
// Immutable once solved.
class FoldyLaxSystem {
 public:
  const ScattererCloud& cloud() const { return cloud_; }
  const WaveContext& context() const { return ctx_; }
  std::span<const Complex> values() const { return u_; }
  const SolveDiagnostics& diagnostics() const { return diagnostics_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  double ka() const { return ctx_.ka(cloud_.radius); }

  // u0(x) - sum_m exp(ik|x-x_m|)/(4 pi) A_m u_m w(x, x_m), with w the exact
  // ball integral of 1/|x-y| (continuous across ball surfaces).
  Complex field(const Vec3& x) const;
  std::vector<Complex> field(std::span<const Vec3> xs) const;

  const BallSystem& system() const { return system_; }

 private:
  FoldyLaxSystem(ScattererCloud cloud, const WaveContext& ctx);
  friend FoldyLaxSystem assemble_and_solve(const ScattererCloud&, const WaveContext&, const FoldyLaxOptions&);

  ScattererCloud cloud_;
  WaveContext ctx_;
  BallSystem system_;
  std::vector<Complex> u_;
  SolveDiagnostics diagnostics_;
  std::vector<std::string> warnings_;
};

// Throws InvalidArgument for overlapping or non-3D clouds, RegimeError for
// ka > 0.5 without override, CapacityError / SolverError from the solve.
FoldyLaxSystem assemble_and_solve(const ScattererCloud& cloud, const WaveContext& ctx,
                                  const FoldyLaxOptions& options = {});

GridField evaluate_field(const FoldyLaxSystem& sys, const GridSpec& grid);

// A(beta) = -(1/4 pi) sum_m exp(-ik beta.x_m) A_m V(a) u_m
FarField far_field(const FoldyLaxSystem& sys, std::span<const Vec3> directions);

}  // namespace scatterlab
