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

#include <vector>

#include "scatterlab/core/vec3.hpp"

namespace scatterlab {

// Exact scattering by a spherical well q = depth inside |x - center| < R via
// phase shifts. Independent of the grid solvers; used as their oracle.
class PartialWaveOracle {
 public:
  double depth() const { return depth_; }
  double radius() const { return radius_; }
  double k() const { return k_; }
  int max_order() const { return max_order_; }
  const std::vector<double>& phase_shifts() const { return delta_; }

  // f(theta) = (1/k) sum_l (2l+1) exp(i delta_l) sin(delta_l) P_l(cos theta),
  // for a well centered at the origin.
  Complex amplitude(double cos_theta) const;
  // A(beta, alpha) including the phase from the well center.
  Complex amplitude(const Vec3& beta, const Vec3& alpha) const;

  // Total field for the incident wave exp(ik alpha.x), anywhere in space.
  Complex field(const Vec3& x, const Vec3& alpha) const;

 private:
  friend PartialWaveOracle partial_wave_solve(double, double, double, int, const Vec3&);

  double depth_ = 0.0;
  double radius_ = 0.0;
  double k_ = 0.0;
  double kappa_ = 0.0;
  int max_order_ = 0;
  Vec3 center_;
  std::vector<double> delta_;
  std::vector<Complex> interior_;  // coefficient of j_l(kappa r) P_l inside the well
};

// Interior wavenumber kappa = sqrt(k^2 - depth) must be real and positive;
// RegimeError otherwise.
PartialWaveOracle partial_wave_solve(double depth, double radius, double k, int max_order, const Vec3& center = {});

}  // namespace scatterlab
