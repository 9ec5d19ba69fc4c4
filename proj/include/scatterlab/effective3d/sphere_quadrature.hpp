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

#include <functional>
#include <vector>

#include "scatterlab/core/vec3.hpp"

namespace scatterlab {

struct SphereQuadrature {
  std::vector<Vec3> nodes;
  std::vector<double> weights;  // sum to 4 pi
};

// Gauss-Legendre in cos(theta) times 2*n_theta uniform azimuths.
SphereQuadrature product_sphere_quadrature(int n_theta);

// Quasi-uniform unit vectors on the Fibonacci spiral; deterministic.
std::vector<Vec3> fibonacci_directions(std::size_t count);

// |Im A(alpha, alpha) - (k / 4 pi) * integral of |A(beta, alpha)|^2| relative
// to |Im A(alpha, alpha)|. Zero for a zero amplitude.
double optical_theorem_residual(const std::function<Complex(const Vec3&)>& amplitude, const Vec3& alpha, double k,
                                const SphereQuadrature& quad);

}  // namespace scatterlab
