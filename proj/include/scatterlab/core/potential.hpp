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
#include "scatterlab/core/scalar_field.hpp"

namespace scatterlab {

// Upper bound on the scatterer density n; non-overlapping balls of radius a
// on a cubic lattice of pitch 2a reach pi/6.
inline constexpr double kDefaultMaxDensity = 0.5;

enum class FactorizationStrategy { constant_density, constant_strength };

// q = n * A with n >= 0.
struct PotentialSpec {
  ScalarField q;
  ScalarField n;
  ScalarField A;
};

// Lattice of probe points covering the domain (count per axis, endpoints
// included, points outside the domain dropped).
std::vector<Vec3> probe_lattice(const BoundedDomain& domain, int per_axis);

// Factorizes q. For constant_density, level is n0 and A = q / n0; for
// constant_strength, level is A0 and n = q / A0. Sign feasibility is checked
// at the probe points. Throws FeasibilityError when the factorization would
// need n < 0 or n > n_max.
PotentialSpec factorize_potential(const ScalarField& q, FactorizationStrategy strategy, double level,
                                  std::span<const Vec3> probes, double n_max = kDefaultMaxDensity);

}  // namespace scatterlab
