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
#include <vector>

#include "scatterlab/core/vec3.hpp"

namespace scatterlab {

// Centers x_m with common radius a and strengths A_m = A(x_m). One-dimensional
// clouds store their coordinate in Vec3::x (y = z = 0).
struct ScattererCloud {
  int dim = 3;
  double radius = 0.0;
  std::vector<Vec3> centers;
  std::vector<double> strengths;

  std::size_t size() const { return centers.size(); }
  bool empty() const { return centers.empty(); }
};

// Smallest center-to-center distance (infinity for fewer than two centers).
// Uses a bucket grid, so it stays cheap for large clouds.
double min_pair_distance(const ScattererCloud& cloud);

}  // namespace scatterlab
