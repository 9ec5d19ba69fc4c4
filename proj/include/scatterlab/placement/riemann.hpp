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
#include "scatterlab/placement/placement.hpp"

namespace scatterlab {

struct RiemannRow {
  double a = 0.0;
  std::size_t count = 0;
  double sum = 0.0;       // sum_m f(x_m) V(a)
  double integral = 0.0;  // integral over D of f n
  double relative_error = 0.0;
};

// Composite Gauss-Legendre (4 points per panel) over the bounding box of D,
// integrand masked to D.
double integrate_box(const BoundedDomain& domain, const ScalarField& integrand, int panels_per_axis = 16);

// Places a cloud for every radius (strictly decreasing) and compares the
// weighted sum against the reference integral of f n.
std::vector<RiemannRow> riemann_limit_check(const ScalarField& f, const ScalarField& n, const BoundedDomain& domain,
                                            std::span<const double> radii, const PlacementOptions& options = {});

// True when every error is at most (1 + slack) times its predecessor.
bool is_nonincreasing(std::span<const RiemannRow> rows, double slack = 0.1);

}  // namespace scatterlab
