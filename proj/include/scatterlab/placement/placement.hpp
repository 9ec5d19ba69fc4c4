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

#include "scatterlab/core/domain.hpp"
#include "scatterlab/core/potential.hpp"
#include "scatterlab/core/scalar_field.hpp"
#include "scatterlab/placement/cloud.hpp"

namespace scatterlab {

// Number of centers in a subdomain ~ V(a)^{-1} * integral of n.
struct CountingLaw {
  ScalarField n;
  double a = 0.0;
  int dim = 3;

  double volume() const;  // 4 pi a^3 / 3 in 3D, 2a in 1D
};

struct PlacementOptions {
  // Cell side is about cell_factor * sqrt(a).
  double cell_factor = 2.5;
  double n_max = kDefaultMaxDensity;
};

// One partition cell as seen by the placement: its bounds, the real-valued
// target V(a)^{-1} * integral of n over the cell (clipped to D) and the
// realized count.
struct PlacementCell {
  Vec3 lo;
  Vec3 hi;
  double target = 0.0;
  std::size_t count = 0;
};

struct PlacementReport {
  ScattererCloud cloud;
  std::vector<PlacementCell> cells;
  std::size_t slots_per_cell = 0;
};

// Deterministic placement satisfying the counting law. D is partitioned into
// cells of side ~ cell_factor*sqrt(a); each cell carries a lattice of slots of
// pitch >= 2a. Cell targets are rounded with error diffusion along the cell
// scan order (x fastest), and each cell's count is distributed over its slots
// by the same rounding applied to the slot weights n(slot) * slot_volume / V(a).
// Slots closer than a to the boundary of D never receive a center; their
// weight is re-diffused onto the rest of the cell.
//
// Throws PlacementError when a cell cannot hold its count without overlap or
// when a is too large for the cell lattice; FeasibilityError when n exceeds
// n_max.
PlacementReport place_with_report(const BoundedDomain& domain, const CountingLaw& law, const ScalarField& A,
                                  const PlacementOptions& options = {});

ScattererCloud place(const BoundedDomain& domain, const CountingLaw& law, const ScalarField& A,
                     const PlacementOptions& options = {});

// Open interval (lo, hi) on the line; law.dim must be 1.
PlacementReport place_interval_with_report(double lo, double hi, const CountingLaw& law, const ScalarField& A,
                                           const PlacementOptions& options = {});

std::size_t count_in_region(const ScattererCloud& cloud, const BoundedDomain& region);

}  // namespace scatterlab
