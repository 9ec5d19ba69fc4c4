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

#include "scatterlab/core/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scatterlab/error.hpp"

namespace scatterlab {

std::vector<Vec3> probe_lattice(const BoundedDomain& domain, int per_axis) {
  std::vector<Vec3> out;
  if (per_axis < 2) per_axis = 2;
  const Vec3 lo = domain.lower();
  const Vec3 hi = domain.upper();
  // Pull the far faces slightly inward so half-open boxes keep them.
  const double inset = 1e-12;
  for (int l = 0; l < per_axis; ++l) {
    for (int j = 0; j < per_axis; ++j) {
      for (int i = 0; i < per_axis; ++i) {
        const Vec3 t{double(i) / (per_axis - 1), double(j) / (per_axis - 1), double(l) / (per_axis - 1)};
        Vec3 p;
        for (int d = 0; d < 3; ++d) p[d] = lo[d] + (hi[d] - lo[d]) * std::min(t[d], 1.0 - inset);
        if (domain.contains(p)) out.push_back(p);
      }
    }
  }
  return out;
}

PotentialSpec factorize_potential(const ScalarField& q, FactorizationStrategy strategy, double level,
                                  std::span<const Vec3> probes, double n_max) {
  if (strategy == FactorizationStrategy::constant_density) {
    const double n0 = level;
    if (!(n0 > 0.0)) throw FeasibilityError("constant density n0 must be positive");
    if (n0 > n_max) {
      std::ostringstream os;
      os << "density n0 = " << n0 << " exceeds n_max = " << n_max << " (balls would overlap)";
      throw FeasibilityError(os.str());
    }
    ScalarField n = ScalarField::constant(n0);
    ScalarField A([q, n0](const Vec3& x) { return q(x) / n0; }, q.lower_bound() / n0, q.upper_bound() / n0,
                  "q/n0");
    return {q, std::move(n), std::move(A)};
  }

  const double a0 = level;
  if (a0 == 0.0 || !std::isfinite(a0)) throw FeasibilityError("constant strength A0 must be nonzero");
  double n_peak = 0.0;
  for (const Vec3& p : probes) {
    const double ratio = q(p) / a0;
    if (ratio < 0.0) {
      std::ostringstream os;
      os << "constant strength A0 = " << a0 << " is infeasible: q changes sign relative to A0 at (" << p.x
         << ", " << p.y << ", " << p.z << "), so n would be negative";
      throw FeasibilityError(os.str());
    }
    n_peak = std::max(n_peak, ratio);
  }
  const double bound_hi = std::max(q.lower_bound() / a0, q.upper_bound() / a0);
  if (n_peak > n_max) {
    std::ostringstream os;
    os << "density q/A0 reaches " << n_peak << " > n_max = " << n_max;
    throw FeasibilityError(os.str());
  }
  ScalarField n([q, a0](const Vec3& x) { return std::max(0.0, q(x) / a0); }, 0.0, std::max(0.0, bound_hi),
                "q/A0");
  return {q, std::move(n), ScalarField::constant(a0)};
}

}  // namespace scatterlab
