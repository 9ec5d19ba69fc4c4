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

#include "scatterlab/solver3d/foldy_lax.hpp"

#include <cmath>
#include <sstream>

#include "scatterlab/error.hpp"

namespace scatterlab {

FoldyLaxSystem::FoldyLaxSystem(ScattererCloud cloud, const WaveContext& ctx)
    : cloud_(std::move(cloud)),
      ctx_(ctx),
      system_(cloud_.centers, cloud_.radius, cloud_.strengths, ctx.k()) {}

Complex FoldyLaxSystem::field(const Vec3& x) const { return ctx_.incident(x) - system_.scattered(x, u_); }

std::vector<Complex> FoldyLaxSystem::field(std::span<const Vec3> xs) const {
  std::vector<Complex> out = system_.scattered(xs, u_);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = ctx_.incident(xs[i]) - out[i];
  return out;
}

FoldyLaxSystem assemble_and_solve(const ScattererCloud& cloud, const WaveContext& ctx,
                                  const FoldyLaxOptions& options) {
  if (cloud.dim != 3) throw InvalidArgument("the many-body solver needs a three-dimensional cloud");
  if (!(cloud.radius > 0.0)) throw InvalidArgument("scatterer radius must be positive");
  if (cloud.strengths.size() != cloud.centers.size()) throw InvalidArgument("one strength per center required");
  const double gap = min_pair_distance(cloud);
  if (gap < 2.0 * cloud.radius * (1.0 - 1e-12)) {
    std::ostringstream os;
    os << "scatterers overlap: closest centers are " << gap << " apart, less than 2a = " << 2.0 * cloud.radius;
    throw InvalidArgument(os.str());
  }

  const double ka = ctx.ka(cloud.radius);
  std::vector<std::string> warnings;
  if (ka > 0.5 && !options.allow_large_ka) {
    std::ostringstream os;
    os << "ka = " << ka << " > 0.5 leaves the small-scatterer regime ka<<1; pass the override to solve anyway";
    throw RegimeError(os.str());
  }
  if (ka > 0.1) {
    std::ostringstream os;
    os << "ka = " << ka << " > 0.1: the point-scatterer reduction is only accurate for ka<<1";
    warnings.push_back(os.str());
  }

  FoldyLaxSystem sys(cloud, ctx);
  sys.warnings_ = std::move(warnings);
  std::vector<Complex> rhs(cloud.size());
  for (std::size_t j = 0; j < cloud.size(); ++j) rhs[j] = ctx.incident(cloud.centers[j]);
  sys.u_ = sys.system_.solve(rhs, options.solver, sys.diagnostics_);
  return sys;
}

GridField evaluate_field(const FoldyLaxSystem& sys, const GridSpec& grid) {
  std::vector<Vec3> nodes(grid.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = grid.node(i);
  return {grid, sys.field(nodes)};
}

FarField far_field(const FoldyLaxSystem& sys, std::span<const Vec3> directions) {
  FarField out;
  out.directions.assign(directions.begin(), directions.end());
  out.values.reserve(directions.size());
  for (const Vec3& beta : directions) {
    if (std::abs(norm(beta) - 1.0) > 1e-14) throw InvalidArgument("far-field directions must be unit vectors");
    out.values.push_back(sys.system().far_amplitude(beta, sys.values()));
  }
  return out;
}

}  // namespace scatterlab
