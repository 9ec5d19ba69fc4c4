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

#include "scatterlab/placement/riemann.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "scatterlab/error.hpp"

namespace scatterlab {

namespace {

constexpr std::array<double, 4> kGaussNodes{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                            0.8611363115940526};
constexpr std::array<double, 4> kGaussWeights{0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                              0.3478548451374538};

}  // namespace

double integrate_box(const BoundedDomain& domain, const ScalarField& integrand, int panels_per_axis) {
  if (panels_per_axis < 1) throw InvalidArgument("need at least one panel per axis");
  const Vec3 lo = domain.lower();
  const Vec3 hi = domain.upper();
  const int nodes = panels_per_axis * 4;
  std::array<std::vector<double>, 3> x;
  std::array<std::vector<double>, 3> w;
  for (int d = 0; d < 3; ++d) {
    const double panel = (hi[d] - lo[d]) / panels_per_axis;
    for (int p = 0; p < panels_per_axis; ++p) {
      const double mid = lo[d] + (p + 0.5) * panel;
      for (int g = 0; g < 4; ++g) {
        x[std::size_t(d)].push_back(mid + 0.5 * panel * kGaussNodes[std::size_t(g)]);
        w[std::size_t(d)].push_back(0.5 * panel * kGaussWeights[std::size_t(g)]);
      }
    }
  }
  double total = 0.0;
  for (int l = 0; l < nodes; ++l) {
    double plane = 0.0;
    for (int j = 0; j < nodes; ++j) {
      double line = 0.0;
      for (int i = 0; i < nodes; ++i) {
        const Vec3 p{x[0][std::size_t(i)], x[1][std::size_t(j)], x[2][std::size_t(l)]};
        if (domain.contains(p)) line += w[0][std::size_t(i)] * integrand(p);
      }
      plane += w[1][std::size_t(j)] * line;
    }
    total += w[2][std::size_t(l)] * plane;
  }
  return total;
}

std::vector<RiemannRow> riemann_limit_check(const ScalarField& f, const ScalarField& n, const BoundedDomain& domain,
                                            std::span<const double> radii, const PlacementOptions& options) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] < radii[i - 1])) throw InvalidArgument("radius sequence must be strictly decreasing");
  }
  const ScalarField fn([&f, &n](const Vec3& x) { return f(x) * n(x); },
                       std::min({f.lower_bound() * n.upper_bound(), f.upper_bound() * n.upper_bound(), 0.0}),
                       std::max({f.lower_bound() * n.upper_bound(), f.upper_bound() * n.upper_bound(), 0.0}));
  const double reference = integrate_box(domain, fn);

  std::vector<RiemannRow> rows;
  for (double a : radii) {
    const CountingLaw law{n, a, 3};
    const ScattererCloud cloud = place(domain, law, ScalarField::constant(0.0), options);
    double sum = 0.0;
    for (const Vec3& c : cloud.centers) sum += f(c);
    sum *= law.volume();
    RiemannRow row;
    row.a = a;
    row.count = cloud.size();
    row.sum = sum;
    row.integral = reference;
    row.relative_error = reference != 0.0 ? std::abs(sum - reference) / std::abs(reference) : std::abs(sum);
    rows.push_back(row);
  }
  return rows;
}

bool is_nonincreasing(std::span<const RiemannRow> rows, double slack) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].relative_error > (1.0 + slack) * rows[i - 1].relative_error) return false;
  }
  return true;
}

}  // namespace scatterlab
