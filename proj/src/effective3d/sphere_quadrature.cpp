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

#include "scatterlab/effective3d/sphere_quadrature.hpp"

#include <cmath>

#include <boost/math/special_functions/legendre.hpp>

#include "scatterlab/error.hpp"

namespace scatterlab {

SphereQuadrature product_sphere_quadrature(int n_theta) {
  if (n_theta < 2) throw InvalidArgument("sphere quadrature needs n_theta >= 2");
  const auto positive = boost::math::legendre_p_zeros<double>(n_theta);
  std::vector<double> mu;
  std::vector<double> w;
  for (double z : positive) {
    const double dp = boost::math::legendre_p_prime(n_theta, z);
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    mu.push_back(z);
    w.push_back(weight);
    if (z != 0.0) {
      mu.push_back(-z);
      w.push_back(weight);
    }
  }
  const int n_phi = 2 * n_theta;
  SphereQuadrature quad;
  for (std::size_t t = 0; t < mu.size(); ++t) {
    const double s = std::sqrt(std::max(0.0, 1.0 - mu[t] * mu[t]));
    for (int p = 0; p < n_phi; ++p) {
      const double phi = 2.0 * kPi * (p + 0.5) / n_phi;
      quad.nodes.push_back({s * std::cos(phi), s * std::sin(phi), mu[t]});
      quad.weights.push_back(w[t] * 2.0 * kPi / n_phi);
    }
  }
  return quad;
}

std::vector<Vec3> fibonacci_directions(std::size_t count) {
  std::vector<Vec3> out;
  out.reserve(count);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * double(i) + 1.0) / double(count);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * double(i);
    Vec3 d{s * std::cos(phi), s * std::sin(phi), z};
    out.push_back((1.0 / norm(d)) * d);
  }
  return out;
}

double optical_theorem_residual(const std::function<Complex(const Vec3&)>& amplitude, const Vec3& alpha, double k,
                                const SphereQuadrature& quad) {
  const double forward = amplitude(alpha).imag();
  double cross = 0.0;
  for (std::size_t i = 0; i < quad.nodes.size(); ++i) cross += quad.weights[i] * std::norm(amplitude(quad.nodes[i]));
  cross *= k / (4.0 * kPi);
  if (forward == 0.0) return cross == 0.0 ? 0.0 : std::abs(forward - cross) / cross;
  return std::abs(forward - cross) / std::abs(forward);
}

}  // namespace scatterlab
