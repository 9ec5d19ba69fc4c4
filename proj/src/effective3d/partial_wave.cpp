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

#include "scatterlab/effective3d/partial_wave.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scatterlab/error.hpp"

namespace scatterlab {

namespace {

double sph_j(int l, double x) { return std::sph_bessel(unsigned(l), x); }
double sph_y(int l, double x) { return std::sph_neumann(unsigned(l), x); }

// f_l'(x) = f_{l-1}(x) - (l+1)/x f_l(x), and f_0' = -f_1.
double sph_j_prime(int l, double x) { return l == 0 ? -sph_j(1, x) : sph_j(l - 1, x) - (l + 1) / x * sph_j(l, x); }
double sph_y_prime(int l, double x) { return l == 0 ? -sph_y(1, x) : sph_y(l - 1, x) - (l + 1) / x * sph_y(l, x); }

Complex i_pow(int l) {
  switch (l % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

PartialWaveOracle partial_wave_solve(double depth, double radius, double k, int max_order, const Vec3& center) {
  if (!(k > 0.0)) throw InvalidArgument("partial-wave oracle needs k > 0");
  if (!(radius > 0.0)) throw InvalidArgument("partial-wave oracle needs a positive radius");
  if (max_order < 0) throw InvalidArgument("partial-wave order must be nonnegative");
  const double kappa2 = k * k - depth;
  if (!(kappa2 > 0.0)) {
    std::ostringstream os;
    os << "interior wavenumber squared k^2 - q0 = " << kappa2 << " <= 0 is not supported by the oracle";
    throw RegimeError(os.str());
  }
  PartialWaveOracle o;
  o.depth_ = depth;
  o.radius_ = radius;
  o.k_ = k;
  o.kappa_ = std::sqrt(kappa2);
  o.max_order_ = max_order;
  o.center_ = center;

  const double kr = k * radius;
  const double qr = o.kappa_ * radius;
  for (int l = 0; l <= max_order; ++l) {
    // Match the logarithmic derivative of j_l(kappa r) to cos(d) j_l(kr) - sin(d) y_l(kr).
    const double ji = sph_j(l, qr);
    const double dji = sph_j_prime(l, qr);
    const double num = k * sph_j_prime(l, kr) * ji - o.kappa_ * sph_j(l, kr) * dji;
    const double den = k * sph_y_prime(l, kr) * ji - o.kappa_ * sph_y(l, kr) * dji;
    const double delta = depth == 0.0 ? 0.0 : std::atan(num / den);
    o.delta_.push_back(delta);
    const Complex outer = i_pow(l) * double(2 * l + 1) * std::polar(1.0, delta) *
                          (std::cos(delta) * sph_j(l, kr) - std::sin(delta) * sph_y(l, kr));
    o.interior_.push_back(outer / ji);
  }
  return o;
}

Complex PartialWaveOracle::amplitude(double cos_theta) const {
  Complex s = 0.0;
  for (int l = 0; l <= max_order_; ++l) {
    const double d = delta_[std::size_t(l)];
    s += double(2 * l + 1) * std::polar(std::sin(d), d) * std::legendre(unsigned(l), cos_theta);
  }
  return s / k_;
}

Complex PartialWaveOracle::amplitude(const Vec3& beta, const Vec3& alpha) const {
  return std::polar(1.0, k_ * dot(alpha - beta, center_)) * amplitude(dot(alpha, beta));
}

Complex PartialWaveOracle::field(const Vec3& x, const Vec3& alpha) const {
  const Vec3 rel = x - center_;
  const double r = norm(rel);
  const Complex center_phase = std::polar(1.0, k_ * dot(alpha, center_));
  if (r == 0.0) return center_phase * interior_[0] * sph_j(0, 0.0);
  const double mu = std::clamp(dot(alpha, rel) / r, -1.0, 1.0);
  Complex s = 0.0;
  if (r < radius_) {
    for (int l = 0; l <= max_order_; ++l) {
      s += interior_[std::size_t(l)] * sph_j(l, kappa_ * r) * std::legendre(unsigned(l), mu);
    }
    return center_phase * s;
  }
  // Outgoing part: i^{l+1} (2l+1) exp(i d) sin(d) h_l(kr) P_l.
  const double kr = k_ * r;
  for (int l = 0; l <= max_order_; ++l) {
    const double d = delta_[std::size_t(l)];
    const Complex h(sph_j(l, kr), sph_y(l, kr));
    s += i_pow(l + 1) * double(2 * l + 1) * std::polar(std::sin(d), d) * h * std::legendre(unsigned(l), mu);
  }
  return std::polar(1.0, k_ * dot(alpha, x)) + center_phase * s;
}

}  // namespace scatterlab
