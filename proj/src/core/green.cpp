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

#include "scatterlab/core/green.hpp"

#include "scatterlab/error.hpp"

namespace scatterlab {

Complex green3d(const Vec3& x, const Vec3& y, double k) {
  const double r = distance(x, y);
  if (r == 0.0) throw SingularKernelError("green3d evaluated at coincident points; use ball-averaged weights");
  return std::polar(1.0 / (4.0 * kPi * r), k * r);
}

Complex green1d(double x, double y, double k) {
  if (!(k > 0.0)) throw InvalidArgument("green1d needs k > 0");
  return -std::polar(1.0, k * std::abs(x - y)) / Complex(0.0, 2.0 * k);
}

double ball_kernel_weight(double r, double a) {
  if (r >= a) return ball_volume(a) / r;
  return 2.0 * kPi * (a * a - r * r / 3.0);
}

double ball_kernel_weight(const Vec3& x, const Vec3& center, double a) {
  return ball_kernel_weight(distance(x, center), a);
}

}  // namespace scatterlab
