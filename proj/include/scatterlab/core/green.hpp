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

#include "scatterlab/core/vec3.hpp"

namespace scatterlab {

// exp(ik|x-y|) / (4 pi |x-y|). Throws SingularKernelError for x == y.
Complex green3d(const Vec3& x, const Vec3& y, double k);

// -exp(ik|x-y|) / (2ik); bounded at x == y. Throws InvalidArgument for k <= 0.
Complex green1d(double x, double y, double k);

// Integral of 1/|x-y| over the ball |y - center| < a, as a function of
// r = |x - center|: V(a)/r outside, 2 pi (a^2 - r^2/3) inside.
double ball_kernel_weight(double r, double a);
double ball_kernel_weight(const Vec3& x, const Vec3& center, double a);

inline constexpr double ball_volume(double a) { return 4.0 * kPi * a * a * a / 3.0; }

}  // namespace scatterlab
