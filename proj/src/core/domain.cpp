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

#include "scatterlab/core/domain.hpp"

#include <algorithm>
#include <cmath>

#include "scatterlab/error.hpp"

namespace scatterlab {

BoundedDomain BoundedDomain::box(const Vec3& lo, const Vec3& hi) {
  for (int d = 0; d < 3; ++d) {
    if (!(hi[d] > lo[d]) || !std::isfinite(lo[d]) || !std::isfinite(hi[d])) {
      throw InvalidArgument("box domain needs finite lo < hi on every axis");
    }
  }
  return BoundedDomain(Kind::box, lo, hi, 0.0);
}

BoundedDomain BoundedDomain::ball(const Vec3& center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgument("ball domain needs a finite positive radius");
  }
  const Vec3 r{radius, radius, radius};
  return BoundedDomain(Kind::ball, center - r, center + r, radius);
}

bool BoundedDomain::contains(const Vec3& x) const {
  if (kind_ == Kind::ball) {
    const Vec3 d = x - center();
    return dot(d, d) < radius_ * radius_;
  }
  return x.x >= lo_.x && x.x < hi_.x && x.y >= lo_.y && x.y < hi_.y && x.z >= lo_.z && x.z < hi_.z;
}

double BoundedDomain::volume() const {
  if (kind_ == Kind::ball) return 4.0 * kPi * radius_ * radius_ * radius_ / 3.0;
  return (hi_.x - lo_.x) * (hi_.y - lo_.y) * (hi_.z - lo_.z);
}

double BoundedDomain::distance_to_boundary(const Vec3& x) const {
  if (!contains(x)) return 0.0;
  if (kind_ == Kind::ball) return radius_ - distance(x, center());
  double d = hi_.x - lo_.x;
  for (int i = 0; i < 3; ++i) d = std::min({d, x[i] - lo_[i], hi_[i] - x[i]});
  return d;
}

}  // namespace scatterlab
