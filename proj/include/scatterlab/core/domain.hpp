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

// Axis-aligned box or ball in R^3. Boxes are half-open [lo, hi) per axis so
// that adjacent boxes partition space; balls are open.
class BoundedDomain {
 public:
  enum class Kind { box, ball };

  static BoundedDomain box(const Vec3& lo, const Vec3& hi);
  static BoundedDomain ball(const Vec3& center, double radius);

  Kind kind() const { return kind_; }
  bool contains(const Vec3& x) const;
  double volume() const;

  // Distance from an interior point to the boundary (0 outside).
  double distance_to_boundary(const Vec3& x) const;

  Vec3 lower() const { return lo_; }
  Vec3 upper() const { return hi_; }
  Vec3 center() const { return 0.5 * (lo_ + hi_); }
  double radius() const { return radius_; }

 private:
  BoundedDomain(Kind kind, const Vec3& lo, const Vec3& hi, double radius)
      : kind_(kind), lo_(lo), hi_(hi), radius_(radius) {}

  Kind kind_;
  Vec3 lo_;
  Vec3 hi_;
  double radius_;
};

}  // namespace scatterlab
