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

// Incident plane wave amplitude * exp(i k alpha.x).
class WaveContext {
 public:
  // alpha is normalized; it must already be a unit vector to within 1e-8.
  WaveContext(double k, const Vec3& alpha, Complex amplitude = 1.0);

  double k() const { return k_; }
  const Vec3& alpha() const { return alpha_; }
  Complex amplitude() const { return amplitude_; }

  Complex incident(const Vec3& x) const;
  double ka(double a) const { return k_ * a; }

 private:
  double k_;
  Vec3 alpha_;
  Complex amplitude_;
};

inline Complex incident_plane_wave(const WaveContext& ctx, const Vec3& x) { return ctx.incident(x); }

}  // namespace scatterlab
