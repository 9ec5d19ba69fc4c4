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

#include "scatterlab/core/wave.hpp"

#include <cmath>

#include "scatterlab/error.hpp"

namespace scatterlab {

WaveContext::WaveContext(double k, const Vec3& alpha, Complex amplitude)
    : k_(k), alpha_(alpha), amplitude_(amplitude) {
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("wavenumber k must be positive");
  const double len = norm(alpha);
  if (std::abs(len - 1.0) > 1e-8) throw InvalidArgument("incident direction alpha must be a unit vector");
  alpha_ = (1.0 / len) * alpha;
}

Complex WaveContext::incident(const Vec3& x) const { return amplitude_ * std::polar(1.0, k_ * dot(alpha_, x)); }

}  // namespace scatterlab
