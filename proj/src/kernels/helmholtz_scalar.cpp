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

#include <cmath>

#include "scatterlab/kernels/helmholtz_sum.hpp"

namespace scatterlab::kernels::detail {

Complex helmholtz_sum_scalar(const Vec3& target, const SourceView& src, double k, double cutoff) {
  const double cutoff2 = cutoff * cutoff;
  double acc_re = 0.0;
  double acc_im = 0.0;
  const std::size_t n = src.size();
  for (std::size_t m = 0; m < n; ++m) {
    const double dx = target.x - src.x[m];
    const double dy = target.y - src.y[m];
    const double dz = target.z - src.z[m];
    const double r2 = dx * dx + dy * dy + dz * dz;
    if (r2 < cutoff2 || r2 == 0.0) continue;
    const double r = std::sqrt(r2);
    const double inv_r = 1.0 / r;
    const double kr = k * r;
    const double er = std::cos(kr) * inv_r;
    const double ei = std::sin(kr) * inv_r;
    acc_re += er * src.re[m] - ei * src.im[m];
    acc_im += er * src.im[m] + ei * src.re[m];
  }
  return {acc_re, acc_im};
}

}  // namespace scatterlab::kernels::detail
