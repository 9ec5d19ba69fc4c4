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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "scatterlab/core/vec3.hpp"

// Point-source Helmholtz sums
//
//   S(x) = sum_m  exp(i k r_m) / r_m * s_m,    r_m = |x - y_m| >= cutoff,
//
// the inner loop of every O(M^2) operator in the library. A scalar reference
// and an AVX2 variant are provided; the variant is chosen once at runtime from
// the CPU feature flags (override with SCATTERLAB_ISA=scalar|avx2 or set_isa).
// Sources closer than the cutoff are skipped so callers can treat near-field
// terms with ball-averaged weights.
namespace scatterlab::kernels {

enum class Isa { scalar, avx2 };

struct SourceView {
  std::span<const double> x, y, z;
  std::span<const double> re, im;

  std::size_t size() const { return x.size(); }
};

// Structure-of-arrays source storage with complex strengths.
class SourceArrays {
 public:
  SourceArrays() = default;
  explicit SourceArrays(std::span<const Vec3> positions);

  std::size_t size() const { return x_.size(); }
  void set_strength(std::size_t m, Complex s) {
    re_[m] = s.real();
    im_[m] = s.imag();
  }
  Vec3 position(std::size_t m) const { return {x_[m], y_[m], z_[m]}; }
  SourceView view() const { return {x_, y_, z_, re_, im_}; }

 private:
  std::vector<double> x_, y_, z_, re_, im_;
};

Complex helmholtz_sum(const Vec3& target, const SourceView& sources, double k, double cutoff);

Isa active_isa();
bool isa_available(Isa isa);
// Throws InvalidArgument when the requested variant is not usable on this CPU.
void set_isa(Isa isa);
std::string_view isa_name(Isa isa);

namespace detail {
Complex helmholtz_sum_scalar(const Vec3& target, const SourceView& sources, double k, double cutoff);
#if defined(SCATTERLAB_HAVE_AVX2)
Complex helmholtz_sum_avx2(const Vec3& target, const SourceView& sources, double k, double cutoff);
#endif
}  // namespace detail

}  // namespace scatterlab::kernels
